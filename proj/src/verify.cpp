#include "graphprod/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include <json.hpp>

#include "graphprod/cayley.hpp"
#include "graphprod/coset.hpp"
#include "graphprod/dynamics.hpp"
#include "graphprod/explore.hpp"
#include "graphprod/extension.hpp"
#include "graphprod/views.hpp"
#include "graphprod/word.hpp"

namespace graphprod {

namespace {

using nlohmann::json;

struct Suite {
  const DefiningGraph& graph;
  const VerifyOptions& opt;
  std::ostream& out;
  VerifyResult result;
  std::mt19937_64 rng;

  Suite(const DefiningGraph& g, const VerifyOptions& o, std::ostream& os)
      : graph(g), opt(o), out(os), rng(o.seed) {}

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  Word random_word(int max_len, const std::vector<VertexId>& allowed = {}) {
    Word w;
    const int len = static_cast<int>(pick(static_cast<std::size_t>(max_len) + 1));
    for (int i = 0; i < len; ++i) {
      const VertexId v = allowed.empty()
                             ? static_cast<VertexId>(pick(static_cast<std::size_t>(graph.num_vertices())))
                             : allowed[pick(allowed.size())];
      const int order = graph.group(v)->order();
      w.syllables.push_back(Syllable{v, 1 + static_cast<int>(pick(static_cast<std::size_t>(order - 1)))});
    }
    return w;
  }

  void emit(const std::string& name, bool pass, json details = json::object()) {
    ++result.checks_run;
    if (!pass) ++result.checks_failed;
    json line = {{"type", "check"}, {"check", name}, {"pass", pass}};
    if (!details.empty()) line["details"] = std::move(details);
    out << line.dump() << "\n";
  }
};

void check_lagrange(Suite& s) {
  bool pass = true;
  json witness;
  for (VertexId v = 0; v < s.graph.num_vertices() && pass; ++v) {
    const auto& g = *s.graph.group(v);
    for (int a = 0; a < g.order(); ++a) {
      if (g.order() % g.element_order(a) != 0) {
        pass = false;
        witness = {{"vertex", v}, {"elem", a}, {"order", g.element_order(a)}};
        break;
      }
    }
  }
  s.emit("element_order_divides_group_order", pass, witness);
}

void check_normal_forms(Suite& s) {
  bool round_trip = true, idempotent = true, subwords = true;
  json witness;
  for (int i = 0; i < s.opt.word_samples; ++i) {
    const Word w = s.random_word(s.opt.max_word_length);
    const NormalForm g = normal_form(w, s.graph);
    const NormalForm gi = invert(g, s.graph);
    if (!multiply(g, gi, s.graph).is_identity() || gi.length() != g.length()) {
      round_trip = false;
      witness = {{"word", g.key()}};
    }
    Word again;
    again.syllables = g.syllables();
    if (normal_form(again, s.graph) != g) {
      idempotent = false;
      witness = {{"word", g.key()}};
    }
    const auto& syls = g.syllables();
    for (std::size_t a = 0; a < syls.size() && subwords; ++a) {
      for (std::size_t b = a; b < syls.size() && subwords; ++b) {
        std::span<const Syllable> sub(syls.data() + a, b - a + 1);
        if (!is_geodesic_word(sub, s.graph)) {
          subwords = false;
          witness = {{"word", g.key()}, {"from", a}, {"to", b}};
        }
      }
    }
  }
  s.emit("normal_form_round_trip", round_trip, round_trip ? json::object() : witness);
  s.emit("normal_form_idempotent", idempotent, idempotent ? json::object() : witness);
  s.emit("normal_form_subwords_geodesic", subwords, subwords ? json::object() : witness);
}

void check_shuffles(Suite& s) {
  bool confluent = true, invariant = true, overflowed = false;
  json witness;
  for (int i = 0; i < s.opt.word_samples / 2; ++i) {
    const NormalForm g = normal_form(s.random_word(s.opt.max_word_length), s.graph);
    const auto shuffles = enumerate_normal_forms(g, 4096, s.graph);
    if (shuffles.overflow) {
      overflowed = true;
      continue;
    }
    for (const auto& member : shuffles.words) {
      Word w;
      w.syllables = member;
      const NormalForm back = normal_form(w, s.graph);
      if (back != g) {
        confluent = false;
        witness = {{"canonical", g.key()}};
      }
      std::set<VertexId> supp;
      for (const Syllable& syl : member) supp.insert(syl.vertex);
      if (member.size() != g.length() || supp != support(g)) {
        invariant = false;
        witness = {{"canonical", g.key()}};
      }
    }
  }
  s.emit("shuffle_class_confluent", confluent,
         confluent ? json{{"overflow_skipped", overflowed}} : witness);
  s.emit("shuffle_class_support_length_invariant", invariant,
         invariant ? json::object() : witness);
}

void check_in_rf_two_routes(Suite& s) {
  bool agree = true;
  json witness;
  for (int i = 0; i < s.opt.word_samples / 2 && agree; ++i) {
    const NormalForm g = normal_form(s.random_word(s.opt.max_word_length), s.graph);
    std::set<VertexId> F;
    for (VertexId v = 0; v < s.graph.num_vertices(); ++v) {
      if (s.pick(2)) F.insert(v);
    }
    const bool scan = in_RF(g, F, s.graph);
    const auto shuffles = enumerate_normal_forms(g, 4096, s.graph);
    if (shuffles.overflow) continue;
    bool any_starts_in_F = false;
    for (const auto& member : shuffles.words) {
      if (!member.empty() && F.count(member.front().vertex)) {
        any_starts_in_F = true;
        break;
      }
    }
    if (scan != !any_starts_in_F) {
      agree = false;
      json fset = json::array();
      for (VertexId v : F) fset.push_back(v);
      witness = {{"word", g.key()}, {"F", fset}, {"scan", scan}};
    }
  }
  s.emit("in_RF_scan_matches_shuffle_route", agree, witness);
}

std::vector<std::set<VertexId>> standard_F_family(const DefiningGraph& graph) {
  std::vector<std::set<VertexId>> family;
  family.push_back({});
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    family.push_back({v});
    const auto st = graph.star(v);
    family.emplace_back(st.begin(), st.end());
  }
  std::set<VertexId> all;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) all.insert(v);
  family.push_back(all);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

void check_coset_laws(Suite& s) {
  CayleyGraph cayley(s.graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), s.opt.cayley_radius, s.opt.vertex_cap);
  if (ball.core.budget_exhausted) s.result.truncated = true;
  bool factorization = true, left_law = true, equivalence = true, rep_constant = true;
  json witness;
  const auto family = standard_F_family(s.graph);
  for (const auto& F : family) {
    std::vector<VertexId> f_vec(F.begin(), F.end());
    for (const NormalForm& g : ball.verts) {
      const CosetDecomposition d = decompose(g, F, s.graph);
      if (multiply(d.p, d.r, s.graph) != g || !in_FG(d.p, F, s.graph) ||
          !in_RF(d.r, F, s.graph)) {
        factorization = false;
        witness = {{"word", g.key()}};
      }
      // p_F(hg) = h p_F(g) for sampled h in the F-subgroup.
      if (!F.empty()) {
        const NormalForm h = normal_form(s.random_word(3, f_vec), s.graph);
        const NormalForm hg = multiply(h, g, s.graph);
        if (decompose(hg, F, s.graph).p != multiply(h, d.p, s.graph)) {
          left_law = false;
          witness = {{"word", g.key()}, {"h", h.key()}};
        }
        const NormalForm rep = left_coset_rep(g, F, s.graph);
        if (rep != left_coset_rep(multiply(g, h, s.graph), F, s.graph)) {
          rep_constant = false;
          witness = {{"word", g.key()}, {"h", h.key()}};
        }
      }
      // The three-way equivalence for right multiplication by a syllable.
      for (VertexId v = 0; v < s.graph.num_vertices(); ++v) {
        const auto link = s.graph.link(v);
        const std::set<VertexId> lk(link.begin(), link.end());
        for (int e = 1; e < s.graph.group(v)->order(); ++e) {
          Word hw;
          hw.syllables.push_back(Syllable{v, e});
          const NormalForm h = normal_form(hw, s.graph);
          const NormalForm gh = multiply(g, h, s.graph);
          const CosetDecomposition dh = decompose(gh, F, s.graph);
          const bool changed = dh.p != d.p;
          const auto supp_r = support(d.r);
          const bool cond = F.count(v) != 0 &&
                            std::includes(lk.begin(), lk.end(), supp_r.begin(), supp_r.end());
          const bool appended = dh.p == multiply(d.p, h, s.graph);
          if (changed != cond || changed != appended) {
            equivalence = false;
            witness = {{"word", g.key()}, {"vertex", v}, {"elem", e}};
          }
        }
      }
    }
  }
  s.emit("coset_factorization_sound", factorization, witness);
  s.emit("coset_left_multiplication_law", left_law, witness);
  s.emit("coset_change_equivalence", equivalence, witness);
  s.emit("left_coset_rep_constant_on_cosets", rep_constant, witness);
}

void check_word_metric(Suite& s) {
  CayleyGraph cayley(s.graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), s.opt.cayley_radius, s.opt.vertex_cap);
  if (ball.core.budget_exhausted) s.result.truncated = true;
  bool metric = true, oracle = true;
  json witness;
  for (std::size_t i = 0; i < ball.core.size(); ++i) {
    if (ball.core.dist[i] != static_cast<int>(ball.verts[i].length())) {
      metric = false;
      witness = {{"word", ball.core.keys[i]}, {"bfs", ball.core.dist[i]}};
    }
    if (cayley.distance(cayley.origin(), ball.verts[i]) != ball.core.dist[i]) {
      oracle = false;
      witness = {{"word", ball.core.keys[i]}};
    }
  }
  s.emit("word_metric_equals_syllable_length", metric, witness);
  s.emit("distance_oracle_matches_bfs", oracle, witness);

  // Sphere sizes from the identity match sphere sizes from a sampled vertex.
  if (!ball.verts.empty()) {
    const auto& other = ball.verts[s.pick(ball.verts.size())];
    const auto shifted = ball_bfs(cayley, other, s.opt.cayley_radius, s.opt.vertex_cap);
    const bool transitive = !shifted.core.budget_exhausted && !ball.core.budget_exhausted
                                ? shifted.core.sphere_sizes() == ball.core.sphere_sizes()
                                : true;
    s.emit("sphere_sizes_vertex_transitive", transitive,
           json{{"base", other.key()}});
  }
}

void check_triangle_bound(Suite& s) {
  CayleyGraph cayley(s.graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), 2, s.opt.vertex_cap);
  bool pass = true;
  json witness;
  for (std::size_t i = 0; i < ball.core.size() && pass; ++i) {
    const auto edge_ball = ball_bfs(cayley, ball.verts[i], 1, s.opt.vertex_cap);
    for (const auto& [nbr, label] : cayley.labeled_neighbors(ball.verts[i])) {
      const int a = 0;
      const int b = edge_ball.core.index_of(nbr.key());
      if (b < 0) continue;
      const auto circuits = circuits_through_edge_core(edge_ball.core, a, b, 3);
      const std::size_t bound = static_cast<std::size_t>(s.graph.group(label.vertex)->order()) *
                                static_cast<std::size_t>(s.graph.group(label.vertex)->order());
      if (circuits.circuits.size() > bound) {
        pass = false;
        witness = {{"edge_tail", ball.core.keys[i]},
                   {"label_vertex", label.vertex},
                   {"count", circuits.circuits.size()}};
        break;
      }
    }
  }
  s.emit("triangle_count_bounded_by_group_order_squared", pass, witness);
}

void check_extension(Suite& s) {
  bool embeds = true, canonical = true, stab_law = true, adjacency = true;
  json witness;
  // The defining graph embeds as the conjugator-free slice.
  for (VertexId u = 0; u < s.graph.num_vertices() && embeds; ++u) {
    for (VertexId v = 0; v < s.graph.num_vertices() && embeds; ++v) {
      if (u == v) continue;
      const ExtVertex xu = canonicalize_ext(u, NormalForm(), s.graph);
      const ExtVertex xv = canonicalize_ext(v, NormalForm(), s.graph);
      if (ext_adjacent(xu, xv, s.graph) != s.graph.adjacent(u, v)) {
        embeds = false;
        witness = {{"u", u}, {"v", v}};
      }
    }
  }
  s.emit("defining_graph_embeds_in_extension_graph", embeds, witness);

  // Canonicalization: idempotent and constant on stabilizer cosets.
  for (int i = 0; i < s.opt.word_samples / 2 && canonical; ++i) {
    const VertexId v = static_cast<VertexId>(s.pick(static_cast<std::size_t>(s.graph.num_vertices())));
    const NormalForm g = normal_form(s.random_word(s.opt.max_word_length), s.graph);
    const ExtVertex x = canonicalize_ext(v, g, s.graph);
    if (canonicalize_ext(v, x.conjugator, s.graph) != x) {
      canonical = false;
      witness = {{"vertex", v}, {"g", g.key()}};
    }
    const NormalForm h = normal_form(s.random_word(4, s.graph.star(v)), s.graph);
    if (canonicalize_ext(v, multiply(g, h, s.graph), s.graph) != x) {
      canonical = false;
      witness = {{"vertex", v}, {"g", g.key()}, {"h", h.key()}};
    }
  }
  s.emit("ext_canonicalization_idempotent_coset_constant", canonical, witness);

  // Stabilizer test agrees with the support criterion on a small ball.
  CayleyGraph cayley(s.graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), s.opt.cayley_radius, s.opt.vertex_cap);
  for (const NormalForm& g : ball.verts) {
    for (VertexId v = 0; v < s.graph.num_vertices(); ++v) {
      const auto st = s.graph.star(v);
      const std::set<VertexId> st_set(st.begin(), st.end());
      const auto supp = support(g);
      const bool by_support =
          std::includes(st_set.begin(), st_set.end(), supp.begin(), supp.end());
      if (ext_stabilizer_test(g, v, s.graph) != by_support) {
        stab_law = false;
        witness = {{"word", g.key()}, {"vertex", v}};
      }
    }
  }
  s.emit("ext_stabilizer_iff_support_in_star", stab_law, witness);

  // Adjacency is symmetric and irreflexive across the window candidates.
  const ExtVertex root = canonicalize_ext(0, NormalForm(), s.graph);
  ExtensionGraphWindow window(s.graph, s.opt.ext_window, root);
  const auto& cands = window.candidates();
  for (std::size_t i = 0; i < cands.size() && adjacency; ++i) {
    if (ext_adjacent(cands[i], cands[i], s.graph)) {
      adjacency = false;
      witness = {{"x", cands[i].key()}};
    }
    for (std::size_t j = i + 1; j < cands.size() && adjacency; ++j) {
      if (ext_adjacent(cands[i], cands[j], s.graph) !=
          ext_adjacent(cands[j], cands[i], s.graph)) {
        adjacency = false;
        witness = {{"x", cands[i].key()}, {"y", cands[j].key()}};
      }
    }
  }
  s.emit("ext_adjacency_symmetric_irreflexive", adjacency,
         json{{"candidates", cands.size()}});

  // Windowed neighborhoods grow monotonically with the window.
  bool monotone = true;
  const auto n0 = ext_neighbors_windowed(root, 0, s.graph);
  const auto n1 = ext_neighbors_windowed(root, s.opt.ext_window, s.graph);
  std::set<std::string> keys1;
  for (const auto& x : n1) keys1.insert(x.key());
  for (const auto& x : n0) {
    if (!keys1.count(x.key())) monotone = false;
  }
  s.emit("ext_window_monotone", monotone,
         json{{"window0", n0.size()}, {"window1", n1.size()}});
}

void check_p_sets(Suite& s) {
  CayleyGraph cayley(s.graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), s.opt.cayley_radius, s.opt.vertex_cap);
  const auto whole = restricted_p_set(ball.core, {});
  bool identity_law = whole.size() == ball.core.size();
  // Antitone under growing I: block random origin edges.
  bool antitone = true;
  std::set<std::pair<int, int>> blocked;
  std::vector<int> previous = whole;
  for (int round = 0; round < 3 && !ball.core.adj[0].empty(); ++round) {
    blocked.emplace(0, ball.core.adj[0][s.pick(ball.core.adj[0].size())]);
    const auto current = restricted_p_set(ball.core, blocked);
    if (!std::includes(previous.begin(), previous.end(), current.begin(), current.end())) {
      antitone = false;
    }
    previous = current;
  }
  s.emit("p_set_empty_I_is_whole_ball", identity_law, json{{"ball", ball.core.size()}});
  s.emit("p_set_antitone_in_I", antitone, json::object());
}

void check_geodesics(Suite& s) {
  CayleyGraph cayley(s.graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), s.opt.cayley_radius, s.opt.vertex_cap);
  bool increasing = true;
  json witness;
  for (int i = 0; i < 10 && !ball.verts.empty() && increasing; ++i) {
    const int target = static_cast<int>(s.pick(ball.core.size()));
    const auto geos = geodesic_paths(ball.core, 0, target, 500);
    for (const auto& path : geos.paths) {
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (ball.core.dist[path[k]] != static_cast<int>(k)) {
          increasing = false;
          witness = {{"target", ball.core.keys[static_cast<std::size_t>(target)]}};
        }
      }
    }
  }
  s.emit("geodesics_strictly_increasing_labels", increasing, witness);
}

void check_four_point_monotone(Suite& s) {
  CayleyGraph cayley(s.graph);
  const int r1 = std::max(1, s.opt.cayley_radius - 1);
  const int r2 = s.opt.cayley_radius;
  const auto d1 = four_point_delta(cayley, cayley.origin(), r1, s.opt.vertex_cap);
  const auto d2 = four_point_delta(cayley, cayley.origin(), r2, s.opt.vertex_cap);
  const bool pass = (!d1.exhaustive || !d2.exhaustive) || d1.delta <= d2.delta;
  s.emit("four_point_delta_monotone_in_radius", pass,
         json{{"delta_small", d1.delta}, {"delta_large", d2.delta}});
}

void check_girth_two_routes(Suite& s) {
  const auto direct = s.graph.girth();
  FiniteGraphView view(s.graph);
  std::optional<int> explored;
  std::vector<bool> seen(static_cast<std::size_t>(view.num_vertices()), false);
  for (int v = 0; v < view.num_vertices(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    const auto snap = ball_bfs(view, v, view.num_vertices() + 1);
    for (const auto& key : snap.core.keys) seen[static_cast<std::size_t>(std::stoi(key))] = true;
    const auto found = min_circuit_in_explored(snap.core);
    if (found && (!explored || *found < *explored)) explored = found;
  }
  const bool pass = direct == explored;
  json details;
  details["direct"] = direct ? json(*direct) : json("inf");
  details["explorer"] = explored ? json(*explored) : json("inf");
  s.emit("defining_graph_girth_two_routes", pass, details);
}

void check_bounded_order(Suite& s) {
  bool pass = true;
  json witness;
  for (int i = 0; i < 20 && pass; ++i) {
    const NormalForm g = normal_form(s.random_word(3), s.graph);
    const OrderStatus st = bounded_order(g, 24, s.graph);
    if (!st.finite()) continue;
    const int n = *st.order;
    for (int k = 1; k <= 4; ++k) {
      NormalForm gk;
      for (int j = 0; j < k; ++j) gk = multiply(gk, g, s.graph);
      const OrderStatus stk = bounded_order(gk, 24, s.graph);
      if (!stk.finite() || *stk.order != n / std::gcd(n, k)) {
        pass = false;
        witness = {{"word", g.key()}, {"k", k}};
      }
    }
  }
  s.emit("bounded_order_power_consistency", pass, witness);
}

}  // namespace

VerifyResult run_verify(const DefiningGraph& graph, const VerifyOptions& options,
                        std::ostream& out) {
  Suite s(graph, options, out);
  out << json{{"type", "config"},
              {"seed", options.seed},
              {"word_samples", options.word_samples},
              {"max_word_length", options.max_word_length},
              {"cayley_radius", options.cayley_radius},
              {"vertex_cap", options.vertex_cap},
              {"ext_window", options.ext_window}}
             .dump()
      << "\n";
  check_lagrange(s);
  check_normal_forms(s);
  check_shuffles(s);
  check_in_rf_two_routes(s);
  check_coset_laws(s);
  check_word_metric(s);
  check_triangle_bound(s);
  check_extension(s);
  check_p_sets(s);
  check_geodesics(s);
  check_four_point_monotone(s);
  check_girth_two_routes(s);
  check_bounded_order(s);
  out << json{{"type", "summary"},
              {"checks", s.result.checks_run},
              {"failed", s.result.checks_failed},
              {"truncated", s.result.truncated}}
             .dump()
      << "\n";
  return s.result;
}

}  // namespace graphprod
