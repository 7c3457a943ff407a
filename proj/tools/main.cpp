// Command-line front end: load fixtures, run normal-form / coset / graph
// probes, emit JSON-lines (default), DOT, or plain text reports.
//
// Exit codes: 0 ok, 1 invalid input, 2 budget exhausted (partial results
// were emitted and flagged), 3 invariant-suite failure.

#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphprod/cayley.hpp"
#include "graphprod/coset.hpp"
#include "graphprod/dynamics.hpp"
#include "graphprod/error.hpp"
#include "graphprod/explore.hpp"
#include "graphprod/extension.hpp"
#include "graphprod/io.hpp"
#include "graphprod/verify.hpp"
#include "graphprod/views.hpp"
#include "graphprod/wreath.hpp"
#include "graphprod/word.hpp"

namespace {

using graphprod::CayleyGraph;
using graphprod::DefiningGraph;
using graphprod::ExtVertex;
using graphprod::NormalForm;
using graphprod::VertexId;
using graphprod::Word;
using nlohmann::json;

struct Options {
  std::string graph_path;
  std::string action_path;
  std::string word;
  std::string word2;
  std::string actor;
  std::string actor2;
  std::string to;
  std::string label;
  std::string format = "json";
  std::vector<int> F;
  std::vector<std::string> edge_sets;
  std::vector<std::string> seq;
  int radius = 3;
  int window = 1;
  int n = 4;
  int delta = 4;
  int order_bound = 50;
  int vertex = 0;
  int nbr = -1;
  int elem = 1;
  std::size_t cap = 200000;
  uint64_t seed = 0;
};

bool g_truncated = false;

void emit(const json& line) { std::cout << line.dump() << "\n"; }

json budget_header(const std::string& cmd, const Options& opt) {
  return json{{"type", "config"},
              {"cmd", cmd},
              {"radius", opt.radius},
              {"window", opt.window},
              {"cap", opt.cap},
              {"order_bound", opt.order_bound},
              {"seed", opt.seed}};
}

NormalForm word_arg(const std::string& text, const DefiningGraph& graph) {
  return normal_form(graphprod::parse_word(text), graph);
}

std::set<VertexId> f_arg(const Options& opt) {
  return std::set<VertexId>(opt.F.begin(), opt.F.end());
}

ExtVertex ext_vertex_arg(const std::string& token, const DefiningGraph& graph) {
  const auto bar = token.find('|');
  const VertexId base = std::stoi(token.substr(0, bar));
  NormalForm conj;
  if (bar != std::string::npos) {
    conj = word_arg(token.substr(bar + 1), graph);
  }
  return canonicalize_ext(base, conj, graph);
}

json ball_record(const graphprod::ExploredBall& ball) {
  json spheres = json::array();
  for (std::size_t size : ball.sphere_sizes()) spheres.push_back(size);
  return json{{"type", "ball"},
              {"radius_completed", ball.radius_completed},
              {"vertices", ball.size()},
              {"edges", ball.edge_count()},
              {"sphere_sizes", spheres},
              {"complete", ball.complete},
              {"truncated", ball.budget_exhausted}};
}

void run_graph_info(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  if (opt.format == "dot") {
    std::cout << graphprod::export_defining_graph_dot(graph);
    return;
  }
  const auto girth = graph.girth();
  const auto rep = graph.finiteness_predicates();
  json leaves = json::array(), non_leaves = json::array(), link_sizes = json::array();
  for (VertexId v : rep.leaves) leaves.push_back(v);
  for (VertexId v : rep.non_leaves) non_leaves.push_back(v);
  for (int s : rep.link_minus_leaf_size) link_sizes.push_back(s);
  emit(budget_header("graph", opt));
  emit(json{{"type", "graph_report"},
            {"vertices", graph.num_vertices()},
            {"edges", graph.edges().size()},
            {"girth", girth ? json(*girth) : json("inf")},
            {"girth_gt_4", !girth || *girth > 4},
            {"girth_gt_20", !girth || *girth > 20},
            {"leaves", leaves},
            {"non_leaves", non_leaves},
            {"non_leaf_count", rep.non_leaves.size()},
            {"link_minus_leaf_sizes", link_sizes},
            {"diameter", rep.diameter ? json(*rep.diameter) : json("inf")},
            {"diam_gt_1", rep.diam_gt_1},
            {"diam_gt_2", rep.diam_gt_2},
            {"truncated", false}});
}

void run_nf(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const NormalForm g = word_arg(opt.word, graph);
  if (opt.format == "text") {
    std::cout << g.key() << "\n";
    return;
  }
  json supp = json::array();
  for (VertexId v : support(g)) supp.push_back(v);
  emit(budget_header("nf", opt));
  emit(json{{"type", "normal_form"},
            {"word", g.key()},
            {"length", g.length()},
            {"support", supp},
            {"truncated", false}});
}

void run_coset(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const NormalForm g = word_arg(opt.word, graph);
  const auto F = f_arg(opt);
  const auto d = graphprod::decompose(g, F, graph);
  const bool in_rf = graphprod::in_RF(g, F, graph);
  const bool in_fg = graphprod::in_FG(g, F, graph);
  const NormalForm rep = graphprod::left_coset_rep(g, F, graph);
  if (opt.format == "text") {
    std::cout << "p = " << d.p.key() << "\nr = " << d.r.key() << "\n";
    return;
  }
  emit(budget_header("coset", opt));
  emit(json{{"type", "coset"},
            {"word", g.key()},
            {"p", d.p.key()},
            {"r", d.r.key()},
            {"in_RF", in_rf},
            {"in_FG", in_fg},
            {"left_coset_rep", rep.key()},
            {"truncated", false}});
}

void run_cayley_ball(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  const auto snap = ball_bfs(cayley, cayley.origin(), opt.radius, opt.cap);
  g_truncated |= snap.core.budget_exhausted;
  if (opt.format == "dot") {
    std::cout << graphprod::export_dot(snap.core, "cayley_ball");
    return;
  }
  if (opt.format == "text") {
    std::cout << "vertices " << snap.core.size() << ", edges " << snap.core.edge_count() << "\n";
    return;
  }
  emit(budget_header("cayley ball", opt));
  emit(ball_record(snap.core));
  for (std::size_t i = 0; i < snap.core.size(); ++i) {
    emit(json{{"type", "vertex"}, {"word", snap.core.keys[i]}, {"dist", snap.core.dist[i]}});
  }
}

void run_cayley_geodesics(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  const NormalForm a = word_arg(opt.word, graph);
  const NormalForm b = word_arg(opt.to, graph);
  const auto snap = ball_bfs_to_target(cayley, a, b, opt.cap);
  const int target = snap.core.index_of(b.key());
  const auto geos = geodesic_paths(snap.core, 0, target, opt.cap);
  g_truncated |= geos.truncated;
  emit(budget_header("cayley geodesics", opt));
  for (const auto& path : geos.paths) {
    json verts = json::array();
    for (int idx : path) verts.push_back(snap.core.keys[static_cast<std::size_t>(idx)]);
    emit(json{{"type", "geodesic"}, {"path", verts}});
  }
  emit(json{{"type", "summary"},
            {"count", geos.paths.size()},
            {"distance", snap.core.dist[target]},
            {"truncated", geos.truncated}});
}

void run_cayley_girth(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  graphprod::GirthOptions gopt;
  gopt.search_radius = opt.radius;
  gopt.cap = opt.cap;
  const auto res = girth(cayley, cayley.origin(), gopt);
  emit(budget_header("cayley girth", opt));
  emit(json{{"type", "girth"},
            {"value", res.to_string()},
            {"truncated", res.kind == graphprod::GirthResult::Kind::Unknown}});
  if (opt.format == "text") std::cout << res.to_string() << "\n";
}

void run_cayley_circuits(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  const NormalForm tail = word_arg(opt.word, graph);
  const Word label_word = graphprod::parse_word(opt.label);
  if (label_word.syllables.size() != 1) {
    throw graphprod::Error("VertexGroupMismatch", "--label must be a single syllable v:e");
  }
  const NormalForm head = multiply(tail, normal_form(label_word, graph), graph);
  const auto snap = ball_bfs(cayley, tail, opt.n / 2, opt.cap);
  g_truncated |= snap.core.budget_exhausted;
  const int b = snap.core.index_of(head.key());
  if (b < 0) throw graphprod::Error("UnknownVertex", "edge head not in explored ball");
  const auto circuits = circuits_through_edge_core(snap.core, 0, b, opt.n, opt.cap);
  g_truncated |= circuits.truncated;
  emit(budget_header("cayley circuits", opt));
  std::size_t based = 0;
  for (const auto& cycle : circuits.circuits) {
    json verts = json::array();
    for (int idx : cycle) verts.push_back(snap.core.keys[static_cast<std::size_t>(idx)]);
    emit(json{{"type", "circuit"}, {"length", cycle.size()}, {"cycle", verts}});
    based += 2 * cycle.size();
  }
  emit(json{{"type", "summary"},
            {"count", circuits.circuits.size()},
            {"based_count", based},
            {"n", opt.n},
            {"exact", !snap.core.budget_exhausted && !circuits.truncated},
            {"truncated", snap.core.budget_exhausted || circuits.truncated}});
}

void run_cayley_delta(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  const auto est = hyperbolicity_estimate(cayley, cayley.origin(), opt.radius, opt.cap,
                                          std::size_t(4) << 30, opt.seed);
  g_truncated |= est.truncated;
  emit(budget_header("cayley delta", opt));
  emit(json{{"type", "delta_estimate"},
            {"delta_four_point", est.delta_four_point},
            {"delta_bigon", est.delta_bigon},
            {"interior_max", est.interior_max},
            {"radius_tested", est.radius_tested},
            {"exhaustive", est.exhaustive},
            {"truncated", est.truncated}});
}

void run_cayley_fineness(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  // Sample: every labeled edge leaving the ball of the requested radius.
  const auto ball = ball_bfs(cayley, cayley.origin(), opt.radius, opt.cap);
  g_truncated |= ball.core.budget_exhausted;
  std::vector<std::pair<NormalForm, NormalForm>> edges;
  for (const auto& tail : ball.verts) {
    for (const auto& [head, label] : cayley.labeled_neighbors(tail)) {
      edges.emplace_back(tail, head);
    }
  }
  const auto table = fineness_probe(cayley, edges, opt.n, opt.cap);
  g_truncated |= table.truncated;
  emit(budget_header("cayley fineness", opt));
  for (std::size_t e = 0; e < table.counts.size(); ++e) {
    json counts = json::array();
    for (std::size_t c : table.counts[e]) counts.push_back(c);
    emit(json{{"type", "edge_profile"}, {"edge", table.edge_names[e]}, {"counts", counts}});
  }
  json fmax = json::array();
  for (std::size_t c : table.max_per_n) fmax.push_back(c);
  emit(json{{"type", "summary"},
            {"edges", table.counts.size()},
            {"n_max", table.n_max},
            {"empirical_f", fmax},
            {"truncated", table.truncated}});
}

void run_cayley_bigon(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  CayleyGraph cayley(graph);
  const auto res = bigon_check(cayley, cayley.origin(), opt.radius, opt.delta, 2, opt.cap);
  g_truncated |= res.truncated;
  emit(budget_header("cayley bigon", opt));
  json line{{"type", "bigon_check"},
            {"pass", res.pass},
            {"delta", opt.delta},
            {"max_delta", res.max_delta},
            {"max_interior", res.max_interior},
            {"bigons_checked", res.bigons_checked},
            {"truncated", res.truncated}};
  if (res.witness) {
    line["witness"] = json{{"kind", res.witness->kind},
                           {"a", res.witness->a},
                           {"b", res.witness->b},
                           {"c", res.witness->c},
                           {"p", res.witness->p},
                           {"q", res.witness->q},
                           {"vertex", res.witness->vertex}};
  }
  emit(line);
}

void run_ext_ball(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const ExtVertex root = canonicalize_ext(opt.vertex, NormalForm(), graph);
  graphprod::ExtensionGraphWindow window(graph, opt.window, root);
  const auto snap = ball_bfs(window, root, opt.radius, opt.cap);
  g_truncated |= snap.core.budget_exhausted;
  if (opt.format == "dot") {
    std::vector<std::string> color_class;
    for (const ExtVertex& x : snap.verts) {
      color_class.push_back("base " + std::to_string(x.base));
    }
    std::cout << graphprod::export_dot(snap.core, "extension_ball", color_class);
    return;
  }
  emit(budget_header("ext ball", opt));
  emit(ball_record(snap.core));
  for (std::size_t i = 0; i < snap.core.size(); ++i) {
    emit(json{{"type", "ext_vertex"},
              {"key", snap.core.keys[i]},
              {"base", snap.verts[i].base},
              {"conjugator", snap.verts[i].conjugator.key()},
              {"dist", snap.core.dist[i]}});
  }
}

void run_ext_link(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const ExtVertex x = canonicalize_ext(opt.vertex, word_arg(opt.word, graph), graph);
  const auto nbrs = ext_neighbors_windowed(x, opt.window, graph);
  emit(budget_header("ext link", opt));
  for (const ExtVertex& y : nbrs) {
    emit(json{{"type", "ext_vertex"}, {"key", y.key()}, {"base", y.base}});
  }
  emit(json{{"type", "summary"},
            {"count", nbrs.size()},
            {"window", opt.window},
            {"link_complete_claim", false},
            {"truncated", false}});
}

void run_ext_act(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const NormalForm g = word_arg(opt.word, graph);
  const ExtVertex x = ext_vertex_arg(opt.to, graph);
  const ExtVertex image = ext_act(g, x, graph);
  emit(budget_header("ext act", opt));
  emit(json{{"type", "ext_act"},
            {"g", g.key()},
            {"x", x.key()},
            {"image", image.key()},
            {"truncated", false}});
}

void run_ext_stab(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const NormalForm g = word_arg(opt.word, graph);
  const bool fixes = ext_stabilizer_test(g, opt.vertex, graph);
  emit(budget_header("ext stab", opt));
  emit(json{{"type", "ext_stabilizer"},
            {"g", g.key()},
            {"vertex", opt.vertex},
            {"stabilizes", fixes},
            {"truncated", false}});
}

// Finite-radius dynamics never classify elements as parabolic or loxodromic;
// that caveat rides along in every report header.
json dyn_header(const std::string& cmd, const Options& opt) {
  json header = budget_header(cmd, opt);
  header["note"] = "finite-radius data only: order bounds and fixed/orbit sets, "
                   "no parabolic/loxodromic classification";
  return header;
}

void run_dyn_order(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const NormalForm g = word_arg(opt.word, graph);
  const auto st = bounded_order(g, opt.order_bound, graph);
  emit(dyn_header("dyn order", opt));
  json line{{"type", "order"}, {"g", g.key()}, {"bound", st.bound}, {"truncated", false}};
  // Order bounds only; no claim of infinite order is ever made.
  if (st.finite()) {
    line["status"] = "finite";
    line["order"] = *st.order;
  } else {
    line["status"] = "exceeds_bound";
  }
  emit(line);
}

void run_dyn_fixed(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const NormalForm g = word_arg(opt.word, graph);
  const ExtVertex root = canonicalize_ext(opt.vertex, NormalForm(), graph);
  const auto rep = fixed_ext_vertices(g, root, opt.window, opt.radius, opt.cap, graph);
  g_truncated |= rep.truncated;
  emit(budget_header("dyn fixed", opt));
  for (const ExtVertex& x : rep.fixed) {
    emit(json{{"type", "fixed_vertex"}, {"key", x.key()}});
  }
  emit(json{{"type", "summary"},
            {"fixed", rep.fixed.size()},
            {"ball", rep.ball_size},
            {"truncated", rep.truncated}});
}

void run_dyn_wander(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  std::vector<NormalForm> seq;
  for (const std::string& w : opt.seq) seq.push_back(word_arg(w, graph));
  std::vector<std::vector<std::pair<ExtVertex, ExtVertex>>> edge_sets;
  const ExtVertex center = canonicalize_ext(opt.vertex, NormalForm(), graph);
  for (const std::string& spec : opt.edge_sets) {
    std::vector<std::pair<ExtVertex, ExtVertex>> edges;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) edges.emplace_back(center, ext_vertex_arg(token, graph));
    }
    edge_sets.push_back(std::move(edges));
  }
  const auto trace = wandering_orbit_experiment(opt.vertex, opt.nbr, seq, edge_sets, opt.window,
                                                opt.radius, opt.cap, graph);
  g_truncated |= trace.truncated;
  emit(budget_header("dyn wander", opt));
  // Reports exhibit finite-radius behavior only; they neither certify nor
  // refute any boundary-convergence statement.
  for (const auto& step : trace.steps) {
    json in_p = json::array();
    for (bool b : step.in_p_set) in_p.push_back(b);
    emit(json{{"type", "wander_step"},
              {"g", step.g.key()},
              {"image", step.image.key()},
              {"new_vertex", step.new_vertex},
              {"in_p_set", in_p}});
  }
  emit(json{{"type", "summary"},
            {"all_distinct", trace.all_distinct},
            {"ball", trace.ball_size},
            {"truncated", trace.truncated}});
}

void run_wreath_mul(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const graphprod::GraphAction action = graphprod::load_action_file(opt.action_path, graph);
  const graphprod::WreathElem x{word_arg(opt.word, graph), opt.actor};
  const graphprod::WreathElem y{word_arg(opt.word2, graph), opt.actor2};
  const auto product = wreath_mul(x, y, action);
  const auto inverse = wreath_inv(x, action);
  emit(budget_header("wreath mul", opt));
  emit(json{{"type", "wreath_mul"},
            {"word", product.word.key()},
            {"actor", product.actor},
            {"x_inverse_word", inverse.word.key()},
            {"x_inverse_actor", inverse.actor},
            {"truncated", false}});
}

void run_wreath_act(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const graphprod::GraphAction action = graphprod::load_action_file(opt.action_path, graph);
  const graphprod::WreathElem x{word_arg(opt.word, graph), opt.actor};
  const NormalForm target = word_arg(opt.to, graph);
  emit(budget_header("wreath act", opt));
  emit(json{{"type", "wreath_act"},
            {"image", wreath_act_on_cayley(x, target, action).key()},
            {"truncated", false}});
}

void run_wreath_probe(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  const graphprod::GraphAction action = graphprod::load_action_file(opt.action_path, graph);
  const auto probe = wreath_stabilizer_probe(action, opt.vertex, opt.elem);
  emit(budget_header("wreath probe", opt));
  emit(json{{"type", "stabilizer_probe"},
            {"fixing_one_and_g", probe.fixing_both},
            {"fixing_vertex", probe.fixing_vertex},
            {"equal", probe.equal},
            {"truncated", false}});
}

int run_verify_cmd(const Options& opt) {
  const DefiningGraph graph = graphprod::load_graph_file(opt.graph_path);
  graphprod::VerifyOptions vopt;
  vopt.seed = opt.seed;
  vopt.cayley_radius = opt.radius;
  vopt.vertex_cap = opt.cap;
  vopt.ext_window = opt.window;
  const auto result = run_verify(graph, vopt, std::cout);
  if (!result.ok()) return 3;
  if (result.truncated) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in graph products of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: lets --format/--seed follow the subcommand
  Options opt;

  app.add_option("--seed", opt.seed, "seed for sampled checks");
  app.add_option("--format", opt.format, "output format: json, dot, text");

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", opt.graph_path, "graph doc (JSON)")->required();
  };

  auto* nf = app.add_subcommand("nf", "canonical normal form of a word");
  add_graph(nf);
  nf->add_option("--word", opt.word)->required();

  auto* coset = app.add_subcommand("coset", "coset decomposition over F");
  add_graph(coset);
  coset->add_option("--word", opt.word)->required();
  coset->add_option("--F", opt.F, "vertex ids generating the subgroup")->delimiter(',');

  auto* cayley = app.add_subcommand("cayley", "Cayley graph probes");
  cayley->require_subcommand(1);
  auto* cball = cayley->add_subcommand("ball", "BFS ball");
  auto* cgeo = cayley->add_subcommand("geodesics", "all geodesics between two words");
  auto* cgirth = cayley->add_subcommand("girth", "shortest circuit search");
  auto* ccirc = cayley->add_subcommand("circuits", "circuits through an edge");
  auto* cdelta = cayley->add_subcommand("delta", "hyperbolicity estimates");
  auto* cbigon = cayley->add_subcommand("bigon", "bigon criterion check");
  for (auto* cmd : {cball, cgeo, cgirth, ccirc, cdelta, cbigon}) {
    add_graph(cmd);
    cmd->add_option("--cap", opt.cap, "vertex budget");
  }
  cball->add_option("--radius", opt.radius);
  cgeo->add_option("--word", opt.word, "source word")->required();
  cgeo->add_option("--to", opt.to, "target word")->required();
  cgirth->add_option("--radius", opt.radius);
  ccirc->add_option("--word", opt.word, "edge tail word");
  ccirc->add_option("--label", opt.label, "edge label syllable v:e")->required();
  ccirc->add_option("--n", opt.n, "max circuit length");
  cdelta->add_option("--radius", opt.radius);
  cbigon->add_option("--radius", opt.radius);
  cbigon->add_option("--delta", opt.delta);

  auto* ext = app.add_subcommand("ext", "extension graph probes");
  ext->require_subcommand(1);
  auto* eball = ext->add_subcommand("ball", "windowed BFS ball");
  auto* elink = ext->add_subcommand("link", "windowed neighbors");
  auto* eact = ext->add_subcommand("act", "conjugation action");
  auto* estab = ext->add_subcommand("stab", "stabilizer membership");
  for (auto* cmd : {eball, elink, eact, estab}) {
    add_graph(cmd);
    cmd->add_option("--window", opt.window, "conjugator length window");
  }
  eball->add_option("--vertex", opt.vertex, "root base vertex");
  eball->add_option("--radius", opt.radius);
  eball->add_option("--cap", opt.cap);
  elink->add_option("--vertex", opt.vertex)->required();
  elink->add_option("--word", opt.word, "conjugator");
  eact->add_option("--word", opt.word, "acting element")->required();
  eact->add_option("--x", opt.to, "target vertex base|conj")->required();
  estab->add_option("--word", opt.word)->required();
  estab->add_option("--vertex", opt.vertex)->required();

  auto* dyn = app.add_subcommand("dyn", "dynamics experiments");
  dyn->require_subcommand(1);
  auto* dorder = dyn->add_subcommand("order", "bounded order probe");
  auto* dfixed = dyn->add_subcommand("fixed", "fixed extension vertices");
  auto* dwander = dyn->add_subcommand("wander", "wandering orbit experiment");
  for (auto* cmd : {dorder, dfixed, dwander}) add_graph(cmd);
  dorder->add_option("--word", opt.word)->required();
  dorder->add_option("--order-bound", opt.order_bound);
  dfixed->add_option("--word", opt.word)->required();
  dfixed->add_option("--window", opt.window);
  dfixed->add_option("--radius", opt.radius);
  dfixed->add_option("--vertex", opt.vertex, "root base vertex");
  dfixed->add_option("--cap", opt.cap);
  dwander->add_option("--vertex", opt.vertex, "center vertex v")->required();
  dwander->add_option("--nbr", opt.nbr, "neighbor w of v")->required();
  dwander->add_option("--seq", opt.seq, "stabilizer elements")->delimiter(';');
  dwander->add_option("--I", opt.edge_sets, "edge sets, ext-vertex tokens comma separated");
  dwander->add_option("--window", opt.window);
  dwander->add_option("--radius", opt.radius);
  dwander->add_option("--cap", opt.cap);

  auto* wreath = app.add_subcommand("wreath", "semidirect product probes");
  wreath->require_subcommand(1);
  auto* wmul = wreath->add_subcommand("mul", "multiply wreath elements");
  auto* wact = wreath->add_subcommand("act", "act on a Cayley vertex");
  auto* wprobe = wreath->add_subcommand("probe", "stabilizer probe");
  for (auto* cmd : {wmul, wact, wprobe}) {
    add_graph(cmd);
    cmd->add_option("--action", opt.action_path, "action doc (JSON)")->required();
  }
  wmul->add_option("--word", opt.word)->required();
  wmul->add_option("--actor", opt.actor)->required();
  wmul->add_option("--word2", opt.word2)->required();
  wmul->add_option("--actor2", opt.actor2)->required();
  wact->add_option("--word", opt.word)->required();
  wact->add_option("--actor", opt.actor)->required();
  wact->add_option("--x", opt.to, "target Cayley vertex")->required();
  wprobe->add_option("--vertex", opt.vertex)->required();
  wprobe->add_option("--elem", opt.elem, "nontrivial element index");

  auto* verify = app.add_subcommand("verify", "run the invariant suite on a fixture");
  add_graph(verify);
  verify->add_option("--radius", opt.radius);
  verify->add_option("--cap", opt.cap);
  verify->add_option("--window", opt.window);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*nf) run_nf(opt);
    if (*coset) run_coset(opt);
    if (*cball) run_cayley_ball(opt);
    if (*cgeo) run_cayley_geodesics(opt);
    if (*cgirth) run_cayley_girth(opt);
    if (*ccirc) run_cayley_circuits(opt);
    if (*cdelta) run_cayley_delta(opt);
    if (*cbigon) run_cayley_bigon(opt);
    if (*eball) run_ext_ball(opt);
    if (*elink) run_ext_link(opt);
    if (*eact) run_ext_act(opt);
    if (*estab) run_ext_stab(opt);
    if (*dorder) run_dyn_order(opt);
    if (*dfixed) run_dyn_fixed(opt);
    if (*dwander) run_dyn_wander(opt);
    if (*wmul) run_wreath_mul(opt);
    if (*wact) run_wreath_act(opt);
    if (*wprobe) run_wreath_probe(opt);
    if (*verify) return run_verify_cmd(opt);
  } catch (const graphprod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_truncated ? 2 : 0;
}
