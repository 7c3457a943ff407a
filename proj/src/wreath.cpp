#include "graphprod/wreath.hpp"

#include <algorithm>
#include <set>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

bool is_identity_map(const std::vector<VertexId>& map) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != static_cast<VertexId>(i)) return false;
  }
  return true;
}

std::vector<VertexId> compose_maps(const std::vector<VertexId>& g1,
                                   const std::vector<VertexId>& g2) {
  std::vector<VertexId> out(g2.size());
  for (std::size_t i = 0; i < g2.size(); ++i) out[i] = g1[static_cast<std::size_t>(g2[i])];
  return out;
}

std::vector<VertexId> invert_map(const std::vector<VertexId>& g) {
  std::vector<VertexId> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[static_cast<std::size_t>(g[i])] = static_cast<VertexId>(i);
  return out;
}

}  // namespace

GraphAction::GraphAction(std::vector<Perm> perms, const DefiningGraph& graph)
    : graph_(&graph), perms_(std::move(perms)) {
  const int n = graph.num_vertices();
  if (perms_.empty()) {
    throw Error("ActionInvalid", "action must list at least the identity permutation");
  }
  std::set<std::string> names;
  for (const Perm& p : perms_) {
    if (!names.insert(p.name).second) {
      throw Error("ActionInvalid", "duplicate permutation name '" + p.name + "'");
    }
    if (static_cast<int>(p.map.size()) != n) {
      throw Error("ActionInvalid", "permutation '" + p.name + "' has " +
                                       std::to_string(p.map.size()) + " entries, expected " +
                                       std::to_string(n));
    }
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (VertexId img : p.map) {
      if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)]) {
        throw Error("ActionInvalid", "permutation '" + p.name + "' is not a bijection");
      }
      hit[static_cast<std::size_t>(img)] = true;
    }
    for (auto [u, v] : graph.edges()) {
      if (!graph.adjacent(p.map[static_cast<std::size_t>(u)], p.map[static_cast<std::size_t>(v)])) {
        throw Error("ActionInvalid", "permutation '" + p.name + "' breaks edge (" +
                                         std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (*graph.group(v) != *graph.group(p.map[static_cast<std::size_t>(v)])) {
        throw Error("ActionInvalid", "permutation '" + p.name + "' maps vertex " +
                                         std::to_string(v) + " to " +
                                         std::to_string(p.map[static_cast<std::size_t>(v)]) +
                                         " with a different vertex group");
      }
    }
  }
  auto find_map = [&](const std::vector<VertexId>& map) -> const Perm* {
    for (const Perm& p : perms_) {
      if (p.map == map) return &p;
    }
    return nullptr;
  };
  bool has_identity = false;
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    if (is_identity_map(perms_[i].map)) {
      identity_ = i;
      has_identity = true;
      break;
    }
  }
  if (!has_identity) {
    throw Error("ActionInvalid", "action does not contain the identity permutation");
  }
  for (const Perm& p : perms_) {
    if (!find_map(invert_map(p.map))) {
      throw Error("ActionInvalid", "inverse of '" + p.name + "' missing (not closed)");
    }
    for (const Perm& q : perms_) {
      if (!find_map(compose_maps(p.map, q.map))) {
        throw Error("ActionInvalid",
                    "composition '" + p.name + "'*'" + q.name + "' missing (not closed)");
      }
    }
  }
}

const GraphAction::Perm& GraphAction::perm(const std::string& name) const {
  for (const Perm& p : perms_) {
    if (p.name == name) return p;
  }
  throw Error("ActionInvalid", "unknown permutation '" + name + "'");
}

const GraphAction::Perm& GraphAction::compose(const Perm& g1, const Perm& g2) const {
  const auto map = compose_maps(g1.map, g2.map);
  for (const Perm& p : perms_) {
    if (p.map == map) return p;
  }
  throw Error("ActionInvalid", "composition escaped the action (not closed)");
}

const GraphAction::Perm& GraphAction::inverse(const Perm& g) const {
  const auto map = invert_map(g.map);
  for (const Perm& p : perms_) {
    if (p.map == map) return p;
  }
  throw Error("ActionInvalid", "inverse escaped the action (not closed)");
}

NormalForm apply_automorphism(const GraphAction::Perm& g, const NormalForm& w,
                              const DefiningGraph& graph) {
  Word relabeled;
  relabeled.syllables.reserve(w.length());
  for (const Syllable& s : w.syllables()) {
    relabeled.syllables.push_back(Syllable{g.map[static_cast<std::size_t>(s.vertex)], s.elem});
  }
  return normal_form(relabeled, graph);
}

WreathElem wreath_identity(const GraphAction& action) {
  return WreathElem{NormalForm(), action.identity().name};
}

WreathElem wreath_mul(const WreathElem& x, const WreathElem& y, const GraphAction& action) {
  const auto& gx = action.perm(x.actor);
  const auto& gy = action.perm(y.actor);
  const auto& graph = action.defining_graph();
  WreathElem out;
  out.word = multiply(x.word, apply_automorphism(gx, y.word, graph), graph);
  out.actor = action.compose(gx, gy).name;
  return out;
}

WreathElem wreath_inv(const WreathElem& x, const GraphAction& action) {
  const auto& gx = action.perm(x.actor);
  const auto& gi = action.inverse(gx);
  const auto& graph = action.defining_graph();
  WreathElem out;
  out.word = apply_automorphism(gi, invert(x.word, graph), graph);
  out.actor = gi.name;
  return out;
}

NormalForm wreath_act_on_cayley(const WreathElem& x, const NormalForm& v,
                                const GraphAction& action) {
  const auto& graph = action.defining_graph();
  return multiply(x.word, apply_automorphism(action.perm(x.actor), v, graph), graph);
}

StabilizerProbe wreath_stabilizer_probe(const GraphAction& action, VertexId v, int elem) {
  const auto& graph = action.defining_graph();
  if (elem <= 0 || elem >= graph.group(v)->order()) {
    throw Error("VertexGroupMismatch", "stabilizer probe needs a nontrivial element of G_" +
                                           std::to_string(v));
  }
  Word w;
  w.syllables.push_back(Syllable{v, elem});
  const NormalForm target = normal_form(w, graph);
  StabilizerProbe probe;
  for (const auto& p : action.perms()) {
    const WreathElem pure{NormalForm(), p.name};
    const bool fixes_one = wreath_act_on_cayley(pure, NormalForm(), action).is_identity();
    if (fixes_one && wreath_act_on_cayley(pure, target, action) == target) {
      probe.fixing_both.push_back(p.name);
    }
    if (p.map[static_cast<std::size_t>(v)] == v) probe.fixing_vertex.push_back(p.name);
  }
  std::sort(probe.fixing_both.begin(), probe.fixing_both.end());
  std::sort(probe.fixing_vertex.begin(), probe.fixing_vertex.end());
  probe.equal = probe.fixing_both == probe.fixing_vertex;
  return probe;
}

}  // namespace graphprod
