#include "graphprod/dynamics.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "graphprod/error.hpp"
#include "graphprod/explore.hpp"

namespace graphprod {

OrderStatus bounded_order(const NormalForm& g, int bound, const DefiningGraph& graph) {
  OrderStatus st;
  st.bound = bound;
  NormalForm power = g;
  for (int n = 1; n <= bound; ++n) {
    if (power.is_identity()) {
      st.order = n;
      return st;
    }
    power = multiply(power, g, graph);
  }
  return st;
}

FixedSetReport fixed_ext_vertices(const NormalForm& g, const ExtVertex& root, int window,
                                  int radius, std::size_t cap, const DefiningGraph& graph) {
  FixedSetReport rep;
  rep.window = window;
  rep.radius = radius;
  ExtensionGraphWindow view(graph, window, root);
  const auto ball = ball_bfs(view, root, radius, cap);
  rep.ball_size = ball.core.size();
  rep.truncated = ball.core.budget_exhausted;
  for (const ExtVertex& x : ball.verts) {
    if (ext_act(g, x, graph) == x) rep.fixed.push_back(x);
  }
  std::sort(rep.fixed.begin(), rep.fixed.end());
  return rep;
}

WanderingTrace wandering_orbit_experiment(
    VertexId v, VertexId w, const std::vector<NormalForm>& seq,
    const std::vector<std::vector<std::pair<ExtVertex, ExtVertex>>>& edge_sets, int window,
    int radius, std::size_t cap, const DefiningGraph& graph) {
  if (!graph.adjacent(v, w)) {
    throw Error("NotInLink",
                "vertex " + std::to_string(w) + " is not in the link of " + std::to_string(v));
  }
  for (const NormalForm& g : seq) {
    if (!ext_stabilizer_test(g, v, graph)) {
      throw Error("NotInStabilizer", "element " + g.key() + " does not stabilize vertex " +
                                         std::to_string(v));
    }
  }

  const ExtVertex center = canonicalize_ext(v, NormalForm(), graph);
  const ExtVertex target = canonicalize_ext(w, NormalForm(), graph);
  ExtensionGraphWindow view(graph, window, center);
  const auto ball = ball_bfs(view, center, radius, cap);

  WanderingTrace trace;
  trace.ball_size = ball.core.size();
  trace.truncated = ball.core.budget_exhausted;

  // Restricted Bowditch neighborhoods of the center, one per edge set.
  std::vector<std::set<std::string>> p_sets;
  for (const auto& edges : edge_sets) {
    std::set<std::pair<int, int>> blocked;
    for (const auto& [x, y] : edges) {
      const int xi = ball.core.index_of(x.key());
      const int yi = ball.core.index_of(y.key());
      if (xi >= 0 && yi >= 0) blocked.emplace(xi, yi);
    }
    std::set<std::string> members;
    for (int idx : restricted_p_set(ball.core, blocked)) {
      members.insert(ball.core.keys[static_cast<std::size_t>(idx)]);
    }
    p_sets.push_back(std::move(members));
  }

  std::set<std::string> seen;
  trace.all_distinct = true;
  for (const NormalForm& g : seq) {
    WanderingStep step;
    step.g = g;
    step.image = ext_act(g, target, graph);
    step.new_vertex = seen.insert(step.image.key()).second;
    if (!step.new_vertex) trace.all_distinct = false;
    const int idx = ball.core.index_of(step.image.key());
    if (idx >= 0) step.dist_to_center = ball.core.dist[static_cast<std::size_t>(idx)];
    for (const auto& p : p_sets) {
      step.in_p_set.push_back(p.count(step.image.key()) != 0);
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace graphprod
