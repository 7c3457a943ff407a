#include "graphprod/defining_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "graphprod/error.hpp"

namespace graphprod {

DefiningGraph::DefiningGraph(std::vector<GroupPtr> vertex_groups,
                             const std::vector<std::pair<VertexId, VertexId>>& edges)
    : groups_(std::move(vertex_groups)) {
  const int n = num_vertices();
  for (int v = 0; v < n; ++v) {
    if (!groups_[v] || groups_[v]->order() < 2) {
      throw Error("TrivialVertexGroup", "vertex " + std::to_string(v) +
                                            " has trivial group (order < 2 not allowed)");
    }
  }
  adj_.resize(n);
  adj_matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error("UnknownVertex", "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") references unknown vertex");
    }
    if (u == v) {
      throw Error("LoopEdge", "loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (adj_matrix_[static_cast<std::size_t>(u) * n + v]) {
      throw Error("DuplicateEdge", "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") listed twice");
    }
    adj_matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    adj_matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
  }
  for (auto& lk : adj_) std::sort(lk.begin(), lk.end());
  std::sort(edges_.begin(), edges_.end());
}

VertexId DefiningGraph::check(VertexId v) const {
  if (v < 0 || v >= num_vertices()) {
    throw Error("UnknownVertex", "vertex " + std::to_string(v));
  }
  return v;
}

std::vector<VertexId> DefiningGraph::star(VertexId v) const {
  std::vector<VertexId> st = link(v);
  st.push_back(v);
  std::sort(st.begin(), st.end());
  return st;
}

std::vector<std::pair<VertexId, VertexId>> DefiningGraph::elink(VertexId v) const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId y : link(v)) out.emplace_back(v, y);
  return out;
}

std::optional<int> DefiningGraph::gamma_distance(VertexId u, VertexId v) const {
  check(u);
  check(v);
  std::vector<int> dist(num_vertices(), -1);
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == v) return dist[x];
    for (VertexId y : adj_[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

std::optional<int> DefiningGraph::girth() const {
  // BFS from every vertex; a non-tree edge (x,y) seen from source s closes a
  // circuit of length d(x)+d(y)+1, and the minimum over all sources is exact.
  const int n = num_vertices();
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj_[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x] && x != parent[y]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

PredicateReport DefiningGraph::finiteness_predicates() const {
  PredicateReport rep;
  const int n = num_vertices();
  for (int v = 0; v < n; ++v) {
    (is_leaf(v) ? rep.leaves : rep.non_leaves).insert(v);
  }
  rep.link_minus_leaf_size.resize(n, 0);
  for (int v = 0; v < n; ++v) {
    int count = 0;
    for (VertexId y : link(v)) {
      if (!is_leaf(y)) ++count;
    }
    rep.link_minus_leaf_size[v] = count;
  }
  // Diameter by BFS from every vertex; infinite when disconnected.
  int diam = 0;
  bool connected = true;
  for (int s = 0; s < n && connected; ++s) {
    std::vector<int> dist(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    int reached = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      diam = std::max(diam, dist[x]);
      for (int y : adj_[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          ++reached;
          queue.push_back(y);
        }
      }
    }
    if (reached < n) connected = false;
  }
  if (connected && n > 0) {
    rep.diameter = diam;
    rep.diam_gt_1 = diam > 1;
    rep.diam_gt_2 = diam > 2;
  } else {
    rep.diameter = std::nullopt;  // infinite
    rep.diam_gt_1 = n > 0;
    rep.diam_gt_2 = n > 0;
  }
  return rep;
}

}  // namespace graphprod
