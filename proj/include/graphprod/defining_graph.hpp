#ifndef GRAPHPROD_DEFINING_GRAPH_HPP_
#define GRAPHPROD_DEFINING_GRAPH_HPP_

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graphprod/group.hpp"

namespace graphprod {

using VertexId = int;

// Finiteness/leaf data extracted from a defining graph; the flags mirror the
// hypotheses of the convergence and solidity theorems this toolkit probes.
struct PredicateReport {
  std::set<VertexId> leaves;
  std::set<VertexId> non_leaves;
  std::vector<int> link_minus_leaf_size;  // per vertex, |Lk(v) \ leaf|
  std::optional<int> diameter;            // nullopt = infinite (disconnected)
  bool diam_gt_1 = false;
  bool diam_gt_2 = false;
};

// The simplicial defining graph with a finite vertex group attached to every
// vertex. Vertices are dense integers 0..n-1; that total order is the one
// used everywhere for canonicalization. Immutable after construction.
class DefiningGraph {
 public:
  // Throws LoopEdge, DuplicateEdge, UnknownVertex, TrivialVertexGroup.
  DefiningGraph(std::vector<GroupPtr> vertex_groups,
                const std::vector<std::pair<VertexId, VertexId>>& edges);

  int num_vertices() const noexcept { return static_cast<int>(groups_.size()); }
  const GroupPtr& group(VertexId v) const { return groups_[check(v)]; }

  bool adjacent(VertexId u, VertexId v) const {
    return adj_matrix_[static_cast<std::size_t>(check(u)) * num_vertices() + check(v)] != 0;
  }
  const std::vector<VertexId>& link(VertexId v) const { return adj_[check(v)]; }
  std::vector<VertexId> star(VertexId v) const;
  // Elk(v): the edges (v, y) with y in Lk(v), as ordered pairs.
  std::vector<std::pair<VertexId, VertexId>> elink(VertexId v) const;
  bool is_leaf(VertexId v) const { return link(v).size() <= 1; }

  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }

  // Graph distance between vertices of the defining graph itself; nullopt if
  // disconnected.
  std::optional<int> gamma_distance(VertexId u, VertexId v) const;

  // Girth computed by the direct finite-graph scan (BFS from every vertex);
  // nullopt means forest, i.e. girth infinity. The generic explorer recomputes
  // this independently and the two must agree.
  std::optional<int> girth() const;

  PredicateReport finiteness_predicates() const;

 private:
  VertexId check(VertexId v) const;

  std::vector<GroupPtr> groups_;
  std::vector<std::vector<VertexId>> adj_;  // sorted links
  std::vector<unsigned char> adj_matrix_;
  std::vector<std::pair<VertexId, VertexId>> edges_;  // u < v, sorted
};

}  // namespace graphprod

#endif  // GRAPHPROD_DEFINING_GRAPH_HPP_
