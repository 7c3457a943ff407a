#ifndef GRAPHPROD_VIEWS_HPP_
#define GRAPHPROD_VIEWS_HPP_

#include <string>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/error.hpp"

namespace graphprod {

// Explorable + metric view of an ordinary finite graph (adjacency lists).
// Distances come from all-pairs BFS computed once at construction, so the
// view is immutable and cheap to query afterwards.
class FiniteGraphView {
 public:
  using Vertex = int;

  explicit FiniteGraphView(std::vector<std::vector<int>> adjacency);
  explicit FiniteGraphView(const DefiningGraph& graph);

  std::string key(Vertex v) const { return std::to_string(v); }
  std::vector<Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }

  // Exact graph distance; throws Unreachable across components.
  int distance(Vertex u, Vertex v) const;

 private:
  void compute_distances();

  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;  // row-major all-pairs, -1 = unreachable
};

}  // namespace graphprod

#endif  // GRAPHPROD_VIEWS_HPP_
