#ifndef GRAPHPROD_CAYLEY_HPP_
#define GRAPHPROD_CAYLEY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/word.hpp"

namespace graphprod {

// The Cayley graph of the graph product with respect to the union of the
// nontrivial vertex-group elements, realized on demand: vertices are
// canonical normal forms, neighbors are x*s over all generators s. Never
// materialized; the word metric d(x,y) = ||inverse(x)*y|| doubles as an exact
// distance oracle, which keeps every probe on this graph truncation-free.
class CayleyGraph {
 public:
  using Vertex = NormalForm;

  explicit CayleyGraph(const DefiningGraph& graph) : graph_(&graph) {}

  const DefiningGraph& defining_graph() const noexcept { return *graph_; }

  Vertex origin() const { return NormalForm(); }
  std::string key(const Vertex& v) const { return v.key(); }

  std::vector<Vertex> neighbors(const Vertex& v) const;

  // Neighbors together with the generator labelling the edge.
  std::vector<std::pair<Vertex, Syllable>> labeled_neighbors(const Vertex& v) const;

  int distance(const Vertex& x, const Vertex& y) const {
    return static_cast<int>(multiply(invert(x, *graph_), y, *graph_).length());
  }

 private:
  const DefiningGraph* graph_;
};

// Distance in the defining graph between the supports of two edge labels
// (single vertices); nullopt when they lie in different components of the
// defining graph.
std::optional<int> edge_label_distance(const Syllable& label1, const Syllable& label2,
                                       const DefiningGraph& graph);

}  // namespace graphprod

#endif  // GRAPHPROD_CAYLEY_HPP_
