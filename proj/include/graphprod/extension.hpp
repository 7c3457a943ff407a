#ifndef GRAPHPROD_EXTENSION_HPP_
#define GRAPHPROD_EXTENSION_HPP_

#include <string>
#include <vector>

#include "graphprod/coset.hpp"
#include "graphprod/word.hpp"

namespace graphprod {

// A vertex g G_v g^{-1} of the extension graph, stored as the base vertex v
// and the canonical left-coset representative of g modulo the stabilizer
// <G_w : w in St(v)>. Two such vertices are equal iff both components match.
struct ExtVertex {
  VertexId base = 0;
  NormalForm conjugator;

  friend bool operator==(const ExtVertex& a, const ExtVertex& b) {
    return a.base == b.base && a.conjugator == b.conjugator;
  }
  friend bool operator!=(const ExtVertex& a, const ExtVertex& b) { return !(a == b); }
  friend bool operator<(const ExtVertex& a, const ExtVertex& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.conjugator < b.conjugator;
  }

  std::string key() const { return std::to_string(base) + "|" + conjugator.key(); }
};

// Canonical vertex for the conjugate g G_v g^{-1}; collapses g by the
// left-coset representative over St(v), so the result depends only on the
// conjugate subgroup.
ExtVertex canonicalize_ext(VertexId v, const NormalForm& g, const DefiningGraph& graph);

// Elementwise commutation test between the two conjugates (all nontrivial
// element pairs, not generator subsets), plus distinctness.
bool ext_adjacent(const ExtVertex& x, const ExtVertex& y, const DefiningGraph& graph);

// The conjugation action g.x = g x g^{-1}.
ExtVertex ext_act(const NormalForm& g, const ExtVertex& x, const DefiningGraph& graph);

// Whether g fixes the base vertex (v, 1) of the extension graph; equivalent
// to supp(g) within St(v), which tests verify independently.
bool ext_stabilizer_test(const NormalForm& g, VertexId v, const DefiningGraph& graph);

// All extension-graph vertices with conjugator length <= window adjacent to
// x, deduplicated canonically and ordered by key. A certified lower
// approximation of the (possibly infinite) link: exhaustive within the
// window, silent about anything beyond it.
std::vector<ExtVertex> ext_neighbors_windowed(const ExtVertex& x, int window,
                                              const DefiningGraph& graph);

// Explorable adapter over the window-L approximation of the extension graph.
// The candidate vertex pool (all conjugator length <= L vertices) is built
// once at construction, so instances are immutable and shareable.
class ExtensionGraphWindow {
 public:
  using Vertex = ExtVertex;

  ExtensionGraphWindow(const DefiningGraph& graph, int window, ExtVertex origin);

  const DefiningGraph& defining_graph() const noexcept { return *graph_; }
  int window() const noexcept { return window_; }

  const Vertex& origin() const noexcept { return origin_; }
  std::string key(const Vertex& v) const { return v.key(); }
  std::vector<Vertex> neighbors(const Vertex& v) const;

  const std::vector<ExtVertex>& candidates() const noexcept { return candidates_; }

 private:
  const DefiningGraph* graph_;
  int window_;
  ExtVertex origin_;
  std::vector<ExtVertex> candidates_;  // all window-bounded vertices, sorted by key
};

}  // namespace graphprod

#endif  // GRAPHPROD_EXTENSION_HPP_
