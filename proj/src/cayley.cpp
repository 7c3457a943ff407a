#include "graphprod/cayley.hpp"

namespace graphprod {

std::vector<CayleyGraph::Vertex> CayleyGraph::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (VertexId u = 0; u < graph_->num_vertices(); ++u) {
    const int order = graph_->group(u)->order();
    for (int e = 1; e < order; ++e) {
      Word w;
      w.syllables.push_back(Syllable{u, e});
      out.push_back(multiply(v, normal_form(w, *graph_), *graph_));
    }
  }
  return out;
}

std::vector<std::pair<CayleyGraph::Vertex, Syllable>> CayleyGraph::labeled_neighbors(
    const Vertex& v) const {
  std::vector<std::pair<Vertex, Syllable>> out;
  for (VertexId u = 0; u < graph_->num_vertices(); ++u) {
    const int order = graph_->group(u)->order();
    for (int e = 1; e < order; ++e) {
      const Syllable s{u, e};
      Word w;
      w.syllables.push_back(s);
      out.emplace_back(multiply(v, normal_form(w, *graph_), *graph_), s);
    }
  }
  return out;
}

std::optional<int> edge_label_distance(const Syllable& label1, const Syllable& label2,
                                       const DefiningGraph& graph) {
  return graph.gamma_distance(label1.vertex, label2.vertex);
}

}  // namespace graphprod
