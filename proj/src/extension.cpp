#include "graphprod/extension.hpp"

#include <algorithm>
#include <map>

#include "graphprod/cayley.hpp"
#include "graphprod/error.hpp"
#include "graphprod/explore.hpp"

namespace graphprod {

namespace {

std::set<VertexId> star_set(VertexId v, const DefiningGraph& graph) {
  const auto st = graph.star(v);
  return std::set<VertexId>(st.begin(), st.end());
}

NormalForm single_syllable(VertexId v, int elem, const DefiningGraph& graph) {
  Word w;
  w.syllables.push_back(Syllable{v, elem});
  return normal_form(w, graph);
}

}  // namespace

ExtVertex canonicalize_ext(VertexId v, const NormalForm& g, const DefiningGraph& graph) {
  if (v < 0 || v >= graph.num_vertices()) {
    throw Error("UnknownVertex", "extension vertex base " + std::to_string(v));
  }
  return ExtVertex{v, left_coset_rep(g, star_set(v, graph), graph)};
}

bool ext_adjacent(const ExtVertex& x, const ExtVertex& y, const DefiningGraph& graph) {
  if (x == y) return false;
  const NormalForm gx_inv = invert(x.conjugator, graph);
  const NormalForm gy_inv = invert(y.conjugator, graph);
  const int ox = graph.group(x.base)->order();
  const int oy = graph.group(y.base)->order();
  for (int a = 1; a < ox; ++a) {
    const NormalForm ca = multiply(multiply(x.conjugator, single_syllable(x.base, a, graph), graph),
                                   gx_inv, graph);
    for (int b = 1; b < oy; ++b) {
      const NormalForm cb = multiply(
          multiply(y.conjugator, single_syllable(y.base, b, graph), graph), gy_inv, graph);
      if (multiply(ca, cb, graph) != multiply(cb, ca, graph)) return false;
    }
  }
  return true;
}

ExtVertex ext_act(const NormalForm& g, const ExtVertex& x, const DefiningGraph& graph) {
  return canonicalize_ext(x.base, multiply(g, x.conjugator, graph), graph);
}

bool ext_stabilizer_test(const NormalForm& g, VertexId v, const DefiningGraph& graph) {
  const ExtVertex base = canonicalize_ext(v, NormalForm(), graph);
  return ext_act(g, base, graph) == base;
}

std::vector<ExtVertex> ext_neighbors_windowed(const ExtVertex& x, int window,
                                              const DefiningGraph& graph) {
  ExtensionGraphWindow view(graph, window, x);
  return view.neighbors(x);
}

ExtensionGraphWindow::ExtensionGraphWindow(const DefiningGraph& graph, int window,
                                           ExtVertex origin)
    : graph_(&graph), window_(window), origin_(std::move(origin)) {
  // All conjugators of length <= window arise in the Cayley ball of that
  // radius; canonicalization collapses them onto the candidate pool.
  CayleyGraph cayley(graph);
  const auto ball = ball_bfs(cayley, cayley.origin(), window);
  std::map<std::string, ExtVertex> pool;
  for (const NormalForm& g : ball.verts) {
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      ExtVertex cand = canonicalize_ext(v, g, graph);
      std::string k = cand.key();
      pool.emplace(std::move(k), std::move(cand));
    }
  }
  candidates_.reserve(pool.size());
  for (auto& [k, cand] : pool) candidates_.push_back(std::move(cand));
}

std::vector<ExtVertex> ExtensionGraphWindow::neighbors(const Vertex& v) const {
  std::vector<ExtVertex> out;
  for (const ExtVertex& cand : candidates_) {
    if (ext_adjacent(v, cand, *graph_)) out.push_back(cand);
  }
  return out;
}

}  // namespace graphprod
