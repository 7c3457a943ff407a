#include "graphprod/coset.hpp"

#include <string>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

void check_F(const std::set<VertexId>& F, const DefiningGraph& graph) {
  for (VertexId v : F) {
    if (v < 0 || v >= graph.num_vertices()) {
      throw Error("UnknownVertex", "F contains unknown vertex " + std::to_string(v));
    }
  }
}

// Index of a front-movable syllable with vertex in F, or npos. Front-movable
// means every earlier syllable's vertex is adjacent to it.
std::size_t find_extractable(const std::vector<Syllable>& syls, const std::set<VertexId>& F,
                             const DefiningGraph& graph) {
  for (std::size_t j = 0; j < syls.size(); ++j) {
    if (!F.count(syls[j].vertex)) continue;
    bool movable = true;
    for (std::size_t i = 0; i < j && movable; ++i) {
      movable = graph.adjacent(syls[i].vertex, syls[j].vertex);
    }
    if (movable) return j;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

bool in_FG(const NormalForm& g, const std::set<VertexId>& F, const DefiningGraph& graph) {
  check_F(F, graph);
  for (const Syllable& s : g.syllables()) {
    if (!F.count(s.vertex)) return false;
  }
  return true;
}

bool in_RF(const NormalForm& g, const std::set<VertexId>& F, const DefiningGraph& graph) {
  check_F(F, graph);
  return find_extractable(g.syllables(), F, graph) == static_cast<std::size_t>(-1);
}

CosetDecomposition decompose(const NormalForm& g, const std::set<VertexId>& F,
                             const DefiningGraph& graph) {
  check_F(F, graph);
  std::vector<Syllable> rest = g.syllables();
  Word prefix;
  for (;;) {
    const std::size_t j = find_extractable(rest, F, graph);
    if (j == static_cast<std::size_t>(-1)) break;
    prefix.syllables.push_back(rest[j]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
  }
  CosetDecomposition d;
  d.F = F;
  d.p = normal_form(prefix, graph);
  Word remainder;
  remainder.syllables = std::move(rest);
  d.r = normal_form(remainder, graph);
  return d;
}

NormalForm left_coset_rep(const NormalForm& g, const std::set<VertexId>& F,
                          const DefiningGraph& graph) {
  const NormalForm g_inv = invert(g, graph);
  return invert(decompose(g_inv, F, graph).r, graph);
}

}  // namespace graphprod
