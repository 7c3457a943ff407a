#ifndef GRAPHPROD_TESTS_FIXTURES_HPP_
#define GRAPHPROD_TESTS_FIXTURES_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/word.hpp"

namespace fixtures {

using graphprod::DefiningGraph;
using graphprod::GroupPtr;
using graphprod::GroupTable;
using graphprod::NormalForm;
using graphprod::Syllable;
using graphprod::VertexId;
using graphprod::Word;

inline GroupPtr zn(int n) {
  return std::make_shared<const GroupTable>(GroupTable::cyclic(n));
}

inline DefiningGraph make(std::vector<int> orders,
                          std::vector<std::pair<VertexId, VertexId>> edges) {
  std::vector<GroupPtr> groups;
  for (int n : orders) groups.push_back(zn(n));
  return DefiningGraph(std::move(groups), edges);
}

// Two isolated Z_2 vertices: the infinite dihedral group Z_2 * Z_2.
inline DefiningGraph dihedral() { return make({2, 2}, {}); }

// One edge, Z_2 groups: Z_2 x Z_2, the Cayley square.
inline DefiningGraph square() { return make({2, 2}, {{0, 1}}); }

// Path 0-1-2 with Z_2 groups: (Z_2 * Z_2) x Z_2 at the middle.
inline DefiningGraph path3() { return make({2, 2, 2}, {{0, 1}, {1, 2}}); }

// Path with a Z_3 leaf; the minimal fixture with pairwise-distinct
// wandering images.
inline DefiningGraph path3_z3() { return make({2, 2, 3}, {{0, 1}, {1, 2}}); }

// Star K_{1,3}, center 0.
inline DefiningGraph star4() { return make({2, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}}); }

// 5-cycle with Z_2 groups; girth 5 > 4.
inline DefiningGraph cycle5() {
  return make({2, 2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// The girth-4 counterexample: 4-cycle with Z_3 groups, flat F_2 x F_2-like
// geometry.
inline DefiningGraph cycle4_z3() {
  return make({3, 3, 3, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Single vertex carrying Z_n: the Cayley graph is the complete graph K_n.
inline DefiningGraph single(int n) { return make({n}, {}); }

inline NormalForm nf(const DefiningGraph& graph, std::vector<Syllable> syls) {
  Word w;
  w.syllables = std::move(syls);
  return normal_form(w, graph);
}

}  // namespace fixtures

#endif  // GRAPHPROD_TESTS_FIXTURES_HPP_
