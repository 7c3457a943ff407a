#ifndef GRAPHPROD_COSET_HPP_
#define GRAPHPROD_COSET_HPP_

#include <set>

#include "graphprod/word.hpp"

namespace graphprod {

// g = p * r with p in the subgroup generated by the vertex groups over F and
// r in the canonical set of right-coset representatives R_F. The pair is
// unique for each g.
struct CosetDecomposition {
  std::set<VertexId> F;
  NormalForm p;
  NormalForm r;
};

// Membership in F-subgroup: supp(g) contained in F. Throws UnknownVertex on
// an out-of-range entry of F.
bool in_FG(const NormalForm& g, const std::set<VertexId>& F, const DefiningGraph& graph);

// Membership in R_F: no shuffle of g starts with a syllable supported in F.
// Decided on the canonical form by the front-movability scan, which the
// normal form theorem makes equivalent to enumerating shuffles.
bool in_RF(const NormalForm& g, const std::set<VertexId>& F, const DefiningGraph& graph);

// The unique factorization, by greedy extraction of front-movable syllables
// supported in F until none remain.
CosetDecomposition decompose(const NormalForm& g, const std::set<VertexId>& F,
                             const DefiningGraph& graph);

// Canonical representative of the left coset g*<F-subgroup>: the inverse of
// r_F(inverse(g)). Constant on left cosets.
NormalForm left_coset_rep(const NormalForm& g, const std::set<VertexId>& F,
                          const DefiningGraph& graph);

}  // namespace graphprod

#endif  // GRAPHPROD_COSET_HPP_
