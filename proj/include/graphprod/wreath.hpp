#ifndef GRAPHPROD_WREATH_HPP_
#define GRAPHPROD_WREATH_HPP_

#include <string>
#include <vector>

#include "graphprod/word.hpp"

namespace graphprod {

// A concrete finite group of symmetries of the defining graph: named vertex
// permutations, validated to preserve edges and vertex-group assignments and
// to be closed under composition and inverse. The identity permutation is
// always present (closure forces it).
class GraphAction {
 public:
  struct Perm {
    std::string name;
    std::vector<VertexId> map;  // image of vertex i at position i
  };

  // Throws ActionInvalid naming the violated edge, group pair, or closure
  // witness.
  GraphAction(std::vector<Perm> perms, const DefiningGraph& graph);

  const DefiningGraph& defining_graph() const noexcept { return *graph_; }
  const std::vector<Perm>& perms() const noexcept { return perms_; }
  const Perm& identity() const { return perms_[identity_]; }

  // Lookup by name; throws ActionInvalid for an unknown name.
  const Perm& perm(const std::string& name) const;

  // Names of the composition g1 then g2 (acting left to right as vertex maps:
  // (g1*g2)(v) = g1(g2(v))) and of the inverse.
  const Perm& compose(const Perm& g1, const Perm& g2) const;
  const Perm& inverse(const Perm& g) const;

 private:
  const DefiningGraph* graph_;
  std::vector<Perm> perms_;
  std::size_t identity_ = 0;
};

// The automorphism induced by a graph symmetry: relabel each syllable's
// vertex, keep the element index, re-canonicalize.
NormalForm apply_automorphism(const GraphAction::Perm& g, const NormalForm& w,
                              const DefiningGraph& graph);

// An element (word, actor) of the semidirect product of the graph product by
// the symmetry group.
struct WreathElem {
  NormalForm word;
  std::string actor;
};

WreathElem wreath_identity(const GraphAction& action);
WreathElem wreath_mul(const WreathElem& x, const WreathElem& y, const GraphAction& action);
WreathElem wreath_inv(const WreathElem& x, const GraphAction& action);

// The action of (w, g) on a Cayley vertex: v -> w * alpha_g(v). Pure
// translations are left multiplication; the pure-symmetry part is
// conjugation, which permutes edge labels but preserves the graph.
NormalForm wreath_act_on_cayley(const WreathElem& x, const NormalForm& v,
                                const GraphAction& action);

// Permutations fixing both the identity vertex and the vertex [g_elem in
// G_v]; equals the permutations fixing v, which the report also lists so the
// two routes can be compared.
struct StabilizerProbe {
  std::vector<std::string> fixing_both;   // via the Cayley action
  std::vector<std::string> fixing_vertex;  // via the vertex map
  bool equal = false;
};
StabilizerProbe wreath_stabilizer_probe(const GraphAction& action, VertexId v, int elem);

}  // namespace graphprod

#endif  // GRAPHPROD_WREATH_HPP_
