#ifndef GRAPHPROD_WORD_HPP_
#define GRAPHPROD_WORD_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "graphprod/defining_graph.hpp"

namespace graphprod {

// One letter of a word: a nontrivial element (table index != 0) of the group
// attached to `vertex`.
struct Syllable {
  VertexId vertex = 0;
  int elem = 0;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.vertex == b.vertex && a.elem == b.elem;
  }
  friend bool operator!=(const Syllable& a, const Syllable& b) { return !(a == b); }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.elem < b.elem;
  }
};

// An arbitrary (possibly non-geodesic) word over the generating set
// U_v (G_v \ {1}).
struct Word {
  std::vector<Syllable> syllables;
};

// The canonical geodesic representative of a group element: geodesic by the
// normal form theorem's criterion, ordered as the lexicographically least
// shuffle (least VertexId among front-movable syllables, repeatedly).
// The empty form represents the identity. Instances are produced by
// normal_form/multiply/invert and should be treated as opaque values.
class NormalForm {
 public:
  NormalForm() = default;

  const std::vector<Syllable>& syllables() const noexcept { return syls_; }
  std::size_t length() const noexcept { return syls_.size(); }  // ||g||
  bool is_identity() const noexcept { return syls_.empty(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.syls_ == b.syls_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    return a.syls_ < b.syls_;
  }

  // Canonical text encoding "v:e v:e ..." ("e" for the identity); doubles as
  // the dedup key for all graph exploration.
  std::string key() const;

 private:
  friend NormalForm normal_form(const Word&, const DefiningGraph&);
  friend class CanonicalBuilder;
  explicit NormalForm(std::vector<Syllable> syls) : syls_(std::move(syls)) {}

  std::vector<Syllable> syls_;
};

// Validates syllables (vertex known, 0 < elem < order) and returns the
// canonical form. Throws VertexGroupMismatch on an out-of-range element and
// UnknownVertex on a bad vertex id.
NormalForm normal_form(const Word& w, const DefiningGraph& graph);

// Canonical form of x*y. The decomposition is reduced iff
// result.length() == x.length() + y.length().
NormalForm multiply(const NormalForm& x, const NormalForm& y, const DefiningGraph& graph);

NormalForm invert(const NormalForm& x, const DefiningGraph& graph);

// supp(g): the set of vertices carrying syllables; empty for the identity.
std::set<VertexId> support(const NormalForm& x);

// True iff ||h_1 ... h_n|| equals the sum of the ||h_i||.
bool is_reduced_decomposition(std::span<const NormalForm> parts, const DefiningGraph& graph);

// All words reachable from x by adjacent commuting transpositions (the
// shuffle class). Truncated at `cap` members with the overflow flag set.
struct ShuffleClass {
  std::vector<std::vector<Syllable>> words;  // sorted lexicographically
  bool overflow = false;
};
ShuffleClass enumerate_normal_forms(const NormalForm& x, std::size_t cap,
                                    const DefiningGraph& graph);

// The normal form theorem's geodesic criterion, usable on raw syllable
// sequences (e.g. subwords): no pair i<j with equal vertex such that all
// intermediate syllables commute with it.
bool is_geodesic_word(std::span<const Syllable> syls, const DefiningGraph& graph);

}  // namespace graphprod

#endif  // GRAPHPROD_WORD_HPP_
