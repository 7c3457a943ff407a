#ifndef GRAPHPROD_VERIFY_HPP_
#define GRAPHPROD_VERIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "graphprod/defining_graph.hpp"

namespace graphprod {

struct VerifyOptions {
  uint64_t seed = 0;
  int word_samples = 200;     // random words per sampled check
  int max_word_length = 8;
  int cayley_radius = 3;      // ball radius for metric/coset checks
  std::size_t vertex_cap = 20000;
  int ext_window = 1;
};

struct VerifyResult {
  int checks_run = 0;
  int checks_failed = 0;
  bool truncated = false;

  bool ok() const noexcept { return checks_failed == 0; }
};

// Runs the cross-module invariant suite on a fixture, emitting one JSON line
// per check (and a final summary line) to `out`. Identical options and
// fixture give byte-identical output.
VerifyResult run_verify(const DefiningGraph& graph, const VerifyOptions& options,
                        std::ostream& out);

}  // namespace graphprod

#endif  // GRAPHPROD_VERIFY_HPP_
