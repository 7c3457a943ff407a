#ifndef GRAPHPROD_DYNAMICS_HPP_
#define GRAPHPROD_DYNAMICS_HPP_

#include <optional>
#include <vector>

#include "graphprod/extension.hpp"

namespace graphprod {

// Order probe outcome: either the exact finite order, or the statement that
// it exceeds the bound N. Never a claim of infinite order.
struct OrderStatus {
  std::optional<int> order;  // nullopt = exceeds bound
  int bound = 0;

  bool finite() const noexcept { return order.has_value(); }
};

OrderStatus bounded_order(const NormalForm& g, int bound, const DefiningGraph& graph);

// All vertices of the windowed radius-r extension ball about `root` fixed by
// g under conjugation.
struct FixedSetReport {
  std::vector<ExtVertex> fixed;
  std::size_t ball_size = 0;
  bool truncated = false;
  int window = 0;
  int radius = 0;
};
FixedSetReport fixed_ext_vertices(const NormalForm& g, const ExtVertex& root, int window,
                                  int radius, std::size_t cap, const DefiningGraph& graph);

// One step of the wandering-orbit experiment: where g_n sends the chosen
// neighbor w of v, whether that image is new, and whether it avoids each of
// the supplied finite edge sets around v (membership in the restricted
// Bowditch neighborhood).
struct WanderingStep {
  NormalForm g;
  ExtVertex image;                 // g.w
  bool new_vertex = false;         // distinct from all previous images
  std::optional<int> dist_to_center;  // within the windowed ball; nullopt = outside
  std::vector<bool> in_p_set;      // one entry per supplied I
};

struct WanderingTrace {
  std::vector<WanderingStep> steps;
  bool all_distinct = false;
  std::size_t ball_size = 0;
  bool truncated = false;
};

// Each element of seq must stabilize (v, 1) (error NotInStabilizer) and w
// must be a neighbor of v in the defining graph (error NotInLink). The edge
// sets are pairs of extension vertices incident to (v, 1).
WanderingTrace wandering_orbit_experiment(VertexId v, VertexId w,
                                          const std::vector<NormalForm>& seq,
                                          const std::vector<std::vector<std::pair<ExtVertex, ExtVertex>>>& edge_sets,
                                          int window, int radius, std::size_t cap,
                                          const DefiningGraph& graph);

}  // namespace graphprod

#endif  // GRAPHPROD_DYNAMICS_HPP_
