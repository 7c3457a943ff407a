#include "graphprod/views.hpp"

#include <algorithm>
#include <deque>

namespace graphprod {

FiniteGraphView::FiniteGraphView(std::vector<std::vector<int>> adjacency)
    : adj_(std::move(adjacency)) {
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  compute_distances();
}

FiniteGraphView::FiniteGraphView(const DefiningGraph& graph) {
  adj_.resize(static_cast<std::size_t>(graph.num_vertices()));
  for (int v = 0; v < graph.num_vertices(); ++v) adj_[static_cast<std::size_t>(v)] = graph.link(v);
  compute_distances();
}

void FiniteGraphView::compute_distances() {
  const int n = num_vertices();
  dist_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    int* row = dist_.data() + static_cast<std::size_t>(s) * n;
    std::deque<int> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adj_[static_cast<std::size_t>(x)]) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
}

int FiniteGraphView::distance(Vertex u, Vertex v) const {
  const int d = dist_[static_cast<std::size_t>(u) * num_vertices() + v];
  if (d < 0) {
    throw Error("Unreachable",
                "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                    " lie in different components");
  }
  return d;
}

}  // namespace graphprod
