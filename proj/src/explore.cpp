#include "graphprod/explore.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace graphprod {

std::vector<std::size_t> ExploredBall::sphere_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius_completed) + 1, 0);
  for (int d : dist) ++sizes[static_cast<std::size_t>(d)];
  return sizes;
}

std::size_t ExploredBall::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return twice / 2;
}

int ExploredBall::index_of(const std::string& key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

std::optional<int> min_circuit_in_explored(const ExploredBall& ball) {
  // BFS from every vertex of the explored subgraph; non-tree edges close
  // circuits of length d(x)+d(y)+1 and the minimum over all sources is the
  // exact minimum circuit length of the subgraph.
  const int n = static_cast<int>(ball.size());
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] >= best) continue;
      for (int y : ball.adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x] && x != parent[y]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::string GirthResult::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::Infinite:
      return "inf";
    default:
      return "unknown(>" + std::to_string(value) + ")";
  }
}

GeodesicSet geodesic_paths(const ExploredBall& ball, int src, int dst, std::size_t path_cap) {
  GeodesicSet out;
  if (ball.dist[src] != 0) {
    throw Error("CapExceeded", "geodesic_paths requires a ball centered at the source");
  }
  if (src == dst) {
    out.paths.push_back({src});
    return out;
  }
  // Depth-first walk from dst along strictly decreasing distance labels.
  std::vector<int> stack{dst};
  std::vector<std::size_t> cursor{0};
  while (!stack.empty()) {
    const int u = stack.back();
    if (u == src) {
      if (out.paths.size() >= path_cap) {
        out.truncated = true;
        break;
      }
      out.paths.emplace_back(stack.rbegin(), stack.rend());
      stack.pop_back();
      cursor.pop_back();
      continue;
    }
    bool advanced = false;
    for (std::size_t& c = cursor.back(); c < ball.adj[u].size();) {
      const int w = ball.adj[u][c++];
      if (ball.dist[w] == ball.dist[u] - 1) {
        stack.push_back(w);
        cursor.push_back(0);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      cursor.pop_back();
    }
  }
  return out;
}

std::vector<int> canonical_circuit(const std::vector<int>& cycle, const ExploredBall& ball) {
  const std::size_t len = cycle.size();
  auto key_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < len; ++i) {
      const std::string& ka = ball.keys[static_cast<std::size_t>(a[i])];
      const std::string& kb = ball.keys[static_cast<std::size_t>(b[i])];
      if (ka != kb) return ka < kb;
    }
    return false;
  };
  std::vector<int> best = cycle;
  std::vector<int> cand(len);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t shift = 0; shift < len; ++shift) {
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t src = dir == 0 ? (shift + i) % len : (shift + len - i) % len;
        cand[i] = cycle[src];
      }
      if (key_less(cand, best)) best = cand;
    }
  }
  return best;
}

CircuitSet circuits_through_edge_core(const ExploredBall& ball, int a, int b, int n,
                                      std::size_t cap) {
  CircuitSet out;
  if (n < 3) return out;
  if (ball.dist[a] != 0) {
    throw Error("CapExceeded", "circuit enumeration requires a ball centered at the edge tail");
  }
  // Simple paths b -> ... -> a of length in [2, n-1] not using the edge (a,b);
  // each closes to exactly one circuit through (a,b). Prune with the exact
  // distance-to-a labels carried by the ball.
  std::vector<int> path{b};
  std::vector<char> used(ball.size(), 0);
  used[static_cast<std::size_t>(b)] = 1;
  used[static_cast<std::size_t>(a)] = 0;
  std::vector<std::size_t> cursor{0};
  std::vector<std::vector<int>> found;
  while (!path.empty()) {
    const int u = path.back();
    bool advanced = false;
    for (std::size_t& c = cursor.back(); c < ball.adj[u].size();) {
      const int w = ball.adj[u][c++];
      if (w == a) {
        // Closing edge; skip the direct use of (b,a) itself.
        if (path.size() >= 2 && path.size() + 1 <= static_cast<std::size_t>(n)) {
          if (found.size() >= cap) {
            out.truncated = true;
          } else {
            std::vector<int> cycle;
            cycle.reserve(path.size() + 1);
            cycle.push_back(a);
            cycle.insert(cycle.end(), path.begin(), path.end());
            found.push_back(canonical_circuit(cycle, ball));
          }
        }
        continue;
      }
      if (used[static_cast<std::size_t>(w)]) continue;
      // Extending to w costs one step; closing needs dist[w] more.
      if (static_cast<int>(path.size()) + 1 + ball.dist[w] > n - 1 + 1) continue;
      path.push_back(w);
      used[static_cast<std::size_t>(w)] = 1;
      cursor.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      used[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
      cursor.pop_back();
    }
  }
  std::sort(found.begin(), found.end(), [&](const std::vector<int>& x, const std::vector<int>& y) {
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < m; ++i) {
      const std::string& kx = ball.keys[static_cast<std::size_t>(x[i])];
      const std::string& ky = ball.keys[static_cast<std::size_t>(y[i])];
      if (kx != ky) return kx < ky;
    }
    return x.size() < y.size();
  });
  out.circuits = std::move(found);
  return out;
}

namespace {

std::vector<int> p_set_scan(const ExploredBall& ball,
                            const std::set<std::pair<int, int>>& blocked, bool require_all) {
  auto is_blocked = [&](int u, int v) {
    return blocked.count({u, v}) != 0 || blocked.count({v, u}) != 0;
  };
  // Level-order propagation. In the strict mode a vertex is dropped when
  // some geodesic from the center reaches it through a blocked edge; in the
  // surviving mode it is kept as long as one geodesic stays clean.
  const int n = static_cast<int>(ball.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return ball.dist[x] < ball.dist[y]; });
  std::vector<char> keep(n, 1);
  for (int u : order) {
    if (ball.dist[u] == 0) continue;
    bool all_clean = true, any_clean = false;
    for (int w : ball.adj[u]) {
      if (ball.dist[w] != ball.dist[u] - 1) continue;
      const bool clean = keep[w] && !is_blocked(w, u);
      all_clean = all_clean && clean;
      any_clean = any_clean || clean;
    }
    keep[u] = require_all ? all_clean : any_clean;
  }
  std::vector<int> result;
  for (int i = 0; i < n; ++i) {
    if (keep[i]) result.push_back(i);
  }
  return result;
}

}  // namespace

std::vector<int> restricted_p_set(const ExploredBall& ball,
                                  const std::set<std::pair<int, int>>& blocked) {
  return p_set_scan(ball, blocked, true);
}

std::vector<int> restricted_p_set_surviving(const ExploredBall& ball,
                                            const std::set<std::pair<int, int>>& blocked) {
  return p_set_scan(ball, blocked, false);
}

int four_point_defect_doubled(const std::vector<uint8_t>& gp2, std::size_t n,
                              std::size_t triple_budget, uint64_t seed, bool* exhaustive) {
  int best = 0;
  if (n == 0) return 0;
  const bool full = n <= triple_budget / n / n;
  *exhaustive = full;
  if (full) {
    std::vector<uint8_t> row(n);
    for (std::size_t x = 0; x < n; ++x) {
      const uint8_t* ax = gp2.data() + x * n;
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t y = 0; y < n; ++y) {
        const uint8_t m = ax[y];
        const uint8_t* ay = gp2.data() + y * n;
        for (std::size_t z = 0; z < n; ++z) {
          const uint8_t v = std::min(m, ay[z]);
          if (v > row[z]) row[z] = v;
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        best = std::max(best, static_cast<int>(row[z]) - static_cast<int>(ax[z]));
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < triple_budget; ++t) {
      const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      const int v = std::min(gp2[x * n + y], gp2[y * n + z]);
      best = std::max(best, v - static_cast<int>(gp2[x * n + z]));
    }
  }
  return best;
}

}  // namespace graphprod
