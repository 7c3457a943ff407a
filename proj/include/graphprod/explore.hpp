#ifndef GRAPHPROD_EXPLORE_HPP_
#define GRAPHPROD_EXPLORE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphprod/error.hpp"

namespace graphprod {

// Anything that exposes a graph one neighborhood at a time: a vertex type,
// an injective canonical key, and a symmetric neighbor list. All exploration
// is budgeted; reports say when a budget truncated them.
template <typename G>
concept Explorable = requires(const G& g, const typename G::Vertex& v) {
  typename G::Vertex;
  { g.key(v) } -> std::convertible_to<std::string>;
  { g.neighbors(v) } -> std::convertible_to<std::vector<typename G::Vertex>>;
};

// Graphs that can answer exact distance queries for arbitrary vertex pairs
// (the Cayley graph via the word metric, finite graphs via all-pairs BFS).
// The hyperbolicity probes require this; plain BFS ops do not.
template <typename G>
concept MetricExplorable = Explorable<G> && requires(const G& g, const typename G::Vertex& v) {
  { g.distance(v, v) } -> std::convertible_to<int>;
};

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

// Index-level view of an explored ball. Vertices are numbered in BFS order
// with each sphere sorted by key, so identical inputs give identical layouts.
// All spheres present are exact; `complete` means the whole component was
// exhausted, `budget_exhausted` that the vertex cap cut exploration short.
struct ExploredBall {
  std::vector<std::string> keys;       // index -> canonical key
  std::vector<int> dist;               // index -> distance from center
  std::vector<std::vector<int>> adj;   // induced adjacency, sorted indices
  std::unordered_map<std::string, int> index;
  int radius_requested = 0;
  int radius_completed = 0;
  bool budget_exhausted = false;
  bool complete = false;

  std::size_t size() const noexcept { return keys.size(); }
  std::vector<std::size_t> sphere_sizes() const;
  std::size_t edge_count() const;
  int index_of(const std::string& key) const;  // -1 if absent
};

namespace detail {

// Shared BFS core; expand() maps an index/key to neighbor keys, registering
// the vertex objects with the caller.
template <typename ExpandFn>
ExploredBall bfs_core(const std::string& origin_key, int radius, std::size_t cap,
                      ExpandFn&& expand, const std::string& stop_key) {
  ExploredBall ball;
  ball.radius_requested = radius;
  ball.keys.push_back(origin_key);
  ball.dist.push_back(0);
  ball.index.emplace(origin_key, 0);

  std::vector<std::vector<std::string>> nbr_keys;  // per index, filled on expand
  bool found_stop = origin_key == stop_key;
  int level = 0;
  std::size_t level_begin = 0;
  while (level < radius && !found_stop) {
    const std::size_t level_end = ball.keys.size();
    std::map<std::string, int> next;  // key -> discovering index (sorted)
    for (std::size_t i = level_begin; i < level_end; ++i) {
      nbr_keys.push_back(expand(ball.keys[i]));
      for (const std::string& k : nbr_keys.back()) {
        if (!ball.index.count(k)) next.emplace(k, static_cast<int>(i));
      }
    }
    if (next.empty()) break;
    if (cap != kNoCap && ball.keys.size() + next.size() > cap) {
      ball.budget_exhausted = true;
      break;
    }
    for (const auto& [k, from] : next) {
      ball.index.emplace(k, static_cast<int>(ball.keys.size()));
      ball.keys.push_back(k);
      ball.dist.push_back(level + 1);
      if (k == stop_key) found_stop = true;
    }
    level_begin = level_end;
    ++level;
  }
  ball.radius_completed = level;
  // Expand any vertices not yet expanded (the outermost sphere) so the
  // induced adjacency is complete; exterior neighbors just get skipped.
  for (std::size_t i = nbr_keys.size(); i < ball.keys.size(); ++i) {
    nbr_keys.push_back(expand(ball.keys[i]));
  }
  ball.adj.resize(ball.keys.size());
  bool exterior = false;
  for (std::size_t i = 0; i < ball.keys.size(); ++i) {
    for (const std::string& k : nbr_keys[i]) {
      auto it = ball.index.find(k);
      if (it == ball.index.end()) {
        exterior = true;
      } else if (it->second != static_cast<int>(i)) {
        ball.adj[i].push_back(it->second);
      }
    }
    std::sort(ball.adj[i].begin(), ball.adj[i].end());
    ball.adj[i].erase(std::unique(ball.adj[i].begin(), ball.adj[i].end()), ball.adj[i].end());
  }
  ball.complete = !ball.budget_exhausted && !exterior;
  return ball;
}

}  // namespace detail

// An explored ball along with the vertex objects, parallel to the index view.
template <typename G>
struct BallSnapshot {
  ExploredBall core;
  std::vector<typename G::Vertex> verts;

  const typename G::Vertex& vertex(int idx) const { return verts[static_cast<std::size_t>(idx)]; }
};

template <Explorable G>
BallSnapshot<G> ball_bfs(const G& g, const typename G::Vertex& center, int radius,
                         std::size_t cap = kNoCap) {
  BallSnapshot<G> snap;
  std::unordered_map<std::string, typename G::Vertex> pool;
  const std::string origin_key = g.key(center);
  pool.emplace(origin_key, center);
  auto expand = [&](const std::string& key) {
    const auto& v = pool.at(key);
    std::vector<std::string> out;
    for (auto&& nb : g.neighbors(v)) {
      std::string k = g.key(nb);
      pool.emplace(k, nb);
      out.push_back(std::move(k));
    }
    return out;
  };
  snap.core = detail::bfs_core(origin_key, radius, cap, expand, std::string());
  snap.verts.reserve(snap.core.keys.size());
  for (const std::string& k : snap.core.keys) snap.verts.push_back(pool.at(k));
  return snap;
}

// BFS outward from `center` until `target` appears (its whole sphere is still
// completed). Throws Unreachable when the component is exhausted first and
// CapExceeded when the vertex budget is.
template <Explorable G>
BallSnapshot<G> ball_bfs_to_target(const G& g, const typename G::Vertex& center,
                                   const typename G::Vertex& target, std::size_t cap = kNoCap) {
  BallSnapshot<G> snap;
  std::unordered_map<std::string, typename G::Vertex> pool;
  const std::string origin_key = g.key(center);
  const std::string target_key = g.key(target);
  pool.emplace(origin_key, center);
  auto expand = [&](const std::string& key) {
    const auto& v = pool.at(key);
    std::vector<std::string> out;
    for (auto&& nb : g.neighbors(v)) {
      std::string k = g.key(nb);
      pool.emplace(k, nb);
      out.push_back(std::move(k));
    }
    return out;
  };
  snap.core = detail::bfs_core(origin_key, std::numeric_limits<int>::max(), cap, expand,
                               target_key);
  if (!snap.core.index.count(target_key)) {
    if (snap.core.budget_exhausted) {
      throw Error("CapExceeded", "vertex budget exhausted before reaching " + target_key);
    }
    throw Error("Unreachable", target_key + " not reachable from " + origin_key);
  }
  snap.verts.reserve(snap.core.keys.size());
  for (const std::string& k : snap.core.keys) snap.verts.push_back(pool.at(k));
  return snap;
}

// ---- Index-level algorithms (implemented in explore.cpp) ----

// Exact minimum circuit length present in the explored subgraph, or nullopt.
std::optional<int> min_circuit_in_explored(const ExploredBall& ball);

struct GirthResult {
  enum class Kind { Finite, Infinite, Unknown } kind = Kind::Unknown;
  // Finite: the circuit length. Unknown: certified bound, girth(origin) > value.
  int value = 0;

  std::string to_string() const;
};

// All geodesic paths src -> dst inside a ball whose distances are measured
// from src. Paths come out as index sequences, deterministically ordered.
struct GeodesicSet {
  std::vector<std::vector<int>> paths;
  bool truncated = false;
};
GeodesicSet geodesic_paths(const ExploredBall& ball, int src, int dst,
                           std::size_t path_cap = kNoCap);

// Circuits through the edge (a,b) of length in (2, n], canonicalized up to
// rotation and reversal, deterministically ordered. The ball must be centered
// at `a` with radius >= floor(n/2) for the enumeration to be exhaustive.
struct CircuitSet {
  std::vector<std::vector<int>> circuits;  // canonical cyclic index sequences
  bool truncated = false;
};
CircuitSet circuits_through_edge_core(const ExploredBall& ball, int a, int b, int n,
                                      std::size_t cap = kNoCap);

// Canonical form of a cyclic vertex-sequence under rotation and reversal,
// comparing by vertex key.
std::vector<int> canonical_circuit(const std::vector<int>& cycle, const ExploredBall& ball);

// {b in ball : no geodesic from the center to b crosses an edge of I}.
// I is given as index pairs; both orientations are blocked. Exact because
// ball distances are measured from the center.
std::vector<int> restricted_p_set(const ExploredBall& ball,
                                  const std::set<std::pair<int, int>>& blocked);

// The companion existential variant: {b in ball : some geodesic from the
// center to b avoids every edge of I}. Always a superset of the strict set;
// both families are neighborhood bases for the same topology.
std::vector<int> restricted_p_set_surviving(const ExploredBall& ball,
                                            const std::set<std::pair<int, int>>& blocked);

// ---- Probes over metric graphs ----

struct GirthOptions {
  int search_radius = 3;
  std::size_t cap = kNoCap;
};

template <Explorable G>
GirthResult girth(const G& g, const typename G::Vertex& origin, const GirthOptions& opt) {
  const auto snap = ball_bfs(g, origin, opt.search_radius, opt.cap);
  const auto found = min_circuit_in_explored(snap.core);
  GirthResult r;
  if (snap.core.complete) {
    if (found) {
      r.kind = GirthResult::Kind::Finite;
      r.value = *found;
    } else {
      r.kind = GirthResult::Kind::Infinite;
    }
  } else if (found) {
    // A genuine circuit; an upper bound for the girth of the ambient graph.
    r.kind = GirthResult::Kind::Finite;
    r.value = *found;
  } else {
    // Any circuit through the origin of length <= 2R+1 lies in the ball.
    r.kind = GirthResult::Kind::Unknown;
    r.value = 2 * snap.core.radius_completed + 1;
  }
  return r;
}

struct FourPointResult {
  double delta = 0.0;       // least delta over the evaluated quadruples
  bool exhaustive = true;   // false when triple sampling kicked in
  int radius_tested = 0;
  std::size_t ball_size = 0;
  bool ball_truncated = false;
};

// Core on a doubled Gromov-product matrix; declared here, defined in the .cpp.
int four_point_defect_doubled(const std::vector<uint8_t>& gp2, std::size_t n,
                              std::size_t triple_budget, uint64_t seed, bool* exhaustive);

// Least delta such that (x,z)_w >= min{(x,y)_w, (y,z)_w} - delta for the
// basepoint w = origin and x,y,z in the ball. Distances are exact (metric
// oracle), so the estimate is monotone in the radius. Quadruple evaluation is
// exhaustive unless |ball|^3 exceeds triple_budget, in which case seeded
// sampling is used and the result flagged.
template <MetricExplorable G>
FourPointResult four_point_delta(const G& g, const typename G::Vertex& origin, int radius,
                                 std::size_t cap = kNoCap,
                                 std::size_t triple_budget = std::size_t(4) << 30,
                                 uint64_t seed = 0) {
  const auto snap = ball_bfs(g, origin, radius, cap);
  const std::size_t n = snap.core.size();
  std::vector<int> d0(n);
  for (std::size_t i = 0; i < n; ++i) d0[i] = snap.core.dist[i];
  std::vector<uint8_t> gp2(n * n);  // doubled Gromov products (x,y)_origin
  for (std::size_t i = 0; i < n; ++i) {
    gp2[i * n + i] = static_cast<uint8_t>(2 * d0[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const int dij = g.distance(snap.verts[i], snap.verts[j]);
      const int prod2 = d0[i] + d0[j] - dij;
      gp2[i * n + j] = gp2[j * n + i] = static_cast<uint8_t>(prod2);
    }
  }
  FourPointResult res;
  res.radius_tested = radius;
  res.ball_size = n;
  res.ball_truncated = snap.core.budget_exhausted;
  bool exhaustive = true;
  const int defect2 = four_point_defect_doubled(gp2, n, triple_budget, seed, &exhaustive);
  res.delta = defect2 / 2.0;
  res.exhaustive = exhaustive;
  return res;
}

// Per-edge circuit counts |C(e,n)| for n = 3..n_max over a sample of edges,
// with the max over the sample as the empirical fineness function f(n).
struct FinenessTable {
  int n_max = 0;
  std::vector<std::string> edge_names;                // "tail -- head"
  std::vector<std::vector<std::size_t>> counts;       // per edge, n = 3..n_max
  std::vector<std::size_t> max_per_n;                 // empirical f(n)
  bool truncated = false;
};

template <Explorable G>
FinenessTable fineness_probe(const G& g,
                             const std::vector<std::pair<typename G::Vertex,
                                                         typename G::Vertex>>& edges,
                             int n_max, std::size_t cap = kNoCap) {
  FinenessTable table;
  table.n_max = n_max;
  table.max_per_n.assign(n_max >= 3 ? static_cast<std::size_t>(n_max - 2) : 0, 0);
  for (const auto& [tail, head] : edges) {
    const auto snap = ball_bfs(g, tail, n_max / 2, cap);
    table.truncated |= snap.core.budget_exhausted;
    const int b = snap.core.index_of(g.key(head));
    if (b < 0) {
      throw Error("UnknownVertex", "edge head " + g.key(head) + " not adjacent to tail");
    }
    std::vector<std::size_t> row;
    for (int n = 3; n <= n_max; ++n) {
      const auto circuits = circuits_through_edge_core(snap.core, 0, b, n, cap);
      table.truncated |= circuits.truncated;
      row.push_back(circuits.circuits.size());
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      table.max_per_n[i] = std::max(table.max_per_n[i], row[i]);
    }
    table.edge_names.push_back(g.key(tail) + " -- " + g.key(head));
    table.counts.push_back(std::move(row));
  }
  return table;
}

struct BigonWitness {
  std::string kind;  // "delta" or "interior"
  std::string a, b, c;
  std::vector<std::string> p, q;
  std::string vertex;  // the vertex of p left uncovered
};

struct BigonResult {
  bool pass = true;
  std::optional<BigonWitness> witness;
  int max_delta = 0;     // max one-sided deviation over all bigons seen
  int max_interior = 0;  // max interior deviation over equal-endpoint bigons
  bool truncated = false;
  std::size_t bigons_checked = 0;
};

// Checks every geodesic bigon with base a in the ball and arms of length
// <= radius: for endpoints b,c with d(b,c) <= 1 and d(a,b) = d(a,c), each
// pair p in Geo(a,b), q in Geo(a,c) must satisfy p in N(q, delta) and
// q in N(p, delta); equal-endpoint bigons must additionally keep interior
// vertices within distance `interior_const` of each other's interior.
template <MetricExplorable G>
BigonResult bigon_check(const G& g, const typename G::Vertex& origin, int radius, int delta,
                        int interior_const = 2, std::size_t cap = kNoCap,
                        std::size_t geodesic_cap = 100000) {
  BigonResult res;
  const auto outer = ball_bfs(g, origin, radius, cap);
  res.truncated = outer.core.budget_exhausted;
  std::unordered_map<std::string, int> dist_memo;
  auto pair_dist = [&](const typename G::Vertex& x, const std::string& kx,
                       const typename G::Vertex& y, const std::string& ky) {
    const std::string mk = kx < ky ? kx + '\x01' + ky : ky + '\x01' + kx;
    auto it = dist_memo.find(mk);
    if (it != dist_memo.end()) return it->second;
    const int d = g.distance(x, y);
    dist_memo.emplace(mk, d);
    return d;
  };

  for (std::size_t ai = 0; ai < outer.core.size() && res.pass; ++ai) {
    const auto local = ball_bfs(g, outer.verts[ai], radius, cap);
    if (local.core.budget_exhausted) res.truncated = true;
    const auto& core = local.core;
    // Geodesic sets from the base, computed lazily per endpoint.
    std::vector<std::optional<GeodesicSet>> geos(core.size());
    auto geodesics_to = [&](int idx) -> const GeodesicSet& {
      if (!geos[idx]) {
        geos[idx] = geodesic_paths(core, 0, idx, geodesic_cap);
        if (geos[idx]->truncated) res.truncated = true;
      }
      return *geos[idx];
    };
    auto deviation = [&](const std::vector<int>& p, const std::vector<int>& q,
                         int* worst_vertex) {
      int worst = 0;
      for (int u : p) {
        int best = std::numeric_limits<int>::max();
        for (int w : q) {
          const int d = pair_dist(local.verts[u], core.keys[u], local.verts[w], core.keys[w]);
          best = std::min(best, d);
          if (best == 0) break;
        }
        if (best > worst) {
          worst = best;
          if (worst_vertex) *worst_vertex = u;
        }
      }
      return worst;
    };

    for (std::size_t bi = 0; bi < core.size() && res.pass; ++bi) {
      // c ranges over {b} and the neighbors of b with larger index, so each
      // unordered endpoint pair is visited once.
      std::vector<int> cs{static_cast<int>(bi)};
      for (int ci : core.adj[bi]) {
        if (ci > static_cast<int>(bi)) cs.push_back(ci);
      }
      for (int ci : cs) {
        if (core.dist[bi] != core.dist[ci]) continue;
        const auto& gb = geodesics_to(static_cast<int>(bi));
        const auto& gc = geodesics_to(ci);
        const bool equal_endpoints = ci == static_cast<int>(bi);
        for (std::size_t pi = 0; pi < gb.paths.size() && res.pass; ++pi) {
          const std::size_t q_begin = equal_endpoints ? pi + 1 : 0;
          for (std::size_t qi = q_begin; qi < gc.paths.size() && res.pass; ++qi) {
            const auto& p = gb.paths[pi];
            const auto& q = gc.paths[qi];
            ++res.bigons_checked;
            int bad_u = -1;
            const int dev_pq = deviation(p, q, &bad_u);
            int bad_u2 = -1;
            const int dev_qp = deviation(q, p, &bad_u2);
            const int dev = std::max(dev_pq, dev_qp);
            res.max_delta = std::max(res.max_delta, dev);
            if (dev > delta) {
              res.pass = false;
              BigonWitness w;
              w.kind = "delta";
              w.a = core.keys[0];
              w.b = core.keys[bi];
              w.c = core.keys[ci];
              for (int u : p) w.p.push_back(core.keys[u]);
              for (int u : q) w.q.push_back(core.keys[u]);
              w.vertex = core.keys[dev_pq >= dev_qp ? bad_u : bad_u2];
              res.witness = std::move(w);
              break;
            }
            if (equal_endpoints && p.size() > 2) {
              const std::vector<int> p_int(p.begin() + 1, p.end() - 1);
              const std::vector<int> q_int(q.begin() + 1, q.end() - 1);
              int bad_i = -1;
              const int di = std::max(deviation(p_int, q_int, &bad_i),
                                      deviation(q_int, p_int, nullptr));
              res.max_interior = std::max(res.max_interior, di);
              if (di > interior_const) {
                res.pass = false;
                BigonWitness w;
                w.kind = "interior";
                w.a = core.keys[0];
                w.b = core.keys[bi];
                w.c = core.keys[ci];
                for (int u : p) w.p.push_back(core.keys[u]);
                for (int u : q) w.q.push_back(core.keys[u]);
                w.vertex = bad_i >= 0 ? core.keys[bad_i] : "";
                res.witness = std::move(w);
              }
            }
          }
        }
      }
    }
  }
  return res;
}

// Gromov product (x,y)_z from exact distances.
template <MetricExplorable G>
double gromov_product(const G& g, const typename G::Vertex& x, const typename G::Vertex& y,
                      const typename G::Vertex& z) {
  return (g.distance(x, z) + g.distance(y, z) - g.distance(x, y)) / 2.0;
}

// Combined hyperbolicity probe. Both constants are monotone nondecreasing in
// the radius on a fixed graph (quadruple and bigon sets nest, distances are
// exact).
struct DeltaEstimate {
  int delta_bigon = 0;
  double delta_four_point = 0.0;
  int radius_tested = 0;
  int interior_max = 0;
  bool exhaustive = true;
  bool truncated = false;
};

template <MetricExplorable G>
DeltaEstimate hyperbolicity_estimate(const G& g, const typename G::Vertex& origin, int radius,
                                     std::size_t cap = kNoCap,
                                     std::size_t triple_budget = std::size_t(4) << 30,
                                     uint64_t seed = 0) {
  const auto four = four_point_delta(g, origin, radius, cap, triple_budget, seed);
  const auto bigon = bigon_check(g, origin, radius, std::numeric_limits<int>::max(),
                                 std::numeric_limits<int>::max(), cap);
  DeltaEstimate est;
  est.delta_bigon = bigon.max_delta;
  est.delta_four_point = four.delta;
  est.radius_tested = radius;
  est.interior_max = bigon.max_interior;
  est.exhaustive = four.exhaustive;
  est.truncated = four.ball_truncated || bigon.truncated;
  return est;
}

}  // namespace graphprod

#endif  // GRAPHPROD_EXPLORE_HPP_
