#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "graphprod/cayley.hpp"
#include "graphprod/explore.hpp"
#include "graphprod/extension.hpp"

using fixtures::nf;
using graphprod::ExtVertex;
using graphprod::NormalForm;
using graphprod::VertexId;

namespace {

// Brute-force commutation of two conjugated subgroups, written directly
// against the word engine (no coset machinery).
bool commute_oracle(VertexId v, const NormalForm& g, VertexId w, const NormalForm& h,
                    const graphprod::DefiningGraph& graph) {
  const auto gi = invert(g, graph);
  const auto hi = invert(h, graph);
  for (int a = 1; a < graph.group(v)->order(); ++a) {
    const auto ca = multiply(multiply(g, nf(graph, {{v, a}}), graph), gi, graph);
    for (int b = 1; b < graph.group(w)->order(); ++b) {
      const auto cb = multiply(multiply(h, nf(graph, {{w, b}}), graph), hi, graph);
      if (multiply(ca, cb, graph) != multiply(cb, ca, graph)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("canonicalize_ext collapses stabilizer conjugators") {
  const auto g = fixtures::path3();
  SUBCASE("identity conjugator") {
    const auto x = canonicalize_ext(1, NormalForm(), g);
    CHECK(x.base == 1);
    CHECK(x.conjugator.is_identity());
  }
  SUBCASE("own vertex group collapses") {
    const auto x = canonicalize_ext(1, nf(g, {{1, 1}}), g);
    CHECK(x.conjugator.is_identity());
  }
  SUBCASE("star neighbors collapse, strangers do not") {
    // w=2 is not in St(0) on the path 0-1-2.
    const auto x = canonicalize_ext(0, nf(g, {{2, 1}}), g);
    CHECK(x.conjugator == nf(g, {{2, 1}}));
    const auto y = canonicalize_ext(0, nf(g, {{1, 1}}), g);
    CHECK(y.conjugator.is_identity());
  }
  SUBCASE("unknown base vertex") {
    CHECK_THROWS_WITH_AS(canonicalize_ext(9, NormalForm(), g),
                         doctest::Contains("UnknownVertex"), graphprod::Error);
  }
}

TEST_CASE("ext equality and the base-vertex map") {
  const auto g = fixtures::path3();
  const auto x = canonicalize_ext(1, NormalForm(), g);
  const auto y = canonicalize_ext(1, NormalForm(), g);
  CHECK(x == y);
  CHECK(x.base == 1);
  CHECK(canonicalize_ext(0, NormalForm(), g) != canonicalize_ext(2, NormalForm(), g));
  CHECK(canonicalize_ext(0, nf(g, {{2, 1}}), g) != canonicalize_ext(0, NormalForm(), g));
}

TEST_CASE("ext adjacency matches the commutation oracle") {
  const auto g = fixtures::path3();
  SUBCASE("defining-graph edges persist") {
    CHECK(ext_adjacent(canonicalize_ext(0, NormalForm(), g),
                       canonicalize_ext(1, NormalForm(), g), g));
  }
  SUBCASE("non-edges stay non-adjacent") {
    CHECK(!ext_adjacent(canonicalize_ext(0, NormalForm(), g),
                        canonicalize_ext(2, NormalForm(), g), g));
  }
  SUBCASE("conjugated neighbor: (v,e) ~ (u, c_w)") {
    const auto x = canonicalize_ext(1, NormalForm(), g);
    const auto y = canonicalize_ext(0, nf(g, {{2, 1}}), g);
    CHECK(ext_adjacent(x, y, g));
    CHECK(commute_oracle(1, NormalForm(), 0, nf(g, {{2, 1}}), g));
  }
  SUBCASE("oracle agreement across the window-1 pool") {
    graphprod::ExtensionGraphWindow window(g, 1, canonicalize_ext(0, NormalForm(), g));
    const auto& pool = window.candidates();
    for (const auto& x : pool) {
      for (const auto& y : pool) {
        const bool adj = ext_adjacent(x, y, g);
        if (x == y) {
          CHECK(!adj);
        } else {
          CHECK(adj == commute_oracle(x.base, x.conjugator, y.base, y.conjugator, g));
        }
      }
    }
  }
}

TEST_CASE("the defining graph embeds as the window-0 subgraph") {
  for (const auto& g : {fixtures::path3(), fixtures::cycle5(), fixtures::star4()}) {
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (u == v) continue;
        CHECK(ext_adjacent(canonicalize_ext(u, NormalForm(), g),
                           canonicalize_ext(v, NormalForm(), g), g) == g.adjacent(u, v));
      }
    }
  }
}

TEST_CASE("windowed neighbor enumeration") {
  const auto g = fixtures::path3();
  const auto center = canonicalize_ext(1, NormalForm(), g);
  SUBCASE("window 0 recovers the defining-graph link") {
    const auto nbrs = ext_neighbors_windowed(center, 0, g);
    std::set<std::string> keys;
    for (const auto& x : nbrs) keys.insert(x.key());
    CHECK(keys == std::set<std::string>{"0|e", "2|e"});
  }
  SUBCASE("window 1 adds the conjugated copies") {
    const auto nbrs = ext_neighbors_windowed(center, 1, g);
    std::set<std::string> keys;
    for (const auto& x : nbrs) keys.insert(x.key());
    CHECK(keys == std::set<std::string>{"0|e", "2|e", "0|2:1", "2|0:1"});
  }
  SUBCASE("windows are monotone") {
    const auto small = ext_neighbors_windowed(center, 0, g);
    const auto large = ext_neighbors_windowed(center, 1, g);
    std::set<std::string> large_keys;
    for (const auto& x : large) large_keys.insert(x.key());
    for (const auto& x : small) CHECK(large_keys.count(x.key()) == 1);
  }
  SUBCASE("isolated vertex has an empty link") {
    const auto iso = fixtures::single(2);
    const auto nbrs =
        ext_neighbors_windowed(canonicalize_ext(0, NormalForm(), iso), 1, iso);
    CHECK(nbrs.empty());
  }
}

TEST_CASE("conjugation action") {
  const auto g = fixtures::path3();
  const auto x = canonicalize_ext(1, NormalForm(), g);
  SUBCASE("identity acts trivially") { CHECK(ext_act(NormalForm(), x, g) == x); }
  SUBCASE("commuting conjugation fixes the vertex") {
    CHECK(ext_act(nf(g, {{0, 1}}), x, g) == x);  // 0 in Lk(1)
  }
  SUBCASE("dihedral-style move on isolated vertices") {
    const auto d = fixtures::dihedral();
    const auto y = canonicalize_ext(1, NormalForm(), d);
    const auto moved = ext_act(nf(d, {{0, 1}}), y, d);
    CHECK(moved.base == 1);
    CHECK(moved.conjugator == nf(d, {{0, 1}}));
  }
  SUBCASE("action property g.(h.x) = (gh).x") {
    const auto a = nf(g, {{0, 1}});
    const auto b = nf(g, {{2, 1}, {1, 1}});
    const auto lhs = ext_act(a, ext_act(b, x, g), g);
    const auto rhs = ext_act(multiply(a, b, g), x, g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("stabilizer test spec examples") {
  const auto g = fixtures::path3();
  CHECK(ext_stabilizer_test(nf(g, {{1, 1}}), 1, g));
  CHECK(ext_stabilizer_test(nf(g, {{2, 1}}), 1, g));  // 2 in St(1)
  CHECK(!ext_stabilizer_test(nf(g, {{0, 1}}), 2, g));  // 0 not in St(2)
}

TEST_CASE("stabilizer law: fixes (v,e) iff supp within St(v), radius-4 ball") {
  for (const auto& g : {fixtures::path3(), fixtures::square()}) {
    graphprod::CayleyGraph cayley(g);
    const auto ball = ball_bfs(cayley, cayley.origin(), 4);
    for (const auto& w : ball.verts) {
      const auto supp = support(w);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto star = g.star(v);
        const std::set<VertexId> st(star.begin(), star.end());
        const bool by_supp = std::includes(st.begin(), st.end(), supp.begin(), supp.end());
        CHECK(ext_stabilizer_test(w, v, g) == by_supp);
      }
    }
  }
}

TEST_CASE("orbit injectivity over stabilizer elements") {
  // Distinct stabilizer elements of v move (w, e) to distinct vertices
  // unless they differ by an element of St(w)'s subgroup.
  const auto g = fixtures::path3_z3();
  const VertexId v = 1, w = 0;
  graphprod::CayleyGraph cayley(g);
  const auto ball = ball_bfs(cayley, cayley.origin(), 3);
  const auto star_w = g.star(w);
  const std::set<VertexId> stw(star_w.begin(), star_w.end());
  const auto target = canonicalize_ext(w, NormalForm(), g);
  for (const auto& a : ball.verts) {
    if (!ext_stabilizer_test(a, v, g)) continue;
    for (const auto& b : ball.verts) {
      if (!ext_stabilizer_test(b, v, g)) continue;
      const auto quotient = multiply(invert(a, g), b, g);
      const auto qsupp = support(quotient);
      const bool same_coset = std::includes(stw.begin(), stw.end(), qsupp.begin(), qsupp.end());
      CHECK((ext_act(a, target, g) == ext_act(b, target, g)) == same_coset);
    }
  }
}

TEST_CASE("windowed extension ball BFS") {
  const auto g = fixtures::path3();
  const auto center = canonicalize_ext(1, NormalForm(), g);
  graphprod::ExtensionGraphWindow window(g, 1, center);
  const auto snap = ball_bfs(window, center, 2);
  CHECK(snap.core.size() >= 5);
  CHECK(snap.core.dist[0] == 0);
  // Neighbor symmetry within the explored region.
  for (std::size_t i = 0; i < snap.core.size(); ++i) {
    for (int j : snap.core.adj[i]) {
      const auto& back = snap.core.adj[static_cast<std::size_t>(j)];
      CHECK(std::find(back.begin(), back.end(), static_cast<int>(i)) != back.end());
    }
  }
}
