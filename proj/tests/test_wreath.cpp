#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "graphprod/cayley.hpp"
#include "graphprod/error.hpp"
#include "graphprod/explore.hpp"
#include "graphprod/wreath.hpp"

using fixtures::nf;
using graphprod::GraphAction;
using graphprod::NormalForm;
using graphprod::WreathElem;

namespace {

// Swap of the two isolated dihedral vertices.
GraphAction swap_action(const graphprod::DefiningGraph& g) {
  return GraphAction({{"id", {0, 1}}, {"s", {1, 0}}}, g);
}

// The rotation group of the 5-cycle.
GraphAction rotation_action(const graphprod::DefiningGraph& g) {
  std::vector<GraphAction::Perm> perms;
  for (int k = 0; k < 5; ++k) {
    GraphAction::Perm p;
    p.name = "r" + std::to_string(k);
    for (int v = 0; v < 5; ++v) p.map.push_back((v + k) % 5);
    perms.push_back(std::move(p));
  }
  return GraphAction(std::move(perms), g);
}

}  // namespace

TEST_CASE("action validation") {
  const auto g = fixtures::dihedral();
  CHECK_NOTHROW(swap_action(g));
  SUBCASE("closure is required") {
    const auto c5 = fixtures::cycle5();
    CHECK_THROWS_WITH_AS(
        GraphAction({{"id", {0, 1, 2, 3, 4}}, {"r1", {1, 2, 3, 4, 0}}}, c5),
        doctest::Contains("ActionInvalid"), graphprod::Error);
  }
  SUBCASE("edge preservation is required") {
    const auto path = fixtures::path3();
    CHECK_THROWS_WITH_AS(
        GraphAction({{"id", {0, 1, 2}}, {"bad", {1, 0, 2}}, {"bad2", {1, 0, 2}}}, path),
        doctest::Contains("ActionInvalid"), graphprod::Error);
  }
  SUBCASE("group compatibility is required") {
    const auto mixed = fixtures::make({2, 3}, {});
    CHECK_THROWS_WITH_AS(GraphAction({{"id", {0, 1}}, {"s", {1, 0}}}, mixed),
                         doctest::Contains("ActionInvalid"), graphprod::Error);
  }
  SUBCASE("missing identity is rejected") {
    CHECK_THROWS_WITH_AS(GraphAction({{"s", {1, 0}}}, g), doctest::Contains("ActionInvalid"),
                         graphprod::Error);
  }
}

TEST_CASE("apply_automorphism") {
  const auto g = fixtures::dihedral();
  const auto action = swap_action(g);
  SUBCASE("identity leaves words alone") {
    const auto w = nf(g, {{0, 1}, {1, 1}});
    CHECK(apply_automorphism(action.perm("id"), w, g) == w);
  }
  SUBCASE("swap relabels a_u to a_v") {
    const auto w = nf(g, {{0, 1}});
    CHECK(apply_automorphism(action.perm("s"), w, g) == nf(g, {{1, 1}}));
  }
  SUBCASE("syllable length is preserved on random words") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
      std::vector<graphprod::Syllable> syls;
      const int len = static_cast<int>(rng() % 8);
      for (int k = 0; k < len; ++k) {
        syls.push_back({static_cast<int>(rng() % 2), 1});
      }
      const auto w = nf(g, syls);
      CHECK(apply_automorphism(action.perm("s"), w, g).length() == w.length());
    }
  }
  SUBCASE("homomorphism law on the rotation group") {
    const auto c5 = fixtures::cycle5();
    const auto rot = rotation_action(c5);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
      std::vector<graphprod::Syllable> syls;
      const int len = static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) {
        syls.push_back({static_cast<int>(rng() % 5), 1});
      }
      const auto w = nf(c5, syls);
      const auto& g1 = rot.perms()[rng() % 5];
      const auto& g2 = rot.perms()[rng() % 5];
      CHECK(apply_automorphism(rot.compose(g1, g2), w, c5) ==
            apply_automorphism(g1, apply_automorphism(g2, w, c5), c5));
    }
  }
}

TEST_CASE("semidirect product law") {
  const auto g = fixtures::dihedral();
  const auto action = swap_action(g);
  const auto e = wreath_identity(action);
  const WreathElem x{nf(g, {{0, 1}}), "s"};
  SUBCASE("identity is neutral") {
    const auto p = wreath_mul(e, x, action);
    CHECK(p.word == x.word);
    CHECK(p.actor == x.actor);
  }
  SUBCASE("(a_u, s)^2 = (a_u a_v, id)") {
    const auto sq = wreath_mul(x, x, action);
    CHECK(sq.actor == "id");
    CHECK(sq.word == nf(g, {{0, 1}, {1, 1}}));
  }
  SUBCASE("inverses cancel on both sides") {
    const auto xi = wreath_inv(x, action);
    const auto left = wreath_mul(xi, x, action);
    const auto right = wreath_mul(x, xi, action);
    CHECK(left.word.is_identity());
    CHECK(left.actor == "id");
    CHECK(right.word.is_identity());
    CHECK(right.actor == "id");
  }
  SUBCASE("associativity on sampled triples") {
    const auto c5 = fixtures::cycle5();
    const auto rot = rotation_action(c5);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
      auto rand_elem = [&]() {
        std::vector<graphprod::Syllable> syls;
        const int len = static_cast<int>(rng() % 4);
        for (int k = 0; k < len; ++k) syls.push_back({static_cast<int>(rng() % 5), 1});
        return WreathElem{nf(c5, syls), "r" + std::to_string(rng() % 5)};
      };
      const auto a = rand_elem(), b = rand_elem(), c = rand_elem();
      const auto lhs = wreath_mul(wreath_mul(a, b, rot), c, rot);
      const auto rhs = wreath_mul(a, wreath_mul(b, c, rot), rot);
      CHECK(lhs.word == rhs.word);
      CHECK(lhs.actor == rhs.actor);
    }
  }
}

TEST_CASE("conjugation action on the Cayley graph") {
  const auto g = fixtures::dihedral();
  const auto action = swap_action(g);
  SUBCASE("(e, id) is the identity map") {
    const auto w = nf(g, {{0, 1}, {1, 1}});
    CHECK(wreath_act_on_cayley(wreath_identity(action), w, action) == w);
  }
  SUBCASE("pure translation is left multiplication") {
    const WreathElem t{nf(g, {{1, 1}}), "id"};
    CHECK(wreath_act_on_cayley(t, nf(g, {{0, 1}}), action) == nf(g, {{1, 1}, {0, 1}}));
  }
  SUBCASE("the swap maps [a] to [b] on the dihedral line") {
    const WreathElem s{NormalForm(), "s"};
    CHECK(wreath_act_on_cayley(s, nf(g, {{0, 1}}), action) == nf(g, {{1, 1}}));
  }
  SUBCASE("the action preserves word-metric distances (graph automorphism)") {
    const auto c5 = fixtures::cycle5();
    const auto rot = rotation_action(c5);
    graphprod::CayleyGraph cayley(c5);
    const auto ball = ball_bfs(cayley, cayley.origin(), 3, 20000);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
      const auto& x = ball.verts[rng() % ball.verts.size()];
      const auto& y = ball.verts[rng() % ball.verts.size()];
      auto rand_elem = [&]() {
        std::vector<graphprod::Syllable> syls;
        const int len = static_cast<int>(rng() % 4);
        for (int k = 0; k < len; ++k) syls.push_back({static_cast<int>(rng() % 5), 1});
        return WreathElem{nf(c5, syls), "r" + std::to_string(rng() % 5)};
      };
      const auto w = rand_elem();
      const auto xi = wreath_act_on_cayley(w, x, rot);
      const auto yi = wreath_act_on_cayley(w, y, rot);
      CHECK(cayley.distance(x, y) == cayley.distance(xi, yi));
    }
  }
}

TEST_CASE("stabilizer probe") {
  SUBCASE("trivial action has the trivial stabilizer") {
    const auto g = fixtures::dihedral();
    const GraphAction trivial({{"id", {0, 1}}}, g);
    const auto probe = wreath_stabilizer_probe(trivial, 0, 1);
    CHECK(probe.fixing_both == std::vector<std::string>{"id"});
    CHECK(probe.equal);
  }
  SUBCASE("swap of isolated vertices: only id fixes u") {
    const auto g = fixtures::dihedral();
    const auto probe = wreath_stabilizer_probe(swap_action(g), 0, 1);
    CHECK(probe.fixing_both == std::vector<std::string>{"id"});
    CHECK(probe.fixing_vertex == std::vector<std::string>{"id"});
    CHECK(probe.equal);
  }
  SUBCASE("5-cycle rotations: only the identity fixes any vertex") {
    const auto c5 = fixtures::cycle5();
    const auto probe = wreath_stabilizer_probe(rotation_action(c5), 2, 1);
    CHECK(probe.fixing_both == std::vector<std::string>{"r0"});
    CHECK(probe.equal);
  }
}
