#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tul/constructors.hpp"
#include "tul/error.hpp"
#include "tul/graph.hpp"

using namespace tul;
using testing_support::perm1;

TEST_SUITE("graph") {
  TEST_CASE("permutation rejects non-bijections") {
    CHECK_THROWS_AS(Permutation({0, 0}), StructuralError);
    CHECK_THROWS_AS(Permutation({0, 2}), StructuralError);
    CHECK_THROWS_AS(Permutation({-1}), StructuralError);
    CHECK_THROWS_AS(perm1({1, 3, 3}), StructuralError);
  }

  TEST_CASE("compose") {
    const auto cyc = perm1({2, 3, 1});
    CHECK(compose(Permutation::identity(3), cyc) == cyc);
    const auto swap = perm1({2, 1});
    CHECK(compose(swap, swap) == Permutation::identity(2));
    CHECK(compose(cyc, perm1({3, 1, 2})) == Permutation::identity(3));
    CHECK_THROWS_AS(compose(swap, cyc), StructuralError);
  }

  TEST_CASE("compose applies the right factor first") {
    const auto p = perm1({2, 1, 3});
    const auto q = perm1({1, 3, 2});
    const auto pq = compose(p, q);
    for (int j = 0; j < 3; ++j) CHECK(pq(j) == p(q(j)));
  }

  TEST_CASE("cycle_count") {
    CHECK(cycle_count(Permutation::identity(4)) == 4);
    CHECK(cycle_count(perm1({2, 3, 1})) == 1);
    CHECK(cycle_count(perm1({2, 1, 3})) == 2);
  }

  TEST_CASE("cycle_count_of_quotient agrees with explicit composition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int k = 1 + trial % 7;
      std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
      std::iota(a.begin(), a.end(), 0);
      std::iota(b.begin(), b.end(), 0);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Permutation pa(a), pb(b);
      CHECK(cycle_count_of_quotient(pa, pb) == cycle_count(compose(pa.inverse(), pb)));
    }
  }

  TEST_CASE("inverse, identity and cycle notation") {
    const auto p = perm1({3, 1, 2});
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK_FALSE(p.is_identity());
    CHECK(p.cycle_notation() == "(1 3 2)");
    CHECK(Permutation::identity(3).cycle_notation() == "()");
    CHECK(perm1({2, 1, 3, 4}).cycle_notation() == "(1 2)");
    CHECK(p.one_based() == std::vector<int>{3, 1, 2});
    CHECK(Permutation::shift(4, -1) == Permutation::shift(4, 3));
  }

  TEST_CASE("colored graph construction errors") {
    CHECK_THROWS_AS(ColoredGraph(std::vector<Permutation>{}), StructuralError);
    CHECK_THROWS_AS(ColoredGraph({Permutation::identity(2), Permutation::identity(3)}), StructuralError);
    const ColoredGraph b({Permutation::identity(3), Permutation::identity(3)});
    CHECK_THROWS_AS(CoveringGraph(b, Permutation::identity(2)), StructuralError);
  }

  TEST_CASE("face_profile examples") {
    const ColoredGraph b({Permutation::identity(3), perm1({2, 3, 1})});
    const auto f = face_profile(CoveringGraph(b, Permutation::identity(3)));
    CHECK(f.zero_faces == std::vector<int>{3, 1});
    CHECK(f.total == 4);

    for (int i = 0; i < 2; ++i) {
      CHECK(face_profile(b, b.sigma(i)).zero_faces[static_cast<std::size_t>(i)] == 3);
    }

    const auto dipole = face_profile(make_dipole(3), Permutation::identity(1));
    CHECK(dipole.zero_faces == std::vector<int>{1, 1, 1});
    CHECK(dipole.total == 3);
  }

  TEST_CASE("face_profile matches edge-walking oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const int k = 1 + trial % 6;
      const int colors = 1 + trial % 5;
      std::vector<Permutation> sigma;
      std::vector<std::vector<int>> raw;
      for (int c = 0; c <= colors; ++c) {
        std::vector<int> img(static_cast<std::size_t>(k));
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        if (c < colors) {
          sigma.emplace_back(img);
          raw.push_back(img);
        } else {
          const auto f = face_profile(ColoredGraph(sigma), Permutation(img), true);
          const auto expected = oracle::zero_faces(raw, img);
          CHECK(f.zero_faces == expected);
          CHECK(f.total == oracle::sum(expected));
          for (const auto& [pair, count] : f.pair_faces) {
            CHECK(count == oracle::alternating_cycles(oracle::edges_of(raw[static_cast<std::size_t>(pair.first)]),
                                                      oracle::edges_of(raw[static_cast<std::size_t>(pair.second)])));
          }
          CHECK(f.pair_faces.size() == static_cast<std::size_t>(colors * (colors - 1) / 2));
          for (int v : f.zero_faces) {
            CHECK(v >= 1);
            CHECK(v <= k);
          }
        }
      }
    }
  }

  TEST_CASE("is_connected") {
    CHECK(is_connected(ColoredGraph({Permutation::identity(2), perm1({2, 1})})));
    CHECK_FALSE(is_connected(ColoredGraph({Permutation::identity(2), Permutation::identity(2)})));
    for (int k = 1; k <= 5; ++k) {
      for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
          CHECK(is_connected(make_cycle_graph(testing_support::canonical(k, m, n))));
        }
      }
    }
  }

  TEST_CASE("relabeling preserves face totals") {
    const auto b = make_cycle_graph(testing_support::canonical(4, 1, 2));
    const auto r = perm1({3, 1, 4, 2});
    const auto b2 = b.relabeled(r);
    CHECK(is_connected(b2));
    // τ ↦ rτr⁻¹ is a bijection of coverings preserving faces.
    const auto tau = perm1({2, 4, 1, 3});
    CHECK(face_profile(b, tau).zero_faces ==
          face_profile(b2, compose(r, compose(tau, r.inverse()))).zero_faces);
  }

  TEST_CASE("genus") {
    const auto b = make_cycle_graph(testing_support::canonical(3, 1, 1));
    CHECK(genus(CoveringGraph(b, Permutation::identity(3))) == 0.0);
    CHECK(genus(CoveringGraph(b, perm1({3, 1, 2}))) == 1.0);
    const auto b1 = make_cycle_graph(testing_support::canonical(1, 1, 1));
    CHECK(genus(CoveringGraph(b1, Permutation::identity(1))) == 0.0);
    CHECK_THROWS_AS(genus(CoveringGraph(make_dipole(3), Permutation::identity(1))), Unsupported);
  }
}
