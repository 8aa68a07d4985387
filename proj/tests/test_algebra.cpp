#include <doctest.h>

#include "ciq/algebra.hpp"
#include "helpers.hpp"

using namespace ciq;
using namespace ciq::testing;

TEST_CASE("make_table validates its input") {
  const CayleyTable z2 = make_table(2, {0, 1, 1, 0});
  CHECK(z2.at(0, 1) == 1);
  CHECK(z2.at(1, 1) == 0);

  const CayleyTable trivial = make_table(1, {0});
  CHECK(trivial.n == 1);

  CHECK_THROWS_AS(make_table(2, {0, 1, 1, 2}), EntryOutOfRange);
  CHECK_THROWS_AS(make_table(2, {0, 1, 1, -1}), EntryOutOfRange);
  CHECK_THROWS_AS(make_table(2, {0, 1, 1}), WrongLength);
  CHECK_THROWS_AS(make_table(0, {}), Error);
  CHECK_THROWS_AS(make_table(kMaxOrder + 1,
                             std::vector<element_t>(
                                 (kMaxOrder + 1) * (kMaxOrder + 1), 0)),
                  OrderTooLarge);
}

TEST_CASE("translations read rows and columns") {
  const CayleyTable z3 = zn_table(3);
  CHECK(left_translation(z3, 1).image == std::vector<element_t>{1, 2, 0});
  CHECK(left_translation(zn_table(2), 0).image == std::vector<element_t>{0, 1});
  CHECK(left_translation(constant_table(2, 0), 1).image ==
        std::vector<element_t>{0, 0});

  CHECK(right_translation(z3, 1).image == std::vector<element_t>{1, 2, 0});
  CHECK(right_translation(zn_table(2), 0).image ==
        std::vector<element_t>{0, 1});
  // column 0 of x*y = y - x (mod 3), read off directly
  CHECK(right_translation(y_minus_x_mod3(), 0).image ==
        std::vector<element_t>{0, 2, 1});
}

TEST_CASE("right translation is left translation of the transpose") {
  std::mt19937 rng(815);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const CayleyTable t = random_table(rng, n);
    const CayleyTable tt = transpose(t);
    for (element_t a = 0; a < n; ++a) {
      CHECK(right_translation(t, a) == left_translation(tt, a));
    }
  }
}

TEST_CASE("is_bijective") {
  CHECK(is_bijective(TotalMap{{1, 2, 0}}));
  CHECK_FALSE(is_bijective(TotalMap{{0, 0}}));
  CHECK(is_bijective(TotalMap{{0}}));
}

TEST_CASE("compose applies the right map first") {
  CHECK(compose(TotalMap{{1, 0}}, TotalMap{{1, 0}}) == TotalMap{{0, 1}});
  CHECK(compose(TotalMap{{1, 2, 0}}, TotalMap{{2, 0, 1}}) ==
        TotalMap{{0, 1, 2}});
  const TotalMap m{{2, 2, 1}};
  CHECK(compose(m, identity_map(3)) == m);
  CHECK(compose(identity_map(3), m) == m);
  CHECK_THROWS_AS(compose(TotalMap{{0}}, TotalMap{{0, 1}}), OrderMismatch);
}

TEST_CASE("invert") {
  CHECK(invert(Permutation{{1, 2, 0}}) == Permutation{{2, 0, 1}});
  CHECK(invert(Permutation{{0, 1}}) == Permutation{{0, 1}});
  CHECK(invert(Permutation{{0, 2, 1}}) == Permutation{{0, 2, 1}});
  CHECK_THROWS_AS(invert(TotalMap{{0, 0}}), NotBijective);
}

TEST_CASE("invert is a two-sided inverse on random permutations") {
  std::mt19937 rng(4099);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Permutation p = random_permutation(rng, n);
    const Permutation q = invert(p);
    CHECK(compose(p, q) == identity_map(n));
    CHECK(compose(q, p) == identity_map(n));
  }
}

TEST_CASE("quasigroup predicates") {
  CHECK(is_left_quasigroup(zn_table(3)));
  CHECK_FALSE(is_left_quasigroup(constant_table(2, 0)));
  // each row a permutation, but column 0 is constant
  const CayleyTable projections = table_from_rows({{0, 1}, {0, 1}});
  CHECK(is_left_quasigroup(projections));
  CHECK_FALSE(is_right_quasigroup(projections));
  CHECK(is_right_quasigroup(zn_table(3)));
  CHECK(is_right_quasigroup(make_table(1, {0})));

  CHECK(is_quasigroup(zn_table(2)));
  CHECK_FALSE(is_quasigroup(projections));
  CHECK(is_quasigroup(y_minus_x_mod3()));
}

TEST_CASE("is_quasigroup agrees with occurrence counting") {
  std::mt19937 rng(29101);
  int quasigroups_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    // alternate arbitrary tables with relabeled group tables so both
    // answers are exercised
    CayleyTable t = (trial % 2 == 0) ? random_table(rng, n) : zn_table(n);
    if (trial % 4 == 3) {
      const Permutation sigma = random_permutation(rng, n);
      std::vector<element_t> cells(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          cells[sigma(x) * n + sigma(y)] = sigma(t.at(x, y));
      t = CayleyTable{n, std::move(cells)};
    }
    const bool expected = latin_by_counting(t);
    CHECK(is_quasigroup(t) == expected);
    quasigroups_seen += expected ? 1 : 0;
  }
  CHECK(quasigroups_seen > 100);  // the generator really mixes both kinds
}

TEST_CASE("identity_element") {
  CHECK(identity_element(zn_table(3)) == 0);
  CHECK_FALSE(identity_element(y_minus_x_mod3()).has_value());
  CHECK(identity_element(make_table(1, {0})) == 0);
  // identity need not be element 0
  const CayleyTable shifted = table_from_rows({{1, 0}, {0, 1}});
  CHECK(identity_element(shifted) == 1);
}

TEST_CASE("identity row and column act as the identity map") {
  std::mt19937 rng(7321);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const CayleyTable t = random_table(rng, n);
    const auto e = identity_element(t);
    if (!e) continue;
    CHECK(left_translation(t, *e) == identity_map(n));
    CHECK(right_translation(t, *e) == identity_map(n));
  }
}

TEST_CASE("is_automorphism") {
  const CayleyTable z3 = zn_table(3);
  CHECK(is_automorphism(z3, TotalMap{{0, 2, 1}}));  // negation mod 3
  CHECK_FALSE(is_automorphism(z3, TotalMap{{1, 2, 0}}));
  std::mt19937 rng(551);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    CHECK(is_automorphism(random_table(rng, n), identity_map(n)));
  }
  CHECK_FALSE(is_automorphism(z3, TotalMap{{0, 0, 0}}));  // not bijective
}
