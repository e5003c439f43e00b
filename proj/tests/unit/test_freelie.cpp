#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace torelli;

namespace {

TruncatedSeries bracket(const TruncatedSeries& a, const TruncatedSeries& b) { return series_commutator(a, b); }

TruncatedSeries t(int i, int N) { return TruncatedSeries::variable(i, N); }

}  // namespace

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon(std::vector<int>{1, 1, 2}));
  CHECK(is_lyndon(std::vector<int>{1, 2}));
  CHECK_FALSE(is_lyndon(std::vector<int>{1, 2, 1}));
  CHECK_FALSE(is_lyndon(std::vector<int>{1, 1}));
  CHECK_FALSE(is_lyndon(std::vector<int>{}));
  CHECK_THROWS_AS(LyndonWord({2, 1}), InvalidArgument);

  const auto b = lyndon_basis(2, 3);
  REQUIRE(b.size() == 2);
  CHECK(b[0].indices() == std::vector<int>{1, 1, 2});
  CHECK(b[1].indices() == std::vector<int>{1, 2, 2});
  CHECK(std::is_sorted(b.begin(), b.end()));
  CHECK(lyndon_basis(3, 1).size() == 3);
}

TEST_CASE("Witt dimensions") {
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(4, 2) == 6);
  CHECK(witt_dim(4, 3) == 20);
  CHECK(witt_dim(2, 6) == 9);
  CHECK(witt_dim(6, 4) == 315);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 5; ++k) CHECK(witt_dim(n, k) == BigInt(lyndon_basis(n, k).size()));
}

TEST_CASE("standard bracketing") {
  const auto [u, v] = standard_factorization(LyndonWord({1, 1, 2}));
  CHECK(u.indices() == std::vector<int>{1});
  CHECK(v.indices() == std::vector<int>{1, 2});
  const auto [p, q] = standard_factorization(LyndonWord({1, 2, 1, 2, 2}));
  CHECK(p.indices() == std::vector<int>{1, 2});
  CHECK(q.indices() == std::vector<int>{1, 2, 2});

  CHECK(bracketing(LyndonWord({1, 2})) == bracket(t(1, 2), t(2, 2)));
  CHECK(bracketing(LyndonWord({1, 1, 2})) == bracket(t(1, 3), bracket(t(1, 3), t(2, 3))));
  for (const auto& w : lyndon_basis(3, 4)) {
    const TruncatedSeries s = bracketing(w);
    CHECK(s.terms().begin()->first == w.monomial());
    CHECK(s.terms().begin()->second == 1);
  }
}

TEST_CASE("Lyndon coordinates round trip") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 3;
    LieElement e(k, 3);
    for (const auto& w : lyndon_basis(3, k)) e.add_term(w, coef(rng));
    CHECK(to_lyndon_coords(e.to_series(), k, 3) == e);
    CHECK(is_lie_element(e.to_series(), k));
    TruncatedSeries d = e.to_series();
    d *= BigInt(k);
    CHECK(dynkin(e.to_series(), k) == d);
  }
  TruncatedSeries bad(2);
  bad.add_term({1, 2}, 1);
  CHECK_FALSE(is_lie_element(bad, 2));
  CHECK_THROWS_AS(to_lyndon_coords(bad, 2, 2), NotALieElement);
}

TEST_CASE("bracket map") {
  H1LieTensor e;
  e.degree = 1;
  LieElement x(1, 2), y(1, 2);
  x.add_term(LyndonWord({2}), 1);
  y.add_term(LyndonWord({1}), 1);
  e.components = {x, y};
  // [t1,t2] + [t2,t1] = 0
  CHECK(bracket_map(e).is_zero());
  e.components = {x, LieElement(1, 2)};
  const LieElement b = bracket_map(e);
  CHECK(b.coefficient(LyndonWord({1, 2})) == 1);
  CHECK(to_string(b) == "1 * L[1 2]\n");
  CHECK(to_string(LieElement(2, 2)) == "0\n");
}
