#include <doctest.h>

#include "support.hpp"

using namespace torelli;
using torelli::testing::random_word;

namespace {

std::vector<std::vector<int>> monomials_up_to(int n, int d) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (int k = 1; k <= d; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& m : layer)
      for (int j = 1; j <= n; ++j) {
        auto e = m;
        e.push_back(j);
        next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("expansion of generators") {
  const TruncatedSeries a = magnus_expand(Word::generator(2, 1), 3);
  CHECK(a == TruncatedSeries::one(3) + TruncatedSeries::variable(1, 3));
  const TruncatedSeries ai = magnus_expand(Word::generator(2, -1), 3);
  CHECK(ai.coefficient({}) == 1);
  CHECK(ai.coefficient({1}) == -1);
  CHECK(ai.coefficient({1, 1}) == 1);
  CHECK(ai.coefficient({1, 1, 1}) == -1);
  CHECK(ai.terms().size() == 4);
  CHECK(magnus_expand(Word::identity(4), 5) == TruncatedSeries::one(5));
}

TEST_CASE("expansion is multiplicative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Word u = random_word(rng, 4, 7);
    const Word v = random_word(rng, 4, 7);
    CHECK(magnus_expand(multiply(u, v), 4) == series_mul(magnus_expand(u, 4), magnus_expand(v, 4), 4));
    CHECK(series_mul(magnus_expand(u, 4), magnus_expand(invert(u), 4), 4) == TruncatedSeries::one(4));
    CHECK(truncated_inverse(magnus_expand(u, 4), 4) == magnus_expand(invert(u), 4));
  }
}

TEST_CASE("series arithmetic") {
  const auto t1 = TruncatedSeries::variable(1, 3);
  const auto t2 = TruncatedSeries::variable(2, 3);
  const auto c = series_commutator(t1, t2);
  CHECK(c.coefficient({1, 2}) == 1);
  CHECK(c.coefficient({2, 1}) == -1);
  CHECK(c.lowest_degree() == 2);
  CHECK(series_mul(c, t1, 2).is_zero());
  CHECK((t1 - t1).is_zero());
  CHECK((t1 * BigInt(3)).coefficient({1}) == 3);
  CHECK(Monomial{1, 2} * Monomial{3} == Monomial{1, 2, 3});
  CHECK(Monomial{2} < Monomial{1, 1});
}

TEST_CASE("text format") {
  CHECK(to_string(TruncatedSeries(3)) == "0\n");
  const auto s = magnus_expand(Word::generator(2, -1), 2);
  CHECK(to_string(s) == "1 * 1\n-1 * t1\n1 * t1 t1\n");
}

TEST_CASE("Fox calculus") {
  const Word w = parse_word("a1 b1 a1'", 1);
  const GroupRingElement d1 = fox_derivative(w, 1);
  CHECK(d1.coefficient(Word::identity(2)) == 1);
  CHECK(d1.coefficient(parse_word("a1 b1 a1'", 1)) == -1);
  CHECK(augmentation(fox_derivative(w, 2)) == 1);
  CHECK(augmentation(d1) == 0);
  CHECK(fox_derivative(Word::generator(2, -1), 1) == GroupRingElement::of(Word::generator(2, -1), -1));

  std::mt19937_64 rng(17);
  const auto monos = monomials_up_to(4, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Word u = random_word(rng, 4, 8);
    const TruncatedSeries m = magnus_expand(u, 3);
    for (const auto& js : monos) {
      if (js.empty()) continue;
      CHECK(fox_coefficient(u, js) == m.coefficient(Monomial(js)));
    }
  }
}

TEST_CASE("lower central series degree") {
  const Word a = Word::generator(4, 1);
  const Word b = Word::generator(4, 2);
  CHECK(lcs_degree(a, 4).degree == 1);
  CHECK(lcs_degree(commutator(a, b), 4).degree == 2);
  CHECK(lcs_degree(commutator(commutator(a, b), a), 4).degree == 3);
  CHECK(lcs_degree(commutator(commutator(a, b), commutator(a, Word::generator(4, 3))), 4).degree == 4);
  const LcsDegree id = lcs_degree(Word::identity(4), 6);
  CHECK_FALSE(id.degree);
  CHECK(id.at_least(7));
  CHECK_FALSE(id.at_least(8));
  CHECK(to_string(id) == ">= 7");
  CHECK(to_string(lcs_degree(commutator(a, b), 4)) == "2");
}

TEST_CASE("worked examples") {
  const auto one = TruncatedSeries::one(2);
  const auto t1 = TruncatedSeries::variable(1, 2);
  const auto t2 = TruncatedSeries::variable(2, 2);
  const auto geom = one - t1 + series_mul(t1, t1, 2);
  CHECK(series_mul(one + t1, geom, 2) == one);
  CHECK(series_mul(one + t1, one + t2, 2) == one + t1 + t2 + series_mul(t1, t2, 2));
  CHECK(series_mul(series_mul(t1, t2, 2), t1, 2).is_zero());

  const Word c = commutator(Word::generator(4, 1), Word::generator(4, 3));
  CHECK(magnus_expand(c, 2) == one + series_commutator(TruncatedSeries::variable(1, 2), TruncatedSeries::variable(3, 2)));
  CHECK(fox_coefficient(c, std::vector<int>{1, 3}) == 1);
  CHECK(fox_coefficient(c, std::vector<int>{3, 1}) == -1);
  CHECK(fox_coefficient(parse_word("a1 a1", 1), std::vector<int>{1, 1}) == 1);
  CHECK(fox_derivative(parse_word("a1 a2", 2), 1) == GroupRingElement::of(Word::identity(4)));
}
