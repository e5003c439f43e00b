#pragma once

// Truncated Magnus expansion a_j -> 1 + t_j into integer noncommutative
// power series, and Fox free differential calculus on Z[F].

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torelli/bigint.hpp"
#include "torelli/freegroup.hpp"

namespace torelli {

/// t_{j1} ... t_{jd}, indices 1-based. Ordered by degree, then
/// lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> indices) : indices_(std::move(indices)) {}
  Monomial(std::initializer_list<int> indices) : indices_(indices) {}

  int degree() const noexcept { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const noexcept { return indices_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.indices_ <=> b.indices_;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> indices_;
};

/// Integer series in noncommuting t_1, t_2, ... with every monomial of
/// degree above `truncation()` discarded. No zero coefficients are stored.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, BigInt>;

  explicit TruncatedSeries(int truncation);

  static TruncatedSeries one(int truncation);
  static TruncatedSeries variable(int index, int truncation);

  int truncation() const noexcept { return truncation_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const Monomial& m) const;
  /// Adds `c` to the coefficient of `m`; silently ignored above truncation.
  void add_term(const Monomial& m, const BigInt& c);

  /// The degree-d part, keeping the same truncation.
  TruncatedSeries homogeneous_part(int d) const;
  /// Lowest degree carrying a nonzero term, if any.
  std::optional<int> lowest_degree() const;
  /// Same terms, lower truncation.
  TruncatedSeries truncated(int truncation) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const BigInt& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& s) { return a *= s; }
  friend TruncatedSeries operator*(const BigInt& s, TruncatedSeries a) { return a *= s; }

  /// Term equality; truncation levels are not compared.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int truncation_;
  Terms terms_;
};

/// Product truncated at degree N.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t, int N);

/// s t - t s, truncated at the larger input truncation.
TruncatedSeries series_commutator(const TruncatedSeries& s, const TruncatedSeries& t);

/// Inverse of a series with constant term 1, truncated at N.
TruncatedSeries truncated_inverse(const TruncatedSeries& s, int N);

TruncatedSeries magnus_expand(const Word& w, int N);

/// One term per line, `<coeff> * t<j1> t<j2> ...`, constant term written
/// `<coeff> * 1`. The zero series prints `0`.
std::string to_string(const TruncatedSeries& s);

/// Finite Z-linear combination of reduced words.
class GroupRingElement {
 public:
  using Terms = std::map<Word, BigInt>;

  GroupRingElement() = default;
  static GroupRingElement of(const Word& w, const BigInt& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Word& w, const BigInt& c);
  BigInt coefficient(const Word& w) const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

/// Left multiplication by a group element.
GroupRingElement left_multiply(const Word& u, const GroupRingElement& x);

/// Sum of coefficients.
BigInt augmentation(const GroupRingElement& x);

/// Free derivative d/d(generator j), extended linearly to Z[F].
GroupRingElement fox_derivative(const Word& w, int j);
GroupRingElement fox_derivative(const GroupRingElement& x, int j);

/// epsilon d_{j1} ... d_{jk}(w), rightmost derivative first. Equals the
/// coefficient of t_{j1}...t_{jk} in the Magnus expansion of w.
BigInt fox_coefficient(const Word& w, std::span<const int> js);

/// Lower-central-series degree certified by Magnus truncation at `cutoff`:
/// `degree` is the exact d with w in F_d \ F_{d+1} when d <= cutoff,
/// and empty when w lies at least in F_{cutoff+1}.
struct LcsDegree {
  std::optional<int> degree;
  int cutoff = 0;

  bool at_least(int k) const { return degree ? *degree >= k : k <= cutoff + 1; }
  friend bool operator==(const LcsDegree&, const LcsDegree&) = default;
};

LcsDegree lcs_degree(const Word& w, int cutoff);

/// `3` or `>= 7`.
std::string to_string(const LcsDegree& d);

}  // namespace torelli
