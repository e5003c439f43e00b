#pragma once

// The free Lie ring on t_1..t_n inside the series ring: Lyndon bases of
// the graded pieces, coordinates by triangular elimination, the
// Dynkin-Specht-Wever membership test, and the bracket map
// H_1 (x) L_k -> L_{k+1}.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "torelli/bigint.hpp"
#include "torelli/magnus.hpp"

namespace torelli {

bool is_lyndon(std::span<const int> indices);

/// A word over 1..n strictly smaller than all of its proper rotations.
class LyndonWord {
 public:
  /// Throws InvalidArgument if `indices` is not Lyndon.
  explicit LyndonWord(std::vector<int> indices);

  const std::vector<int>& indices() const noexcept { return indices_; }
  int length() const noexcept { return static_cast<int>(indices_.size()); }
  Monomial monomial() const { return Monomial(indices_); }

  friend bool operator==(const LyndonWord&, const LyndonWord&) = default;
  friend std::strong_ordering operator<=>(const LyndonWord& a, const LyndonWord& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<int> indices_;
};

/// All Lyndon words of length k over 1..n, lexicographic (Duval's algorithm).
std::vector<LyndonWord> lyndon_basis(int n, int k);

/// Rank of the degree-k piece of the free Lie ring on n letters.
BigInt witt_dim(int n, int k);

/// w = u v with v the longest proper Lyndon suffix. Requires length >= 2.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

/// Standard bracketing expanded with [u,v] = uv - vu, truncated at the
/// word length. Its lex-least monomial is w itself with coefficient 1.
TruncatedSeries bracketing(const LyndonWord& w);

/// Homogeneous degree-k Lie element in Lyndon coordinates over 1..n.
class LieElement {
 public:
  using Coords = std::map<LyndonWord, BigInt>;

  LieElement(int degree, int n) : degree_(degree), n_(n) {}

  int degree() const noexcept { return degree_; }
  int alphabet() const noexcept { return n_; }
  const Coords& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }

  BigInt coefficient(const LyndonWord& w) const;
  void add_term(const LyndonWord& w, const BigInt& c);

  /// Sum of c_w * bracketing(w).
  TruncatedSeries to_series() const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const BigInt& scalar);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const BigInt& s, LieElement a) { return a *= s; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  int degree_;
  int n_;
  Coords coords_;
};

/// Lyndon coordinates of a homogeneous degree-k series over 1..n.
/// Throws NotALieElement when elimination leaves a remainder.
LieElement to_lyndon_coords(const TruncatedSeries& s, int k, int n);

/// Left-normed bracketing t_{j1}...t_{jk} -> [..[t_{j1},t_{j2}],..,t_{jk}],
/// applied to the degree-k part of s. s is Lie iff the result equals k*s.
TruncatedSeries dynkin(const TruncatedSeries& s, int k);
bool is_lie_element(const TruncatedSeries& s, int k);

/// Element of H_1 (x) L_k: component i is the coefficient of basis vector i.
struct H1LieTensor {
  int degree = 0;
  std::vector<LieElement> components;
};

/// sum_i [t_i, xi_i] in Lyndon coordinates of degree k+1.
LieElement bracket_map(const H1LieTensor& e);

/// Lines `<coeff> * L[<i1> <i2> ...]`; the zero element prints `0`.
std::string to_string(const LieElement& e);

}  // namespace torelli
