#pragma once

// The Johnson filtration J(k) = { f : f acts trivially on F/F_k } and its
// invariants: depth, the Johnson homomorphisms tau_k, Morita's bracket
// containment, and equality of the mapping-torus bordism classes sigma_k.

#include <optional>
#include <string>
#include <vector>

#include "torelli/freegroup.hpp"
#include "torelli/freelie.hpp"
#include "torelli/magnus.hpp"

namespace torelli {

inline constexpr int kDefaultDepthCutoff = 6;
inline constexpr int kDefaultTowerMax = 5;

/// f lies in J(depth); witnesses[i] is the lcs degree of f(x_i) x_i^-1.
struct DepthReport {
  std::optional<int> depth;  // empty: depth >= cutoff + 1
  int cutoff = 0;
  std::vector<LcsDegree> witnesses;

  /// f is certified to lie in J(k).
  bool in_j(int k) const { return depth ? *depth >= k : k <= cutoff + 1; }
};

/// Validates f, then certifies J(k) membership for k <= cutoff.
DepthReport filtration_depth(const MappingClass& f, int cutoff = kDefaultDepthCutoff);

/// `depth = 3` or `depth >= 7`, followed by one witness line per generator.
std::string to_string(const DepthReport& report, int genus);

/// tau_k(f) in Hom(H_1, L_k): components[i] is the value on generator i+1.
struct TauValue {
  int k = 0;
  int genus = 0;
  std::vector<LieElement> components;

  bool is_zero() const;
  static TauValue zero(int k, int genus);

  TauValue& operator+=(const TauValue& other);
  TauValue& operator-=(const TauValue& other);
  friend TauValue operator+(TauValue a, const TauValue& b) { return a += b; }
  friend TauValue operator-(TauValue a, const TauValue& b) { return a -= b; }
  friend bool operator==(const TauValue&, const TauValue&) = default;
};

/// Throws NotInJk unless f is certified in J(k).
TauValue tau(const MappingClass& f, int k);

/// Monomial-basis view of one component (the degree-k Magnus part).
std::vector<TruncatedSeries> tau_series(const TauValue& value);

/// Header `tau k=<k> genus=<g>` and one block per generator, in Lyndon
/// coordinates or, with `monomial_basis`, as expanded series.
std::string to_string(const TauValue& value, bool monomial_basis = false);

/// Hom(H_1, L_k) -> H_1 (x) L_k through the intersection pairing:
/// the x_i slot receives tau(y_i) and the y_i slot receives -tau(x_i).
H1LieTensor symplectic_dual(const TauValue& value);

struct MoritaResult {
  bool contained = false;
  LieElement bracket;
};

/// Bracket of the symplectic dual of tau_k(f); zero for every f in J(k).
MoritaResult morita_check(const MappingClass& f, int k);

/// f and h in J(k) have equal sigma_k iff f h^-1 lies in J(2k-1), i.e. iff
/// f(x) h(x)^-1 lies in F_{2k-1} for every generator x.
bool bordant(const MappingClass& f, const MappingClass& h, int k);

struct TauTower {
  struct Level {
    int k;
    TauValue value;
  };
  std::vector<Level> levels;
  std::optional<int> first_nonzero;
};

/// tau_k for k = kmin.. until the first nonzero value or kmax.
TauTower tau_tower(const MappingClass& f, int kmin, int kmax = kDefaultTowerMax);

}  // namespace torelli
