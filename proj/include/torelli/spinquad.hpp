#pragma once

// Z/2 quadratic forms on H_1(Sigma_g; Z/2) (standing in for spin
// structures), Arf invariants, Birman-Craggs homomorphisms rho_q and the
// combined invariant eta_2 = (tau_2, all rho_q).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torelli/freegroup.hpp"
#include "torelli/johnson.hpp"

namespace torelli {

inline constexpr int kMaxFormGenus = 10;

/// Vector of H_1(Sigma_g; Z/2) in the basis x_1, y_1, ..., x_g, y_g.
/// Basis position p (0-based) is stored in bit p.
class H1Vector {
 public:
  explicit H1Vector(int genus, std::uint64_t bits = 0);
  static H1Vector x(int genus, int i);
  static H1Vector y(int genus, int i);

  int genus() const noexcept { return genus_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool coordinate(int position) const { return (bits_ >> position) & 1U; }
  bool is_zero() const noexcept { return bits_ == 0; }

  friend H1Vector operator+(const H1Vector& u, const H1Vector& v);
  friend bool operator==(const H1Vector&, const H1Vector&) = default;

 private:
  int genus_;
  std::uint64_t bits_;
};

/// Mod-2 intersection number; x_i . y_i = 1, all other basis pairs 0.
bool intersection(const H1Vector& u, const H1Vector& v);

/// `x1+y2` style; the zero vector prints `0`.
std::string to_string(const H1Vector& v);
/// Parses `x1+y2` (also `0`).
H1Vector parse_h1_vector(std::string_view text, int genus);

/// A quadratic form recorded by its values on the basis.
class QuadForm {
 public:
  explicit QuadForm(int genus, std::uint64_t basis_values = 0);
  static QuadForm from_values(std::span<const bool> values);

  int genus() const noexcept { return genus_; }
  std::uint64_t basis_values() const noexcept { return values_; }
  bool basis_value(int position) const { return (values_ >> position) & 1U; }

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  int genus_;
  std::uint64_t values_;
};

/// Extension by q(u+v) = q(u) + q(v) + u.v.
bool q_eval(const QuadForm& q, const H1Vector& v);
bool arf(const QuadForm& q);

using SymplecticPair = std::pair<H1Vector, H1Vector>;

/// Throws InvalidDescriptor unless x_i.y_j = delta_ij and x_i.x_j = y_i.y_j = 0.
void require_symplectic(std::span<const SymplecticPair> pairs);
bool arf_on_pairs(const QuadForm& q, std::span<const SymplecticPair> pairs);

/// All forms of genus g (optionally only those with the given Arf
/// invariant), lexicographic in (q(x_1), q(y_1), ..., q(y_g)).
std::vector<QuadForm> enumerate_forms(int genus, std::optional<bool> arf_filter = std::nullopt);

/// `q: x1=0 y1=1 ...`
std::string to_string(const QuadForm& q);
QuadForm parse_form_literal(std::string_view text);

/// Twist about a separating curve bounding the subsurface spanned by `pairs`.
struct BsccKind {
  std::vector<SymplecticPair> pairs;
};

/// Bounding pair: curves of class `curve_class` cobounding the genus-1
/// subsurface with symplectic basis `pair`.
struct BpKind {
  H1Vector curve_class;
  SymplecticPair pair;
};

struct TorelliGenDescriptor {
  std::string name;
  std::variant<BsccKind, BpKind> kind;
  MappingClass action;
};

/// Checks the descriptor invariants, including that the action is a valid
/// mapping class lying in the Torelli group.
void validate_descriptor(const TorelliGenDescriptor& d);

struct TorelliLetter {
  std::shared_ptr<const TorelliGenDescriptor> generator;
  int exponent = 1;
};

using TorelliWord = std::vector<TorelliLetter>;

/// Per-generator Birman-Craggs value (exponent plays no role mod 2).
bool rho_generator(const QuadForm& q, const TorelliGenDescriptor& d);

/// Throws ArfNonZero when Arf(q) = 1.
bool rho(const QuadForm& q, std::span<const TorelliLetter> word);

/// Left fold of compose over the letters; requires inverse images for
/// negative exponents.
MappingClass composed_action(int genus, std::span<const TorelliLetter> word);

struct Eta2Value {
  TauValue tau2;
  std::vector<bool> rho;  // indexed by enumerate_forms(genus, Arf 0)

  bool is_trivial() const;
};

Eta2Value eta2(int genus, std::span<const TorelliLetter> word);
bool eta2_trivial(int genus, std::span<const TorelliLetter> word);

/// tau_2 block followed by `rho: <bits>`.
std::string to_string(const Eta2Value& value);

}  // namespace torelli
