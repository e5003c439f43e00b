#include "torelli/spinquad.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "parse_util.hpp"
#include "torelli/errors.hpp"

namespace torelli {

namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;  // x positions

void check_genus(int genus) {
  if (genus < 1 || genus > 32) throw InvalidArgument("genus outside 1..32");
}

std::uint64_t mask(int genus) {
  return genus == 32 ? ~0ULL : (1ULL << (2 * genus)) - 1;
}

}  // namespace

H1Vector::H1Vector(int genus, std::uint64_t bits) : genus_(genus), bits_(bits) {
  check_genus(genus);
  if (bits & ~mask(genus)) throw InvalidArgument("vector has coordinates beyond the genus");
}

H1Vector H1Vector::x(int genus, int i) {
  if (i < 1 || i > genus) throw InvalidArgument("handle index out of range");
  return H1Vector(genus, 1ULL << (2 * (i - 1)));
}

H1Vector H1Vector::y(int genus, int i) {
  if (i < 1 || i > genus) throw InvalidArgument("handle index out of range");
  return H1Vector(genus, 1ULL << (2 * (i - 1) + 1));
}

H1Vector operator+(const H1Vector& u, const H1Vector& v) {
  if (u.genus_ != v.genus_) throw GenusMismatch("adding vectors of different genus");
  return H1Vector(u.genus_, u.bits_ ^ v.bits_);
}

bool intersection(const H1Vector& u, const H1Vector& v) {
  if (u.genus() != v.genus()) throw GenusMismatch("pairing vectors of different genus");
  // sum_i u_xi v_yi + u_yi v_xi
  const std::uint64_t ux = u.bits() & kEvenBits, uy = (u.bits() >> 1) & kEvenBits;
  const std::uint64_t vx = v.bits() & kEvenBits, vy = (v.bits() >> 1) & kEvenBits;
  return std::popcount((ux & vy) ^ (uy & vx)) % 2 == 1;
}

std::string to_string(const H1Vector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (int p = 0; p < 2 * v.genus(); ++p) {
    if (!v.coordinate(p)) continue;
    if (!out.empty()) out += '+';
    out += (p % 2 == 0 ? 'x' : 'y') + std::to_string(p / 2 + 1);
  }
  return out;
}

H1Vector parse_h1_vector(std::string_view text, int genus) {
  H1Vector v(genus);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidDescriptor("bad homology class '" + std::string(text) + "': " + why);
  };
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.substr(pos) == "0") return v;
  bool expect_term = true;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (!expect_term) {
      if (c != '+') fail("expected '+'");
      ++pos;
      expect_term = true;
      continue;
    }
    if (c != 'x' && c != 'y') fail("expected x<i> or y<i>");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1) fail("missing handle index");
    const int i = detail::parse_int(text.substr(pos + 1, end - pos - 1)).value_or(0);
    if (i < 1 || i > genus) fail("handle index out of range");
    v = v + (c == 'x' ? H1Vector::x(genus, i) : H1Vector::y(genus, i));
    pos = end;
    expect_term = false;
  }
  if (expect_term) fail("empty or dangling sum");
  return v;
}

QuadForm::QuadForm(int genus, std::uint64_t basis_values) : genus_(genus), values_(basis_values) {
  check_genus(genus);
  if (basis_values & ~mask(genus)) throw InvalidArgument("form has values beyond the genus");
}

QuadForm QuadForm::from_values(std::span<const bool> values) {
  if (values.empty() || values.size() % 2) throw InvalidArgument("need 2g basis values");
  std::uint64_t bits = 0;
  for (std::size_t p = 0; p < values.size(); ++p)
    if (values[p]) bits |= 1ULL << p;
  return QuadForm(static_cast<int>(values.size() / 2), bits);
}

bool q_eval(const QuadForm& q, const H1Vector& v) {
  if (q.genus() != v.genus()) throw GenusMismatch("form and vector of different genus");
  // Add basis vectors one at a time: q(acc + e) = q(acc) + q(e) + acc.e
  H1Vector acc(v.genus());
  bool value = false;
  for (int p = 0; p < 2 * v.genus(); ++p) {
    if (!v.coordinate(p)) continue;
    const H1Vector e(v.genus(), 1ULL << p);
    value ^= q.basis_value(p) ^ intersection(acc, e);
    acc = acc + e;
  }
  return value;
}

bool arf(const QuadForm& q) {
  bool sum = false;
  for (int i = 0; i < q.genus(); ++i) sum ^= q.basis_value(2 * i) && q.basis_value(2 * i + 1);
  return sum;
}

void require_symplectic(std::span<const SymplecticPair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const bool expected = i == j;
      if (intersection(pairs[i].first, pairs[j].second) != expected)
        throw InvalidDescriptor("pairs are not symplectically dual: " + to_string(pairs[i].first) +
                                " . " + to_string(pairs[j].second));
      if (i < j && (intersection(pairs[i].first, pairs[j].first) ||
                    intersection(pairs[i].second, pairs[j].second)))
        throw InvalidDescriptor("pairs are not isotropic");
    }
  }
}

bool arf_on_pairs(const QuadForm& q, std::span<const SymplecticPair> pairs) {
  require_symplectic(pairs);
  bool sum = false;
  for (const auto& [x, y] : pairs) sum ^= q_eval(q, x) && q_eval(q, y);
  return sum;
}

std::vector<QuadForm> enumerate_forms(int genus, std::optional<bool> arf_filter) {
  if (genus < 1 || genus > kMaxFormGenus)
    throw InvalidArgument("form enumeration supports genus 1.." + std::to_string(kMaxFormGenus));
  const int width = 2 * genus;
  const std::uint64_t count = 1ULL << width;
  std::vector<QuadForm> out;
  out.reserve(arf_filter ? count / 2 + (1ULL << (genus - 1)) : count);
  for (std::uint64_t m = 0; m < count; ++m) {
    // The most significant bit of m is q(x_1): reverse into basis order.
    std::uint64_t values = 0;
    for (int p = 0; p < width; ++p)
      if ((m >> (width - 1 - p)) & 1U) values |= 1ULL << p;
    QuadForm q(genus, values);
    if (arf_filter && arf(q) != *arf_filter) continue;
    out.push_back(q);
  }
  return out;
}

std::string to_string(const QuadForm& q) {
  std::string out = "q:";
  for (int p = 0; p < 2 * q.genus(); ++p) {
    out += ' ';
    out += (p % 2 == 0 ? 'x' : 'y') + std::to_string(p / 2 + 1) + "=" + (q.basis_value(p) ? "1" : "0");
  }
  return out;
}

QuadForm parse_form_literal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token) || token != "q:") throw ParseError("form literal must start with 'q:'", 1, 1);
  std::vector<std::pair<int, bool>> entries;  // position, value
  int max_handle = 0;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq < 2 || (token[0] != 'x' && token[0] != 'y') ||
        eq + 2 != token.size() || (token[eq + 1] != '0' && token[eq + 1] != '1'))
      throw ParseError("bad form entry '" + token + "'", 1, 1);
    const int handle = detail::parse_int(std::string_view(token).substr(1, eq - 1)).value_or(0);
    if (handle < 1) throw ParseError("bad handle in '" + token + "'", 1, 1);
    max_handle = std::max(max_handle, handle);
    entries.emplace_back(2 * (handle - 1) + (token[0] == 'y' ? 1 : 0), token[eq + 1] == '1');
  }
  if (max_handle == 0) throw ParseError("empty form literal", 1, 1);
  if (static_cast<int>(entries.size()) != 2 * max_handle)
    throw ParseError("form literal must give every basis value exactly once", 1, 1);
  std::vector<bool> seen(static_cast<std::size_t>(2 * max_handle), false);
  std::uint64_t values = 0;
  for (const auto& [p, v] : entries) {
    if (seen[static_cast<std::size_t>(p)]) throw ParseError("repeated basis value in form literal", 1, 1);
    seen[static_cast<std::size_t>(p)] = true;
    if (v) values |= 1ULL << p;
  }
  return QuadForm(max_handle, values);
}

// Torelli generators -----------------------------------------------------------

void validate_descriptor(const TorelliGenDescriptor& d) {
  const int g = d.action.genus();
  auto check_genus_of = [&](const H1Vector& v) {
    if (v.genus() != g) throw InvalidDescriptor(d.name + ": homology class of wrong genus");
  };
  if (const auto* bscc = std::get_if<BsccKind>(&d.kind)) {
    for (const auto& [x, y] : bscc->pairs) {
      check_genus_of(x);
      check_genus_of(y);
    }
    require_symplectic(bscc->pairs);
  } else {
    const auto& bp = std::get<BpKind>(d.kind);
    check_genus_of(bp.curve_class);
    check_genus_of(bp.pair.first);
    check_genus_of(bp.pair.second);
    if (bp.curve_class.is_zero()) throw InvalidDescriptor(d.name + ": bounding pair of null-homologous curves");
    const SymplecticPair pair[] = {bp.pair};
    require_symplectic(pair);
    if (intersection(bp.curve_class, bp.pair.first) || intersection(bp.curve_class, bp.pair.second))
      throw InvalidDescriptor(d.name + ": curve class meets the cobounded subsurface");
  }
  require_valid(d.action);
  if (!filtration_depth(d.action, 2).in_j(2))
    throw InvalidDescriptor(d.name + ": action is not in the Torelli group");
}

bool rho_generator(const QuadForm& q, const TorelliGenDescriptor& d) {
  if (const auto* bscc = std::get_if<BsccKind>(&d.kind)) return arf_on_pairs(q, bscc->pairs);
  const auto& bp = std::get<BpKind>(d.kind);
  if (q_eval(q, bp.curve_class)) return false;
  const SymplecticPair pair[] = {bp.pair};
  return arf_on_pairs(q, pair);
}

bool rho(const QuadForm& q, std::span<const TorelliLetter> word) {
  if (arf(q)) throw ArfNonZero("Birman-Craggs homomorphisms need a form with Arf invariant 0");
  bool sum = false;
  for (const auto& letter : word) {
    if (letter.generator->action.genus() != q.genus())
      throw GenusMismatch("generator " + letter.generator->name + " has different genus from the form");
    sum ^= rho_generator(q, *letter.generator);
  }
  return sum;
}

MappingClass composed_action(int genus, std::span<const TorelliLetter> word) {
  MappingClass acc = MappingClass::identity(genus);
  for (const auto& letter : word) {
    const MappingClass& a = letter.generator->action;
    if (a.genus() != genus) throw GenusMismatch("generator " + letter.generator->name + " has wrong genus");
    acc = compose(acc, letter.exponent > 0 ? a : inverse(a));
  }
  return acc;
}

bool Eta2Value::is_trivial() const {
  if (!tau2.is_zero()) return false;
  for (bool b : rho)
    if (b) return false;
  return true;
}

Eta2Value eta2(int genus, std::span<const TorelliLetter> word) {
  Eta2Value value{tau(composed_action(genus, word), 2), {}};
  for (const QuadForm& q : enumerate_forms(genus, false)) value.rho.push_back(rho(q, word));
  return value;
}

bool eta2_trivial(int genus, std::span<const TorelliLetter> word) { return eta2(genus, word).is_trivial(); }

std::string to_string(const Eta2Value& value) {
  std::string out = to_string(value.tau2);
  out += "rho: ";
  for (bool b : value.rho) out += b ? '1' : '0';
  out += '\n';
  return out;
}

}  // namespace torelli
