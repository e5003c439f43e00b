#include "torelli/johnson.hpp"

#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

namespace {

// f(x_i) x_i^-1 for each generator.
std::vector<Word> displacement_words(const MappingClass& f) {
  std::vector<Word> out;
  out.reserve(f.images().size());
  for (int i = 1; i <= f.rank(); ++i)
    out.push_back(multiply(f.image(i), Word::generator(f.rank(), -i)));
  return out;
}

void require_degree(int k) {
  if (k < 1) throw InvalidArgument("filtration degree must be at least 1");
}

}  // namespace

DepthReport filtration_depth(const MappingClass& f, int cutoff) {
  if (cutoff < 1) throw InvalidArgument("cutoff must be at least 1");
  require_valid(f);
  DepthReport report;
  report.cutoff = cutoff;
  for (const Word& w : displacement_words(f)) {
    report.witnesses.push_back(lcs_degree(w, cutoff));
    const auto& d = report.witnesses.back().degree;
    if (d && (!report.depth || *d < *report.depth)) report.depth = d;
  }
  return report;
}

std::string to_string(const DepthReport& report, int genus) {
  std::ostringstream out;
  if (report.depth)
    out << "depth = " << *report.depth << '\n';
  else
    out << "depth >= " << report.cutoff + 1 << '\n';
  for (std::size_t i = 0; i < report.witnesses.size(); ++i)
    out << generator_name(static_cast<int>(i) + 1, 2 * genus) << ": "
        << to_string(report.witnesses[i]) << '\n';
  return out.str();
}

// TauValue -------------------------------------------------------------------

bool TauValue::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

TauValue TauValue::zero(int k, int genus) {
  TauValue v{k, genus, {}};
  v.components.assign(static_cast<std::size_t>(2 * genus), LieElement(k, 2 * genus));
  return v;
}

TauValue& TauValue::operator+=(const TauValue& other) {
  if (other.k != k || other.genus != genus) throw InvalidArgument("adding incompatible tau values");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += other.components[i];
  return *this;
}

TauValue& TauValue::operator-=(const TauValue& other) {
  if (other.k != k || other.genus != genus) throw InvalidArgument("subtracting incompatible tau values");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] -= other.components[i];
  return *this;
}

TauValue tau(const MappingClass& f, int k) {
  require_degree(k);
  const DepthReport report = filtration_depth(f, k);
  if (!report.in_j(k))
    throw NotInJk("mapping class has depth " + std::to_string(*report.depth) + " < " +
                  std::to_string(k));
  TauValue value = TauValue::zero(k, f.genus());
  const auto words = displacement_words(f);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const TruncatedSeries part = magnus_expand(words[i], k).homogeneous_part(k);
    value.components[i] = to_lyndon_coords(part, k, f.rank());
  }
  return value;
}

std::vector<TruncatedSeries> tau_series(const TauValue& value) {
  std::vector<TruncatedSeries> out;
  for (const auto& c : value.components) out.push_back(c.to_series());
  return out;
}

std::string to_string(const TauValue& value, bool monomial_basis) {
  std::ostringstream out;
  out << "tau k=" << value.k << " genus=" << value.genus << '\n';
  for (std::size_t i = 0; i < value.components.size(); ++i) {
    out << '[' << generator_name(static_cast<int>(i) + 1, 2 * value.genus) << "]\n";
    out << (monomial_basis ? to_string(value.components[i].to_series())
                           : to_string(value.components[i]));
  }
  return out.str();
}

H1LieTensor symplectic_dual(const TauValue& value) {
  H1LieTensor e;
  e.degree = value.k;
  e.components.assign(value.components.size(), LieElement(value.k, 2 * value.genus));
  for (int i = 0; i < value.genus; ++i) {
    const auto x = static_cast<std::size_t>(2 * i), y = x + 1;
    e.components[x] = value.components[y];
    e.components[y] = BigInt(-1) * value.components[x];
  }
  return e;
}

MoritaResult morita_check(const MappingClass& f, int k) {
  const TauValue value = tau(f, k);
  LieElement bracket = bracket_map(symplectic_dual(value));
  const bool contained = bracket.is_zero();
  return {contained, std::move(bracket)};
}

bool bordant(const MappingClass& f, const MappingClass& h, int k) {
  if (k < 2) throw InvalidArgument("bordism comparison needs k >= 2");
  if (f.genus() != h.genus()) throw GenusMismatch("comparing mapping classes of different genus");
  for (const MappingClass* m : {&f, &h}) {
    const DepthReport r = filtration_depth(*m, k);
    if (!r.in_j(k)) throw NotInJk("bordism comparison needs both classes in J(" + std::to_string(k) + ")");
  }
  const int target = 2 * k - 1;
  for (int i = 1; i <= f.rank(); ++i) {
    const LcsDegree d = lcs_degree(multiply(f.image(i), invert(h.image(i))), target - 1);
    if (d.degree) return false;
  }
  return true;
}

TauTower tau_tower(const MappingClass& f, int kmin, int kmax) {
  require_degree(kmin);
  if (kmax < kmin) throw InvalidArgument("tower needs kmax >= kmin");
  TauTower tower;
  for (int k = kmin; k <= kmax; ++k) {
    TauValue value = tau(f, k);
    const bool nonzero = !value.is_zero();
    tower.levels.push_back({k, std::move(value)});
    if (nonzero) {
      tower.first_nonzero = k;
      break;
    }
  }
  return tower;
}

}  // namespace torelli
