#include "torelli/magnus.hpp"

#include <cstdlib>
#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> out = a.indices_;
  out.insert(out.end(), b.indices_.begin(), b.indices_.end());
  return Monomial(std::move(out));
}

// TruncatedSeries -------------------------------------------------------------

TruncatedSeries::TruncatedSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw InvalidArgument("negative truncation");
}

TruncatedSeries TruncatedSeries::one(int truncation) {
  TruncatedSeries s(truncation);
  s.add_term(Monomial{}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int index, int truncation) {
  TruncatedSeries s(truncation);
  s.add_term(Monomial{index}, 1);
  return s;
}

BigInt TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, const BigInt& c) {
  if (m.degree() > truncation_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::homogeneous_part(int d) const {
  TruncatedSeries out(truncation_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

std::optional<int> TruncatedSeries::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

TruncatedSeries TruncatedSeries::truncated(int truncation) const {
  TruncatedSeries out(truncation);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= truncation) out.terms_.emplace(m, c);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t, int N) {
  TruncatedSeries out(N);
  for (const auto& [ms, cs] : s.terms()) {
    if (ms.degree() > N) break;
    for (const auto& [mt, ct] : t.terms()) {
      if (ms.degree() + mt.degree() > N) break;
      out.add_term(ms * mt, cs * ct);
    }
  }
  return out;
}

TruncatedSeries series_commutator(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int N = std::max(s.truncation(), t.truncation());
  return series_mul(s, t, N) - series_mul(t, s, N);
}

TruncatedSeries truncated_inverse(const TruncatedSeries& s, int N) {
  if (s.coefficient(Monomial{}) != 1)
    throw InvalidArgument("truncated_inverse needs constant term 1");
  // (1 + x)^-1 = sum_i (-x)^i, x nilpotent modulo degree N+1.
  TruncatedSeries minus_x = s.truncated(N) - TruncatedSeries::one(N);
  minus_x *= -1;
  TruncatedSeries out = TruncatedSeries::one(N);
  TruncatedSeries power = TruncatedSeries::one(N);
  for (int i = 1; i <= N; ++i) {
    power = series_mul(power, minus_x, N);
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

namespace {

// Dense coefficient tables, one per degree, indexed by the base-n reading
// of the monomial. Index order within a degree is lexicographic order.
class DenseExpansion {
 public:
  DenseExpansion(int n, int N) : n_(n), N_(N), levels_(static_cast<std::size_t>(N + 1)) {
    std::size_t size = 1;
    for (int d = 0; d <= N; ++d) {
      levels_[static_cast<std::size_t>(d)].assign(size, BigInt(0));
      size *= static_cast<std::size_t>(n);
    }
    levels_[0][0] = 1;
  }

  // Right multiplication by 1 + t_j (x > 0) or sum_i (-t_j)^i (x < 0).
  void multiply_letter(Letter x) {
    const auto j = static_cast<std::size_t>(std::abs(x) - 1);
    const auto n = static_cast<std::size_t>(n_);
    for (int d = N_; d >= 1; --d) {
      auto& target = levels_[static_cast<std::size_t>(d)];
      if (x > 0) {
        const auto& source = levels_[static_cast<std::size_t>(d - 1)];
        for (std::size_t m = 0; m < source.size(); ++m)
          if (!source[m].is_zero()) target[m * n + j] += source[m];
      } else {
        // Coefficient of t_j^i is (-1)^i.
        std::size_t stride = n;
        std::size_t offset = j;
        for (int i = 1; i <= d; ++i) {
          const auto& source = levels_[static_cast<std::size_t>(d - i)];
          const bool negative = i % 2 == 1;
          for (std::size_t m = 0; m < source.size(); ++m) {
            if (source[m].is_zero()) continue;
            if (negative)
              target[m * stride + offset] -= source[m];
            else
              target[m * stride + offset] += source[m];
          }
          offset = offset * n + j;
          stride *= n;
        }
      }
    }
  }

  TruncatedSeries to_series() const {
    TruncatedSeries out(N_);
    for (int d = 0; d <= N_; ++d) {
      const auto& level = levels_[static_cast<std::size_t>(d)];
      for (std::size_t m = 0; m < level.size(); ++m) {
        if (level[m].is_zero()) continue;
        std::vector<int> indices(static_cast<std::size_t>(d));
        std::size_t code = m;
        for (int p = d - 1; p >= 0; --p) {
          indices[static_cast<std::size_t>(p)] = static_cast<int>(code % static_cast<std::size_t>(n_)) + 1;
          code /= static_cast<std::size_t>(n_);
        }
        out.add_term(Monomial(std::move(indices)), level[m]);
      }
    }
    return out;
  }

 private:
  int n_;
  int N_;
  std::vector<std::vector<BigInt>> levels_;
};

}  // namespace

TruncatedSeries magnus_expand(const Word& w, int N) {
  if (N < 0) throw InvalidArgument("negative truncation");
  if (w.rank() < 1) return TruncatedSeries::one(N);
  DenseExpansion dense(w.rank(), N);
  for (Letter x : w.letters()) dense.multiply_letter(x);
  return dense.to_series();
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [m, c] : s.terms()) {
    out << c << " *";
    if (m.degree() == 0) out << " 1";
    for (int j : m.indices()) out << " t" << j;
    out << '\n';
  }
  return out.str();
}

// Group ring and Fox calculus -------------------------------------------------

GroupRingElement GroupRingElement::of(const Word& w, const BigInt& c) {
  GroupRingElement x;
  x.add_term(w, c);
  return x;
}

void GroupRingElement::add_term(const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupRingElement left_multiply(const Word& u, const GroupRingElement& x) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms()) out.add_term(multiply(u, w), c);
  return out;
}

BigInt augmentation(const GroupRingElement& x) {
  BigInt sum = 0;
  for (const auto& [w, c] : x.terms()) sum += c;
  return sum;
}

GroupRingElement fox_derivative(const Word& w, int j) {
  if (j < 1 || j > w.rank())
    throw InvalidArgument("derivative index " + std::to_string(j) + " outside 1.." +
                          std::to_string(w.rank()));
  // d_j(x_1 ... x_L) = sum_i x_1 ... x_{i-1} d_j(x_i)
  GroupRingElement out;
  std::vector<Letter> prefix;
  for (Letter x : w.letters()) {
    if (x == j) {
      out.add_term(Word::reduce(w.rank(), prefix), 1);
    } else if (x == -j) {
      prefix.push_back(x);
      out.add_term(Word::reduce(w.rank(), prefix), -1);
      prefix.pop_back();
    }
    prefix.push_back(x);
  }
  return out;
}

GroupRingElement fox_derivative(const GroupRingElement& x, int j) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms()) {
    const GroupRingElement dw = fox_derivative(w, j);
    for (const auto& [v, d] : dw.terms()) out.add_term(v, c * d);
  }
  return out;
}

BigInt fox_coefficient(const Word& w, std::span<const int> js) {
  if (js.empty()) throw InvalidArgument("fox_coefficient needs at least one index");
  GroupRingElement x = GroupRingElement::of(w);
  for (auto it = js.rbegin(); it != js.rend(); ++it) x = fox_derivative(x, *it);
  return augmentation(x);
}

LcsDegree lcs_degree(const Word& w, int cutoff) {
  if (cutoff < 1) throw InvalidArgument("cutoff must be at least 1");
  if (w.is_identity()) return {std::nullopt, cutoff};
  TruncatedSeries s = magnus_expand(w, cutoff) - TruncatedSeries::one(cutoff);
  return {s.lowest_degree(), cutoff};
}

std::string to_string(const LcsDegree& d) {
  return d.degree ? std::to_string(*d.degree) : ">= " + std::to_string(d.cutoff + 1);
}

}  // namespace torelli
