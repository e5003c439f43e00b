#include "torelli/freelie.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

bool is_lyndon(std::span<const int> w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // Compare w with its rotation starting at r.
    for (std::size_t i = 0; i < n; ++i) {
      const int a = w[i], b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // periodic
    }
  }
  return true;
}

LyndonWord::LyndonWord(std::vector<int> indices) : indices_(std::move(indices)) {
  if (!is_lyndon(indices_)) throw InvalidArgument("not a Lyndon word");
}

std::vector<LyndonWord> lyndon_basis(int n, int k) {
  if (n < 1 || k < 1) throw InvalidArgument("lyndon_basis needs n >= 1 and k >= 1");
  std::vector<LyndonWord> out;
  // Duval: generates Lyndon words of length <= k in lex order.
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == k) out.emplace_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

BigInt witt_dim(int n, int k) {
  if (n < 1 || k < 1) throw InvalidArgument("witt_dim needs n >= 1 and k >= 1");
  auto mobius = [](int d) {
    int result = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      result = -result;
    }
    return d > 1 ? -result : result;
  };
  BigInt sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    sum += mu * boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k / d));
  }
  return sum / k;
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
  const auto& idx = w.indices();
  if (idx.size() < 2) throw InvalidArgument("a letter has no standard factorization");
  for (std::size_t split = 1; split < idx.size(); ++split) {
    std::span<const int> suffix(idx.data() + split, idx.size() - split);
    if (is_lyndon(suffix))
      return {LyndonWord(std::vector<int>(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(split))),
              LyndonWord(std::vector<int>(suffix.begin(), suffix.end()))};
  }
  // The last letter is always Lyndon, so the loop returns.
  throw InvalidArgument("not a Lyndon word");
}

namespace {

TruncatedSeries compute_bracketing(const LyndonWord& w);

// Expansions are reused heavily during elimination. The cache only ever
// grows and every entry is a pure function of its key.
const TruncatedSeries& cached_bracketing(const LyndonWord& w) {
  static std::mutex mutex;
  static std::map<LyndonWord, TruncatedSeries> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(w); it != cache.end()) return it->second;
  }
  TruncatedSeries value = compute_bracketing(w);
  std::lock_guard lock(mutex);
  return cache.try_emplace(w, std::move(value)).first->second;
}

TruncatedSeries compute_bracketing(const LyndonWord& w) {
  if (w.length() == 1) return TruncatedSeries::variable(w.indices()[0], 1);
  auto [u, v] = standard_factorization(w);
  TruncatedSeries left = cached_bracketing(u);
  TruncatedSeries right = cached_bracketing(v);
  const int N = w.length();
  return series_mul(left, right, N) - series_mul(right, left, N);
}

}  // namespace

TruncatedSeries bracketing(const LyndonWord& w) { return cached_bracketing(w); }

BigInt LieElement::coefficient(const LyndonWord& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? BigInt(0) : it->second;
}

void LieElement::add_term(const LyndonWord& w, const BigInt& c) {
  if (w.length() != degree_) throw InvalidArgument("Lyndon word of wrong degree");
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

TruncatedSeries LieElement::to_series() const {
  TruncatedSeries out(degree_);
  for (const auto& [w, c] : coords_) out += bracketing(w) * c;
  return out;
}

LieElement& LieElement::operator+=(const LieElement& other) {
  if (other.degree_ != degree_) throw InvalidArgument("adding Lie elements of different degree");
  for (const auto& [w, c] : other.coords_) add_term(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  if (other.degree_ != degree_) throw InvalidArgument("subtracting Lie elements of different degree");
  for (const auto& [w, c] : other.coords_) add_term(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [w, c] : coords_) c *= scalar;
  return *this;
}

LieElement to_lyndon_coords(const TruncatedSeries& s, int k, int n) {
  LieElement out(k, n);
  TruncatedSeries remainder(k);
  for (const auto& [m, c] : s.terms()) {
    if (m.degree() != k) throw InvalidArgument("series is not homogeneous of degree " + std::to_string(k));
    for (int j : m.indices())
      if (j < 1 || j > n) throw InvalidArgument("variable outside the alphabet");
    remainder.add_term(m, c);
  }
  // Every term of bracketing(w) other than w itself is lex-greater than w,
  // so the least remaining monomial must be a Lyndon word.
  while (!remainder.is_zero()) {
    const auto& [m, c] = *remainder.terms().begin();
    if (!is_lyndon(m.indices()))
      throw NotALieElement("monomial without Lyndon leading term remains in elimination");
    const LyndonWord w(m.indices());
    const BigInt coeff = c;
    out.add_term(w, coeff);
    remainder -= bracketing(w) * coeff;
  }
  return out;
}

TruncatedSeries dynkin(const TruncatedSeries& s, int k) {
  TruncatedSeries out(k);
  for (const auto& [m, c] : s.terms()) {
    if (m.degree() != k) continue;
    if (k == 0) continue;
    TruncatedSeries acc = TruncatedSeries::variable(m.indices()[0], k);
    for (std::size_t p = 1; p < m.indices().size(); ++p)
      acc = series_commutator(acc, TruncatedSeries::variable(m.indices()[p], k));
    out += acc * c;
  }
  return out;
}

bool is_lie_element(const TruncatedSeries& s, int k) {
  return dynkin(s, k) == s.homogeneous_part(k) * BigInt(k) && s == s.homogeneous_part(k);
}

LieElement bracket_map(const H1LieTensor& e) {
  if (e.components.empty()) throw InvalidArgument("empty tensor");
  const int n = static_cast<int>(e.components.size());
  const int k = e.degree;
  TruncatedSeries total(k + 1);
  for (int i = 1; i <= n; ++i) {
    const LieElement& xi = e.components[static_cast<std::size_t>(i - 1)];
    if (xi.degree() != k || xi.alphabet() != n)
      throw InvalidArgument("tensor component of wrong degree or alphabet");
    if (xi.is_zero()) continue;
    total += series_commutator(TruncatedSeries::variable(i, k + 1), xi.to_series().truncated(k + 1));
  }
  // A bracket of Lie elements is Lie; a remainder here would be a bug.
  return to_lyndon_coords(total, k + 1, n);
}

std::string to_string(const LieElement& e) {
  if (e.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [w, c] : e.coords()) {
    out << c << " * L[";
    for (std::size_t i = 0; i < w.indices().size(); ++i) out << (i ? " " : "") << w.indices()[i];
    out << "]\n";
  }
  return out.str();
}

}  // namespace torelli
