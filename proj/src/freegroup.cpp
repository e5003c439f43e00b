#include "torelli/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "parse_util.hpp"
#include "torelli/errors.hpp"

namespace torelli {

namespace {

void append_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x)
    out.pop_back();
  else
    out.push_back(x);
}

void check_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw GenusMismatch("words over " + std::to_string(u.rank()) + " and " +
                        std::to_string(v.rank()) + " generators");
}

}  // namespace

Word Word::reduce(int rank, std::span<const Letter> letters) {
  if (rank < 0) throw InvalidArgument("negative rank");
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0 || std::abs(x) > rank)
      throw InvalidArgument("generator index " + std::to_string(x) + " outside 1.." +
                            std::to_string(rank));
    append_reduced(out, x);
  }
  return Word(rank, std::move(out));
}

Word Word::generator(int rank, int index) {
  Letter x = index;
  return reduce(rank, std::span<const Letter>(&x, 1));
}

Word multiply(const Word& u, const Word& v) {
  check_rank(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.length() + v.length());
  for (Letter x : v.letters()) append_reduced(out, x);
  return Word::reduce(u.rank(), out);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return Word::reduce(w.rank(), out);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word with_rank(const Word& w, int rank) { return Word::reduce(rank, w.letters()); }

Word boundary_word(int genus) {
  if (genus < 1) throw InvalidArgument("genus must be at least 1");
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(4 * genus));
  for (int i = 1; i <= genus; ++i) {
    const int a = 2 * i - 1, b = 2 * i;
    letters.insert(letters.end(), {a, b, -a, -b});
  }
  return Word::reduce(2 * genus, letters);
}

std::string generator_name(int index, int rank) {
  if (rank % 2 == 1 && index == rank) return "gamma";
  const int handle = (index + 1) / 2;
  return (index % 2 == 1 ? "a" : "b") + std::to_string(handle);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (Letter x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generator_name(std::abs(x), w.rank());
    if (x < 0) out += '\'';
  }
  return out;
}

Word parse_word(std::string_view text, int genus, const AliasTable& aliases, int line,
                int column_offset) {
  const int rank = 2 * genus;
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    const int column = column_offset + static_cast<int>(start) + 1;

    bool inverted = false;
    while (!token.empty() && token.back() == '\'') {
      inverted = !inverted;
      token.remove_suffix(1);
    }
    if (token == "1") continue;

    if (auto it = aliases.find(token); it != aliases.end()) {
      const Word& alias = inverted ? invert(it->second) : it->second;
      if (alias.rank() != rank) throw ParseError("alias genus mismatch", line, column);
      letters.insert(letters.end(), alias.letters().begin(), alias.letters().end());
      continue;
    }

    if (token.size() >= 2 && (token[0] == 'a' || token[0] == 'b') &&
        std::all_of(token.begin() + 1, token.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int handle = detail::parse_int(token.substr(1)).value_or(0);
      if (handle < 1 || handle > genus)
        throw ParseError("generator '" + std::string(token) + "' outside genus " +
                             std::to_string(genus),
                         line, column);
      const int index = token[0] == 'a' ? 2 * handle - 1 : 2 * handle;
      letters.push_back(inverted ? -index : index);
      continue;
    }
    throw ParseError("unknown token '" + std::string(token) + "'", line, column);
  }
  return Word::reduce(rank, letters);
}

// MappingClass ---------------------------------------------------------------

MappingClass::MappingClass(int genus, std::vector<Word> images,
                           std::optional<std::vector<Word>> inverse_images,
                           std::optional<std::vector<DecompositionLetter>> decomposition)
    : genus_(genus),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)),
      decomposition_(std::move(decomposition)) {
  if (genus_ < 1) throw InvalidArgument("genus must be at least 1");
  const auto n = static_cast<std::size_t>(2 * genus_);
  auto check = [&](const std::vector<Word>& ws, const char* what) {
    if (ws.size() != n)
      throw InvalidArgument(std::string(what) + ": expected " + std::to_string(n) + " words");
    for (const Word& w : ws)
      if (w.rank() != rank()) throw GenusMismatch(std::string(what) + ": word of wrong genus");
  };
  check(images_, "images");
  if (inverse_images_) check(*inverse_images_, "inverse images");
}

MappingClass MappingClass::identity(int genus) {
  std::vector<Word> images;
  for (int i = 1; i <= 2 * genus; ++i) images.push_back(Word::generator(2 * genus, i));
  auto inv = images;
  return MappingClass(genus, std::move(images), std::move(inv), std::vector<DecompositionLetter>{});
}

MappingClass MappingClass::with_decomposition(std::vector<DecompositionLetter> letters) const {
  MappingClass out = *this;
  out.decomposition_ = std::move(letters);
  return out;
}

MappingClass MappingClass::without_inverse() const {
  MappingClass out = *this;
  out.inverse_images_.reset();
  return out;
}

Word apply(const MappingClass& f, const Word& w) {
  if (w.rank() != f.rank())
    throw GenusMismatch("word and mapping class have different genus");
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const Word& image = f.image(std::abs(x));
    if (x > 0) {
      for (Letter y : image.letters()) append_reduced(out, y);
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        append_reduced(out, -*it);
    }
  }
  return Word::reduce(f.rank(), out);
}

MappingClass compose(const MappingClass& f, const MappingClass& h) {
  if (f.genus() != h.genus()) throw GenusMismatch("composing mapping classes of different genus");
  std::vector<Word> images;
  images.reserve(h.images().size());
  for (const Word& w : h.images()) images.push_back(apply(f, w));

  std::optional<std::vector<Word>> inverse_images;
  if (f.inverse_images() && h.inverse_images()) {
    // (f h)^-1 = h^-1 f^-1
    MappingClass h_inv(h.genus(), *h.inverse_images());
    inverse_images.emplace();
    for (const Word& w : *f.inverse_images()) inverse_images->push_back(apply(h_inv, w));
  }

  std::optional<std::vector<DecompositionLetter>> decomposition;
  if (f.decomposition() && h.decomposition()) {
    decomposition = *f.decomposition();
    decomposition->insert(decomposition->end(), h.decomposition()->begin(),
                          h.decomposition()->end());
  }
  return MappingClass(f.genus(), std::move(images), std::move(inverse_images),
                      std::move(decomposition));
}

MappingClass inverse(const MappingClass& f) {
  if (!f.inverse_images()) throw MissingInverse("mapping class carries no inverse images");
  std::optional<std::vector<DecompositionLetter>> decomposition;
  if (f.decomposition()) {
    decomposition.emplace(f.decomposition()->rbegin(), f.decomposition()->rend());
    for (auto& letter : *decomposition) letter.exponent = -letter.exponent;
  }
  return MappingClass(f.genus(), *f.inverse_images(), f.images(), std::move(decomposition));
}

IntMatrix abelianization(const MappingClass& f) {
  const auto n = static_cast<std::size_t>(f.rank());
  IntMatrix m(n, std::vector<BigInt>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (Letter x : f.images()[j].letters())
      m[static_cast<std::size_t>(std::abs(x) - 1)][j] += x > 0 ? 1 : -1;
  return m;
}

BigInt determinant(IntMatrix m) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

ValidationReport validate(const MappingClass& f) {
  ValidationReport report;
  const Word zeta = boundary_word(f.genus());

  const Word image = apply(f, zeta);
  report.checks.push_back({"boundary", image == zeta,
                           image == zeta ? "zeta fixed" : "zeta maps to " + to_string(image)});

  const BigInt det = determinant(abelianization(f));
  const bool unimodular = det == 1 || det == -1;
  report.checks.push_back({"unimodular", unimodular, "determinant " + det.str()});

  if (!f.inverse_images()) {
    report.checks.push_back({"inverse", true, "no inverse supplied"});
  } else {
    const MappingClass g(f.genus(), *f.inverse_images());
    const MappingClass plain(f.genus(), f.images());
    const MappingClass id = MappingClass::identity(f.genus());
    const bool both = compose(plain, g).same_action(id) && compose(g, plain).same_action(id);
    report.checks.push_back(
        {"inverse", both, both ? "inverse verified" : "supplied inverse does not invert"});
  }
  return report;
}

void require_valid(const MappingClass& f) {
  const ValidationReport report = validate(f);
  if (const ValidationCheck* bad = report.first_failure())
    throw ValidationFailed(bad->name + " check failed: " + bad->detail);
}

}  // namespace torelli
