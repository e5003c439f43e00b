#pragma once

// Words in the free group F = pi_1 of a genus-g surface with one boundary
// component, and mapping classes as boundary-fixing endomorphisms of F.
//
// Conventions: generator index 2i-1 is a_i, index 2i is b_i; a negative
// index denotes the inverse letter. The boundary word is
// zeta = [a_1,b_1]...[a_g,b_g] with [u,v] = u v u^-1 v^-1.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/bigint.hpp"

namespace torelli {

using Letter = int;

/// A freely reduced word over `rank` generators. Surface words have
/// rank 2g; mapping-torus presentations use rank 2g+1, the extra
/// generator being gamma.
class Word {
 public:
  Word() = default;

  /// Freely reduces `letters`. Throws InvalidArgument on an index outside
  /// 1..rank.
  static Word reduce(int rank, std::span<const Letter> letters);
  static Word reduce(int rank, std::initializer_list<Letter> letters) {
    return reduce(rank, std::span<const Letter>(letters.begin(), letters.size()));
  }
  static Word identity(int rank) { return Word(rank, {}); }
  static Word generator(int rank, int index);

  int rank() const noexcept { return rank_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word commutator(const Word& u, const Word& v);

/// Re-embeds `w` into the free group of rank `rank` (>= every index used).
Word with_rank(const Word& w, int rank);

/// zeta = [a_1,b_1]...[a_g,b_g].
Word boundary_word(int genus);

/// `a3`, `b1`, or `gamma` for the extra generator of an odd rank.
std::string generator_name(int index, int rank);

/// Token form, e.g. `a1 b1 a1' b1'`; the identity prints as `1`.
std::string to_string(const Word& w);

/// Named words usable as tokens (the `let` lines of input files).
using AliasTable = std::map<std::string, Word, std::less<>>;

/// Parses whitespace-separated tokens `a1`, `b2'`, `1`, or alias names
/// (optionally with `'`). Throws ParseError with `line` and the column of
/// the offending token offset by `column_offset`.
Word parse_word(std::string_view text, int genus, const AliasTable& aliases = {},
                int line = 1, int column_offset = 0);

/// Torelli-generator bookkeeping carried alongside a mapping class.
struct DecompositionLetter {
  std::string name;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const DecompositionLetter&, const DecompositionLetter&) = default;
};

/// An endomorphism of F given by the images of its 2g generators.
class MappingClass {
 public:
  MappingClass(int genus, std::vector<Word> images,
               std::optional<std::vector<Word>> inverse_images = std::nullopt,
               std::optional<std::vector<DecompositionLetter>> decomposition = std::nullopt);

  static MappingClass identity(int genus);

  int genus() const noexcept { return genus_; }
  int rank() const noexcept { return 2 * genus_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  /// Image of generator `index` in 1..2g.
  const Word& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }
  const std::optional<std::vector<Word>>& inverse_images() const noexcept { return inverse_images_; }
  const std::optional<std::vector<DecompositionLetter>>& decomposition() const noexcept {
    return decomposition_;
  }

  MappingClass with_decomposition(std::vector<DecompositionLetter> letters) const;
  MappingClass without_inverse() const;

  /// Equality of the underlying endomorphisms (inverse data ignored).
  bool same_action(const MappingClass& other) const { return images_ == other.images_; }

 private:
  int genus_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
  std::optional<std::vector<DecompositionLetter>> decomposition_;
};

Word apply(const MappingClass& f, const Word& w);

/// f after h: generator x maps to apply(f, h(x)).
MappingClass compose(const MappingClass& f, const MappingClass& h);

/// Swaps images and inverse images. Throws MissingInverse when no inverse
/// was supplied.
MappingClass inverse(const MappingClass& f);

/// Column j is the exponent-sum vector of the image of generator j+1.
using IntMatrix = std::vector<std::vector<BigInt>>;
IntMatrix abelianization(const MappingClass& f);
BigInt determinant(IntMatrix m);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  /// First failing check, or nullptr.
  const ValidationCheck* first_failure() const;
};

/// Checks boundary fixing, unimodularity of the abelianized action and,
/// when present, that the supplied inverse composes to the identity.
ValidationReport validate(const MappingClass& f);

/// Throws ValidationFailed naming the first failing check.
void require_valid(const MappingClass& f);

}  // namespace torelli
