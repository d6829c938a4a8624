#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coprod/alphabet.hpp"

namespace coprod {

class Word;

/// A finite multiset of commuting variables, i.e. an element of [Y].
///
/// Stored as (variable index, exponent) entries sorted by index with no zero
/// exponents, so structural equality is multiset equality.
class CommBlock {
 public:
  using Entry = std::pair<std::uint16_t, std::uint32_t>;

  CommBlock() = default;
  /// Entries may be unsorted and may repeat an index or carry zero exponents.
  static CommBlock from_entries(std::vector<Entry> entries);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::uint32_t exponent(std::uint16_t index) const noexcept;
  /// Sum of exponents.
  std::size_t size() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }

  Word to_word() const;

  friend bool operator==(const CommBlock&, const CommBlock&) = default;
  friend auto operator<=>(const CommBlock&, const CommBlock&) = default;

 private:
  std::vector<Entry> entries_;
};

/// An element of the coproduct monoid ⟨X⟩*[Y] in normal form.
///
/// The normal form is the letter sequence with every maximal run of commuting
/// letters sorted. Structural equality is therefore monoid equality. The
/// three-way comparison here is structural only; the multiplicative total
/// order lives in order.hpp.
class Word {
 public:
  Word() = default;

  /// Normalizes an arbitrary letter sequence.
  static Word from_letters(std::span<const Letter> letters);
  static Word from_letter(Letter letter) { return Word(std::vector<Letter>{letter}); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  /// True iff the word has no noncommuting letter (identity included).
  bool is_pure() const noexcept;
  std::size_t count(Letter letter) const noexcept;

  /// Commuting block before the first noncommuting letter (whole word if pure).
  CommBlock leading_block() const;
  /// (noncommuting letter, following commuting block) pairs, left to right.
  std::vector<std::pair<Letter, CommBlock>> tail() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> canonical) : letters_(std::move(canonical)) {}
  friend Word concat(const Word&, const Word&);

  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word concat(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }
Word power(const Word& w, std::size_t k);

inline std::size_t length(const Word& w) noexcept { return w.length(); }

/// Every letter of `w` belongs to `alphabet`.
bool fits(const Alphabet& alphabet, const Word& w) noexcept;

/// Throws std::invalid_argument on an unknown name.
Word word_from_letters(const Alphabet& alphabet, std::span<const std::string> names);

/// w = prefix · middle · suffix; for pure w the middle is absent and both
/// prefix and suffix are the whole of w.
struct Decomposition {
  CommBlock prefix;
  std::optional<Word> middle;
  CommBlock suffix;
  bool pure = true;
};

Decomposition decompose(const Word& w);
/// p(w) and s(w) as words.
Word prefix(const Word& w);
Word suffix(const Word& w);

/// Invariant data of the ~-class of a word. `middle` is empty exactly for
/// pure words; otherwise it starts and ends with a noncommuting letter.
struct EquivKey {
  std::size_t length = 0;
  std::size_t prefix_length = 0;
  std::optional<Word> middle;
  std::size_t suffix_length = 0;

  bool is_pure() const noexcept { return !middle.has_value(); }

  friend bool operator==(const EquivKey&, const EquivKey&) = default;
  friend auto operator<=>(const EquivKey&, const EquivKey&) = default;
};

EquivKey equiv_key(const Word& w);
bool equivalent(const Word& u, const Word& v);

/// All (v, w) with v·w = u and |v| = n. Throws std::out_of_range if n > |u|.
std::vector<std::pair<Word, Word>> left_factorizations(const Word& u, std::size_t n);

/// All distinct words of length n over `alphabet`, largest first in the total order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t n);

/// Number of distinct words of length n, without materializing them.
std::size_t count_words(const Alphabet& alphabet, std::size_t n);

}  // namespace coprod
