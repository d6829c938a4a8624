#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "coprod/alphabet.hpp"
#include "coprod/word.hpp"

namespace coprod {

/// A coordinate of the projection tuple: a single letter (occurrence count)
/// or a pair of letters that do not commute with each other (the subword on
/// those two letters).
class ProjectionIndex {
 public:
  static ProjectionIndex singleton(Letter a);
  /// Throws std::invalid_argument for equal letters or two commuting letters.
  static ProjectionIndex pair(Letter a, Letter b);

  Letter first() const noexcept { return first_; }
  std::optional<Letter> second() const noexcept { return second_; }
  bool is_pair() const noexcept { return second_.has_value(); }
  /// Position in the alphabet's enumeration; see projection_indices().
  std::size_t rank() const noexcept { return rank_; }

  friend bool operator==(const ProjectionIndex& a, const ProjectionIndex& b) {
    return a.first_ == b.first_ && a.second_ == b.second_;
  }

 private:
  ProjectionIndex(Letter a, std::optional<Letter> b) : first_(a), second_(b) {}
  friend std::vector<ProjectionIndex> projection_indices(const Alphabet&);

  Letter first_;
  std::optional<Letter> second_;
  std::size_t rank_ = 0;
};

/// Count for a singleton, subword over the two letters for a pair.
using Projection = std::variant<std::size_t, std::vector<Letter>>;

Projection project(const Word& w, const ProjectionIndex& index);

/// The fixed enumeration: singletons in base order, then pairs of
/// noncommuting letters, then (commuting, noncommuting) pairs, each pair
/// family in lexicographic order of its base-ordered letters.
std::vector<ProjectionIndex> projection_indices(const Alphabet& alphabet);

/// Strict total order on ⟨X⟩*[Y]: shorter words first, then the projection
/// tuple compared index by index in the order of projection_indices(). Pair
/// projections of equal length compare lexicographically by base order.
///
/// Indices over letters absent from both words compare equal, so the result
/// does not depend on the alphabet the words are drawn from.
std::strong_ordering compare(const Word& u, const Word& v);

struct WordLess {
  bool operator()(const Word& u, const Word& v) const { return compare(u, v) < 0; }
};

/// Flattened projection tuple whose lexicographic order equals compare().
std::vector<std::uint16_t> order_key(const Alphabet& alphabet, const Word& w);

/// Ascending in the total order.
void sort_words(const Alphabet& alphabet, std::vector<Word>& words);

/// Throws std::invalid_argument on an empty set.
Word max_word(std::span<const Word> words);

}  // namespace coprod
