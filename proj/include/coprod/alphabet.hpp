#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coprod {

/// A single variable of X ⊔ Y.
///
/// Letters compare in the base order: every commuting variable precedes every
/// noncommuting one, and within a kind the declaration index decides.
class Letter {
 public:
  enum class Kind : std::uint8_t { commuting = 0, noncommuting = 1 };

  constexpr Letter() = default;
  constexpr Letter(Kind kind, std::uint16_t index) : kind_(kind), index_(index) {}

  static constexpr Letter y(std::uint16_t index) { return {Kind::commuting, index}; }
  static constexpr Letter x(std::uint16_t index) { return {Kind::noncommuting, index}; }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint16_t index() const noexcept { return index_; }
  constexpr bool commutes() const noexcept { return kind_ == Kind::commuting; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

 private:
  Kind kind_ = Kind::commuting;
  std::uint16_t index_ = 0;
};

/// The two finite variable sets, with their display names.
class Alphabet {
 public:
  Alphabet() = default;
  /// Names must be nonempty and pairwise distinct across both lists.
  Alphabet(std::vector<std::string> commuting, std::vector<std::string> noncommuting);

  /// x1..x{nx} and y1..y{ny}.
  static Alphabet standard(std::size_t nx, std::size_t ny);

  std::size_t commuting_count() const noexcept { return commuting_.size(); }
  std::size_t noncommuting_count() const noexcept { return noncommuting_.size(); }
  std::size_t size() const noexcept { return commuting_.size() + noncommuting_.size(); }

  bool contains(Letter letter) const noexcept;
  const std::string& name(Letter letter) const;
  std::optional<Letter> find(std::string_view name) const;

  /// All letters in base order.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> commuting_;
  std::vector<std::string> noncommuting_;
};

}  // namespace coprod
