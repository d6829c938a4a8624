#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coprod/element.hpp"

namespace coprod {

/// Syntax or lookup error while reading an element; `position` is the byte
/// offset in the input where reading stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace-insensitive):
///
///     element := ['-'] term (('+' | '-') term)*  |  '0'
///     term    := coeff | [coeff '*'] factor ('*' factor)*
///     factor  := variable ['^' nat]
///     coeff   := nat ['/' nat]
///
/// Variables are the alphabet's names.
AlgebraElement parse_element(const Alphabet& alphabet, const FieldSpec& field, std::string_view text);

/// A single word written as a product of factors ("1" for the identity).
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Canonical text: terms in descending total order, unit coefficients
/// omitted, "0" for zero. parse_element inverts it exactly.
std::string format_element(const AlgebraElement& a);

/// "x1*y1^2*x1"; the identity prints as "1".
std::string format_word(const Alphabet& alphabet, const Word& w);

}  // namespace coprod
