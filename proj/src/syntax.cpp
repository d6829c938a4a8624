#include "coprod/syntax.hpp"

#include <cctype>
#include <vector>

namespace coprod {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(const Alphabet& alphabet, const FieldSpec& field, std::string_view text)
      : alphabet_(alphabet), field_(field), text_(text) {}

  AlgebraElement element() {
    AlgebraElement out(alphabet_, field_);
    skip_space();
    bool negate = accept('-');
    for (;;) {
      auto [word, coeff] = term();
      out.add_term(word, negate ? -coeff : coeff);
      skip_space();
      if (at_end()) break;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return out;
  }

  Word word_only() {
    skip_space();
    Word w;
    if (peek_digit()) {
      auto [num, den] = coefficient_text();
      if (num != "1" || !den.empty()) fail("expected a word");
      skip_space();
      if (!at_end()) fail("trailing input after '1'");
      return w;
    }
    w = factors();
    skip_space();
    if (!at_end()) fail("trailing input");
    return w;
  }

 private:
  std::pair<Word, FieldValue> term() {
    skip_space();
    FieldValue coeff = FieldValue::one(field_);
    if (peek_digit()) {
      const auto start = pos_;
      auto [num, den] = coefficient_text();
      try {
        coeff = FieldValue::parse(field_, den.empty() ? num : num + "/" + den);
      } catch (const std::exception& e) {
        throw ParseError(std::string("malformed coefficient: ") + e.what(), start);
      }
      skip_space();
      if (!accept('*')) return {Word(), coeff};
    }
    return {factors(), coeff};
  }

  Word factors() {
    std::vector<Letter> letters;
    for (;;) {
      skip_space();
      const auto start = pos_;
      std::string name = identifier();
      auto letter = alphabet_.find(name);
      if (!letter) throw ParseError("unknown variable '" + name + "'", start);
      std::size_t exponent = 1;
      skip_space();
      if (accept('^')) {
        skip_space();
        if (!peek_digit()) fail("expected exponent");
        exponent = 0;
        while (peek_digit()) {
          exponent = exponent * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
          if (exponent > 4096) fail("exponent too large");
        }
      }
      letters.insert(letters.end(), exponent, *letter);
      skip_space();
      if (!accept('*')) break;
    }
    return Word::from_letters(letters);
  }

  std::pair<std::string, std::string> coefficient_text() {
    std::string num = digits();
    std::string den;
    skip_space();
    if (accept('/')) {
      skip_space();
      if (!peek_digit()) fail("expected denominator");
      den = digits();
    }
    return {num, den};
  }

  std::string digits() {
    std::string out;
    while (peek_digit()) out.push_back(text_[pos_++]);
    return out;
  }

  std::string identifier() {
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("expected variable");
    }
    std::string out;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out.push_back(text_[pos_++]);
    }
    return out;
  }

  bool peek_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool accept(char c) {
    if (at_end() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  const Alphabet& alphabet_;
  const FieldSpec& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(const Alphabet& alphabet, const FieldSpec& field, std::string_view text) {
  return Parser(alphabet, field, text).element();
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  return Parser(alphabet, FieldSpec::rationals(), text).word_only();
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += '*';
    out += alphabet.name(letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& w : sorted_support(a)) {
    auto c = a.coefficient(w);
    const bool negative = c.is_negative();
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.is_identity()) {
      out += c.to_string();
    } else {
      if (!c.is_one()) out += c.to_string() + "*";
      out += format_word(a.alphabet(), w);
    }
  }
  return out;
}

}  // namespace coprod
