#pragma once

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coprod/element.hpp"
#include "coprod/order.hpp"
#include "coprod/syntax.hpp"
#include "coprod/word.hpp"

namespace testing {

using namespace coprod;

inline Alphabet std_alphabet(std::size_t nx = 2, std::size_t ny = 2) { return Alphabet::standard(nx, ny); }

inline Word W(const std::string& text, const Alphabet& a = std_alphabet()) { return parse_word(a, text); }

inline AlgebraElement E(const std::string& text, const FieldSpec& f = FieldSpec::rationals(),
                        const Alphabet& a = std_alphabet()) {
  return parse_element(a, f, text);
}

inline FieldValue Q(long num, long den = 1) {
  return FieldValue::from_rational(FieldSpec::rationals(), mpq_class(num, den));
}

/// Every letter sequence of the given length over `letters`.
inline std::vector<std::vector<Letter>> all_sequences(const std::vector<Letter>& letters, std::size_t n) {
  std::vector<std::vector<Letter>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Letter>> next;
    for (const auto& s : out) {
      for (Letter l : letters) {
        auto t = s;
        t.push_back(l);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Distinct words of length ≤ n obtained by normalizing every sequence.
inline std::vector<Word> words_up_to(const Alphabet& a, std::size_t n) {
  std::set<Word> seen;
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& s : all_sequences(a.letters(), k)) seen.insert(Word::from_letters(s));
  }
  return {seen.begin(), seen.end()};
}

inline Word random_word(std::mt19937_64& rng, const Alphabet& a, std::size_t max_len) {
  const auto letters = a.letters();
  std::vector<Letter> seq(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& l : seq) l = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
  return Word::from_letters(seq);
}

inline AlgebraElement random_element(std::mt19937_64& rng, const Alphabet& a, const FieldSpec& f,
                                     std::size_t max_len, std::size_t max_terms) {
  AlgebraElement out(a, f);
  const auto terms = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
  for (std::size_t i = 0; i < terms; ++i) {
    const long c = std::uniform_int_distribution<long>(-3, 3)(rng);
    const long d = f.is_prime() ? 1 : std::uniform_int_distribution<long>(1, 2)(rng);
    out.add_term(random_word(rng, a, max_len), FieldValue::from_rational(f, mpq_class(c, d)));
  }
  return out;
}

}  // namespace testing
