#include "coprod/element.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "coprod/order.hpp"

namespace coprod {

AlgebraElement::AlgebraElement(Alphabet alphabet, FieldSpec field)
    : alphabet_(std::move(alphabet)), field_(field) {}

AlgebraElement AlgebraElement::monomial(Alphabet alphabet, FieldSpec field, Word word,
                                        FieldValue coeff) {
  if (!fits(alphabet, word)) throw std::invalid_argument("word uses letters outside the alphabet");
  AlgebraElement a(std::move(alphabet), field);
  a.add_term(word, coeff);
  return a;
}

AlgebraElement AlgebraElement::scalar(Alphabet alphabet, FieldSpec field, FieldValue coeff) {
  return monomial(std::move(alphabet), field, Word(), std::move(coeff));
}

FieldValue AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldValue::zero(field_) : it->second;
}

void AlgebraElement::add_term(const Word& w, const FieldValue& coeff) {
  if (!coeff.belongs_to(field_)) throw std::invalid_argument("coefficient from a different field");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::require_compatible(const AlgebraElement& other) const {
  if (!(alphabet_ == other.alphabet_)) throw std::invalid_argument("elements over different alphabets");
  if (!(field_ == other.field_)) throw std::invalid_argument("elements over different fields");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const FieldValue& scalar) {
  if (!scalar.belongs_to(field_)) throw std::invalid_argument("scalar from a different field");
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.alphabet_ == b.alphabet_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement linear_combine(const FieldValue& lambda, const AlgebraElement& a,
                              const FieldValue& mu, const AlgebraElement& b) {
  a.require_compatible(b);
  AlgebraElement out = a * lambda;
  out += b * mu;
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_compatible(b);
  std::unordered_map<Word, FieldValue, WordHash> acc;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      auto product = cx * cy;
      auto [it, inserted] = acc.try_emplace(concat(x, y), product);
      if (!inserted) it->second += product;
    }
  }
  AlgebraElement out(a.alphabet(), a.field());
  for (auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

AlgebraElement power(const AlgebraElement& a, std::size_t k) {
  AlgebraElement out = AlgebraElement::scalar(a.alphabet(), a.field(), FieldValue::one(a.field()));
  AlgebraElement base = a;
  while (k > 0) {
    if (k & 1) out = multiply(out, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return out;
}

std::set<Word> support(const AlgebraElement& a) {
  std::set<Word> out;
  for (const auto& [w, c] : a.terms()) out.insert(out.end(), w);
  return out;
}

std::vector<Word> sorted_support(const AlgebraElement& a) {
  std::vector<Word> out;
  out.reserve(a.term_count());
  for (const auto& [w, c] : a.terms()) out.push_back(w);
  sort_words(a.alphabet(), out);
  std::reverse(out.begin(), out.end());
  return out;
}

std::set<Word> support_in_class(const AlgebraElement& a, const Word& w) {
  const auto key = equiv_key(w);
  std::set<Word> out;
  for (const auto& [v, c] : a.terms()) {
    if (v.length() == w.length() && equiv_key(v) == key) out.insert(out.end(), v);
  }
  return out;
}

AlgebraElement homogeneous_component(const AlgebraElement& a, std::size_t degree) {
  AlgebraElement out(a.alphabet(), a.field());
  for (const auto& [w, c] : a.terms()) {
    if (w.length() == degree) out.add_term(w, c);
  }
  return out;
}

std::optional<std::size_t> total_degree(const AlgebraElement& a) {
  if (a.is_zero()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& [w, c] : a.terms()) d = std::max(d, w.length());
  return d;
}

bool is_homogeneous(const AlgebraElement& a) {
  if (a.is_zero()) return true;
  const auto d = a.terms().begin()->first.length();
  for (const auto& [w, c] : a.terms()) {
    if (w.length() != d) return false;
  }
  return true;
}

bool is_scalar(const AlgebraElement& a) { return total_degree(a) == std::size_t{0}; }

LeadingData leading_data(const AlgebraElement& a) {
  const auto d = total_degree(a);
  if (!d) throw std::invalid_argument("leading data of zero");
  auto top = homogeneous_component(a, *d);
  std::vector<Word> words;
  for (const auto& [w, c] : top.terms()) words.push_back(w);
  auto phi = max_word(words);
  auto c = top.coefficient(phi);
  return LeadingData{*d, std::move(top), std::move(phi), std::move(c)};
}

PurityProfile purity_flags(const AlgebraElement& a) {
  const auto d = total_degree(a);
  if (!d) throw std::invalid_argument("purity of zero");
  PurityProfile profile;
  for (const auto& [w, c] : a.terms()) {
    if (!w.is_pure()) {
      profile.pure = false;
      profile.impure_degrees.insert(w.length());
    }
  }
  profile.top_pure = profile.is_m_pure(*d);
  return profile;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

bool commutes(const AlgebraElement& a, const AlgebraElement& b) { return commutator(a, b).is_zero(); }

}  // namespace coprod
