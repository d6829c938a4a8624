#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "coprod/alphabet.hpp"
#include "coprod/field.hpp"
#include "coprod/word.hpp"

namespace coprod {

/// An element of k⟨X⟩*k[Y]: a finitely supported map from words to nonzero
/// scalars. Binary operations require equal alphabets and fields and throw
/// std::invalid_argument otherwise.
class AlgebraElement {
 public:
  using Terms = std::map<Word, FieldValue>;

  /// The zero element.
  AlgebraElement(Alphabet alphabet, FieldSpec field);

  static AlgebraElement monomial(Alphabet alphabet, FieldSpec field, Word word, FieldValue coeff);
  static AlgebraElement scalar(Alphabet alphabet, FieldSpec field, FieldValue coeff);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const FieldSpec& field() const noexcept { return field_; }
  /// Keyed by structural word order; use sorted_support() for the total order.
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  FieldValue coefficient(const Word& w) const;

  /// Adds coeff·w, dropping the term if it cancels.
  void add_term(const Word& w, const FieldValue& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const FieldValue& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const FieldValue& s) { return a *= s; }
  friend AlgebraElement operator*(const FieldValue& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&);

  void require_compatible(const AlgebraElement& other) const;

 private:
  Alphabet alphabet_;
  FieldSpec field_;
  Terms terms_;
};

/// λa + μb.
AlgebraElement linear_combine(const FieldValue& lambda, const AlgebraElement& a,
                              const FieldValue& mu, const AlgebraElement& b);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, std::size_t k);

std::set<Word> support(const AlgebraElement& a);
/// Support in descending total order.
std::vector<Word> sorted_support(const AlgebraElement& a);
/// supp a ∩ [w].
std::set<Word> support_in_class(const AlgebraElement& a, const Word& w);

AlgebraElement homogeneous_component(const AlgebraElement& a, std::size_t degree);
/// Maximum support length; std::nullopt stands for the degree −∞ of zero.
std::optional<std::size_t> total_degree(const AlgebraElement& a);
bool is_homogeneous(const AlgebraElement& a);
/// Nonzero and of total degree zero.
bool is_scalar(const AlgebraElement& a);

/// Degree d, top component x̄, its order-maximal word φ and coefficient c.
struct LeadingData {
  std::size_t degree;
  AlgebraElement leading_term;
  Word phi;
  FieldValue c;
};

/// Throws std::invalid_argument for zero.
LeadingData leading_data(const AlgebraElement& a);

struct PurityProfile {
  bool pure = true;
  bool top_pure = true;
  /// Degrees m ≥ 1 whose homogeneous component has a non-pure word.
  std::set<std::size_t> impure_degrees;

  bool is_m_pure(std::size_t m) const { return !impure_degrees.contains(m); }
};

/// Throws std::invalid_argument for zero.
PurityProfile purity_flags(const AlgebraElement& a);

/// ab − ba.
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
bool commutes(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace coprod
