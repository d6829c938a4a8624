#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "coprod/element.hpp"
#include "coprod/report.hpp"

namespace coprod {

/// Basis elements of C(u) ∩ R_{≤N} whose degree is exactly `degree`.
struct DegreeSlice {
  std::size_t degree = 0;
  /// dim C_{≤n} − dim C_{≤n−1}, i.e. dim (Gr C)_n.
  std::size_t dim_gr = 0;
  std::vector<AlgebraElement> new_elements;
};

/// Echelon basis of the centralizer of u truncated at a maximum degree.
///
/// Every element has leading coefficient 1 at its order-maximal word, and no
/// other element has a nonzero coefficient at that word.
struct GradedBasis {
  AlgebraElement u;
  std::size_t max_degree = 0;
  std::vector<DegreeSlice> per_degree;  // degrees 0..max_degree
  std::vector<AlgebraElement> cumulative;

  std::vector<std::size_t> dims() const;
};

/// Echelon basis of {x ∈ span(words) : xu = ux}.
std::vector<AlgebraElement> commutant_in_span(const AlgebraElement& u, std::span<const Word> words);

/// Basis of the degree-n homogeneous elements commuting with u.
std::vector<AlgebraElement> homogeneous_commutant(const AlgebraElement& u, std::size_t n);

/// Throws std::invalid_argument when u is zero or a scalar.
GradedBasis centralizer_basis(const AlgebraElement& u, std::size_t max_degree);

/// One trial per unordered pair; a failure names the non-commuting pair.
CheckReport check_pairwise_commutes(const GradedBasis& basis);

using ProductFn = std::function<AlgebraElement(const AlgebraElement&, const AlgebraElement&)>;

/// d(ab) = d(a) + d(b), φ(ab) = φ(a)φ(b), c(ab) = c(a)c(b). The product is
/// injectable so negative controls can feed a corrupted one. Throws
/// std::invalid_argument when a or b is zero.
CheckReport degree_additivity_check(const AlgebraElement& a, const AlgebraElement& b,
                                    const ProductFn& product = multiply);

/// Alphabet and field of an element, for embedding in failure witnesses.
Json witness_context(const AlgebraElement& a);

}  // namespace coprod
