#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "coprod/field.hpp"

// Exact sparse linear algebra over a FieldSpec.
namespace coprod::linalg {

/// Entries sorted by ascending index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, FieldValue>>;

/// a − factor·b.
SparseVector subtract_multiple(const SparseVector& a, const FieldValue& factor, const SparseVector& b);

/// A basis of {c : Σ_j c_j · columns[j] = 0}, indexed by column.
///
/// Plain Gaussian elimination on columns, pivoting on the largest row index
/// of each reduced column; the result depends only on the input order.
std::vector<SparseVector> kernel(std::span<const SparseVector> columns, const FieldSpec& field);

/// Reduced row echelon basis of span(rows): every vector's smallest index
/// carries coefficient 1 and is zero in all other vectors. Sorted by that
/// pivot index.
std::vector<SparseVector> reduced_echelon(std::vector<SparseVector> rows);

}  // namespace coprod::linalg
