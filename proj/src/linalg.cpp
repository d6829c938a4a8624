#include "coprod/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace coprod::linalg {

SparseVector subtract_multiple(const SparseVector& a, const FieldValue& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, -(factor * j->second));
      ++j;
    } else {
      auto v = i->second - factor * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

void scale(SparseVector& v, const FieldValue& factor) {
  for (auto& e : v) e.second *= factor;
}

}  // namespace

std::vector<SparseVector> kernel(std::span<const SparseVector> columns, const FieldSpec& field) {
  struct Pivot {
    SparseVector image;        // leading (last) entry normalized to 1
    SparseVector combination;  // over column indices
  };
  std::vector<Pivot> pivots;
  std::unordered_map<std::size_t, std::size_t> by_row;
  std::vector<SparseVector> out;

  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector image = columns[j];
    SparseVector combination{{j, FieldValue::one(field)}};
    while (!image.empty()) {
      auto it = by_row.find(image.back().first);
      if (it == by_row.end()) break;
      const auto& p = pivots[it->second];
      const FieldValue factor = image.back().second;
      image = subtract_multiple(image, factor, p.image);
      combination = subtract_multiple(combination, factor, p.combination);
    }
    if (image.empty()) {
      out.push_back(std::move(combination));
      continue;
    }
    const auto inv = image.back().second.inverse();
    scale(image, inv);
    scale(combination, inv);
    by_row.emplace(image.back().first, pivots.size());
    pivots.push_back({std::move(image), std::move(combination)});
  }
  return out;
}

std::vector<SparseVector> reduced_echelon(std::vector<SparseVector> rows) {
  std::vector<SparseVector> basis;  // sorted by pivot (front index)
  auto pivot_of = [](const SparseVector& v) { return v.front().first; };

  for (auto& row : rows) {
    // Basis vectors vanish at each other's pivots, so one ordered pass reduces
    // the row completely.
    for (const auto& b : basis) {
      if (row.empty()) break;
      auto p = pivot_of(b);
      auto it = std::lower_bound(row.begin(), row.end(), p,
                                 [](const auto& e, std::size_t idx) { return e.first < idx; });
      if (it != row.end() && it->first == p) row = subtract_multiple(row, FieldValue(it->second), b);
    }
    if (row.empty()) continue;
    scale(row, row.front().second.inverse());
    // Back-substitute into the existing basis.
    const auto p = pivot_of(row);
    for (auto& b : basis) {
      auto it = std::lower_bound(b.begin(), b.end(), p,
                                 [](const auto& e, std::size_t idx) { return e.first < idx; });
      if (it != b.end() && it->first == p) b = subtract_multiple(b, it->second, row);
    }
    auto pos = std::lower_bound(basis.begin(), basis.end(), p,
                                [&](const SparseVector& v, std::size_t idx) { return pivot_of(v) < idx; });
    basis.insert(pos, std::move(row));
  }
  return basis;
}

}  // namespace coprod::linalg
