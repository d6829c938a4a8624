#include "coprod/centralizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "coprod/linalg.hpp"
#include "coprod/order.hpp"
#include "coprod/syntax.hpp"

namespace coprod {

std::vector<std::size_t> GradedBasis::dims() const {
  std::vector<std::size_t> out;
  for (const auto& slice : per_degree) out.push_back(slice.dim_gr);
  return out;
}

Json witness_context(const AlgebraElement& a) {
  Json out;
  std::vector<std::string> ys;
  std::vector<std::string> xs;
  for (Letter l : a.alphabet().letters()) (l.commutes() ? ys : xs).push_back(a.alphabet().name(l));
  out["commuting"] = ys;
  out["noncommuting"] = xs;
  out["field"] = a.field().to_string();
  return out;
}

std::vector<AlgebraElement> commutant_in_span(const AlgebraElement& u, std::span<const Word> words) {
  const auto& alphabet = u.alphabet();
  const auto& field = u.field();

  // Unknowns in descending total order, so echelon pivots are leading words.
  std::vector<Word> unknowns(words.begin(), words.end());
  sort_words(alphabet, unknowns);
  unknowns.erase(std::unique(unknowns.begin(), unknowns.end()), unknowns.end());
  std::reverse(unknowns.begin(), unknowns.end());

  // Image of each unknown word under x ↦ xu − ux.
  std::vector<std::unordered_map<Word, FieldValue, WordHash>> images(unknowns.size());
  std::unordered_map<Word, std::size_t, WordHash> row_index;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    auto& image = images[j];
    auto add = [&](Word w, const FieldValue& c) {
      auto [it, inserted] = image.try_emplace(std::move(w), c);
      if (!inserted) it->second += c;
    };
    for (const auto& [t, c] : u.terms()) {
      add(concat(unknowns[j], t), c);
      add(concat(t, unknowns[j]), -c);
    }
    std::erase_if(image, [](const auto& e) { return e.second.is_zero(); });
    for (const auto& [w, c] : image) row_index.try_emplace(w, 0);
  }

  // Rows ranked by the total order; the kernel pivots on the largest rank.
  std::vector<Word> rows;
  rows.reserve(row_index.size());
  for (const auto& [w, unused] : row_index) rows.push_back(w);
  sort_words(alphabet, rows);
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;

  // Columns are fed smallest word first.
  std::vector<linalg::SparseVector> columns;
  columns.reserve(unknowns.size());
  for (std::size_t k = unknowns.size(); k-- > 0;) {
    linalg::SparseVector col;
    for (auto& [w, c] : images[k]) col.emplace_back(row_index.at(w), std::move(c));
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    columns.push_back(std::move(col));
  }

  auto null_vectors = linalg::kernel(columns, field);
  // Re-index from feed order to descending word order.
  const std::size_t n = unknowns.size();
  for (auto& v : null_vectors) {
    for (auto& e : v) e.first = n - 1 - e.first;
    std::reverse(v.begin(), v.end());
  }

  std::vector<AlgebraElement> out;
  for (const auto& v : linalg::reduced_echelon(std::move(null_vectors))) {
    AlgebraElement x(alphabet, field);
    for (const auto& [j, c] : v) x.add_term(unknowns[j], c);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<AlgebraElement> homogeneous_commutant(const AlgebraElement& u, std::size_t n) {
  if (u.is_zero()) throw std::invalid_argument("commutant of zero");
  const auto words = enumerate_words(u.alphabet(), n);
  return commutant_in_span(u, words);
}

GradedBasis centralizer_basis(const AlgebraElement& u, std::size_t max_degree) {
  if (u.is_zero() || is_scalar(u)) {
    throw std::invalid_argument("centralizer requires a nonscalar element");
  }
  std::vector<Word> words;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto stratum = enumerate_words(u.alphabet(), n);
    words.insert(words.end(), stratum.begin(), stratum.end());
  }

  GradedBasis gb{u, max_degree, {}, commutant_in_span(u, words)};
  for (std::size_t n = 0; n <= max_degree; ++n) gb.per_degree.push_back({n, 0, {}});
  for (const auto& x : gb.cumulative) {
    auto& slice = gb.per_degree[*total_degree(x)];
    ++slice.dim_gr;
    slice.new_elements.push_back(x);
  }
  return gb;
}

CheckReport check_pairwise_commutes(const GradedBasis& basis) {
  CheckReport report{.name = "pairwise-commutes"};
  const auto& elems = basis.cumulative;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      auto c = commutator(elems[i], elems[j]);
      if (c.is_zero()) {
        report.record_pass();
        continue;
      }
      Json w = witness_context(basis.u);
      w["check"] = report.name;
      w["u"] = format_element(basis.u);
      w["a"] = format_element(elems[i]);
      w["b"] = format_element(elems[j]);
      w["commutator"] = format_element(c);
      report.record_failure("basis elements do not commute", std::move(w));
    }
  }
  return report;
}

CheckReport degree_additivity_check(const AlgebraElement& a, const AlgebraElement& b,
                                    const ProductFn& product) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("degree additivity needs nonzero factors");
  CheckReport report{.name = "degree-additivity"};
  const auto ab = product(a, b);
  const auto la = leading_data(a);
  const auto lb = leading_data(b);

  Json w = witness_context(a);
  w["check"] = report.name;
  w["a"] = format_element(a);
  w["b"] = format_element(b);
  w["ab"] = format_element(ab);

  if (ab.is_zero()) {
    report.record_failure("product of nonzero elements vanished", std::move(w));
    return report;
  }
  const auto lab = leading_data(ab);
  const auto phi = concat(la.phi, lb.phi);
  if (lab.degree != la.degree + lb.degree) {
    w["degrees"] = {la.degree, lb.degree, lab.degree};
    report.record_failure("d(ab) != d(a) + d(b)", std::move(w));
  } else if (!(lab.phi == phi)) {
    w["phi_ab"] = format_word(a.alphabet(), lab.phi);
    w["phi_a_phi_b"] = format_word(a.alphabet(), phi);
    report.record_failure("phi(ab) != phi(a) phi(b)", std::move(w));
  } else if (!(lab.c == la.c * lb.c)) {
    w["c_ab"] = lab.c.to_string();
    w["c_a_c_b"] = (la.c * lb.c).to_string();
    report.record_failure("c(ab) != c(a) c(b)", std::move(w));
  } else {
    report.record_pass();
  }
  return report;
}

}  // namespace coprod
