#include "coprod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "coprod/order.hpp"
#include "coprod/syntax.hpp"

namespace coprod::verify {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <class Range>
auto pick(Rng& rng, const Range& range) {
  auto it = range.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(uniform(rng, 0, range.size() - 1)));
  return *it;
}

FieldValue random_scalar(const FieldSpec& field, Rng& rng) {
  if (field.is_prime()) {
    return FieldValue::from_integer(field, static_cast<long>(uniform(rng, 1, field.characteristic() - 1)));
  }
  static constexpr long kDenominators[] = {1, 1, 1, 2, 3};
  long num = static_cast<long>(uniform(rng, 1, 4));
  if (uniform(rng, 0, 1)) num = -num;
  const long den = kDenominators[uniform(rng, 0, 4)];
  return FieldValue::from_rational(field, mpq_class(num, den));
}

// Smallest standard alphabet naming every letter of the given words.
Alphabet covering(std::initializer_list<const Word*> words) {
  std::size_t nx = 0;
  std::size_t ny = 0;
  for (const Word* w : words) {
    for (Letter l : w->letters()) {
      auto& n = l.commutes() ? ny : nx;
      n = std::max<std::size_t>(n, l.index() + 1u);
    }
  }
  return Alphabet::standard(nx, ny);
}

Json alphabet_json(const Alphabet& alphabet) {
  Json out;
  std::vector<std::string> ys;
  std::vector<std::string> xs;
  for (Letter l : alphabet.letters()) (l.commutes() ? ys : xs).push_back(alphabet.name(l));
  out["commuting"] = ys;
  out["noncommuting"] = xs;
  return out;
}

Json witness(const std::string& check, const AlgebraElement& context) {
  Json w;
  w["check"] = check;
  const Json ctx = witness_context(context);
  for (const auto& [k, v] : ctx.items()) w[k] = v;
  return w;
}

bool maximal_in(const Word& candidate, const std::vector<Word>& values) {
  return std::all_of(values.begin(), values.end(),
                     [&](const Word& v) { return compare(v, candidate) <= 0; });
}

std::set<Word> prefixes(const std::set<Word>& words) {
  std::set<Word> out;
  for (const auto& w : words) out.insert(prefix(w));
  return out;
}

std::set<Word> suffixes(const std::set<Word>& words) {
  std::set<Word> out;
  for (const auto& w : words) out.insert(suffix(w));
  return out;
}

Json word_list(const Alphabet& alphabet, const std::set<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(format_word(alphabet, w));
  return out;
}

bool same_degree(const AlgebraElement& a, const AlgebraElement& b) {
  return total_degree(a) == total_degree(b);
}

// Σ c_i e_i over a random nonempty subset, never zero.
AlgebraElement random_combination(const std::vector<AlgebraElement>& basis, Rng& rng) {
  AlgebraElement out(basis.front().alphabet(), basis.front().field());
  while (out.is_zero()) {
    for (const auto& e : basis) {
      if (uniform(rng, 0, 1)) out += e * random_scalar(out.field(), rng);
    }
  }
  return out;
}

TrialConfig with_sizes(TrialConfig cfg, std::size_t nx, std::size_t ny) {
  cfg.nx = nx;
  cfg.ny = ny;
  return cfg;
}

std::size_t words_up_to(const Alphabet& alphabet, std::size_t degree) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= degree; ++k) total += count_words(alphabet, k);
  return total;
}

// Non-pure homogeneous element; retries with derived seeds.
AlgebraElement random_impure_homogeneous(const TrialConfig& cfg, std::size_t degree, std::size_t density,
                                         std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto a = random_element(cfg, degree, density, ElementShape::homogeneous, derive_seed(seed, attempt));
    if (!purity_flags(a).pure) return a;
  }
}

// A non-pure element whose top component is pure (so it is top-pure), or an
// arbitrary non-pure element when `top_pure` is false.
AlgebraElement random_impure(const TrialConfig& cfg, std::size_t degree, bool top_pure, std::uint64_t seed) {
  Rng rng(seed);
  const auto alphabet = cfg.alphabet();
  for (std::uint64_t attempt = 0;; ++attempt) {
    const auto s = derive_seed(seed, attempt);
    AlgebraElement u(alphabet, cfg.field);
    if (top_pure) {
      const auto pure_words = count_words(Alphabet::standard(0, cfg.ny), degree);
      u = random_element(cfg, degree, uniform(rng, 1, std::min<std::size_t>(2, pure_words)),
                         ElementShape::homogeneous, derive_seed(s, 1), true);
      const auto lower = words_up_to(alphabet, degree - 1);
      u += random_element(cfg, degree - 1, uniform(rng, 1, std::min<std::size_t>(3, lower)),
                          ElementShape::up_to_degree, derive_seed(s, 2));
    } else {
      const auto avail = words_up_to(alphabet, degree);
      u = random_element(cfg, degree, uniform(rng, 1, std::min<std::size_t>(3, avail)),
                         ElementShape::up_to_degree, derive_seed(s, 3));
    }
    if (!u.is_zero() && !is_scalar(u) && !purity_flags(u).pure) return u;
  }
}

std::vector<AlgebraElement> lower_than(const GradedBasis& gb, std::size_t degree) {
  std::vector<AlgebraElement> out;
  for (const auto& e : gb.cumulative) {
    if (*total_degree(e) < degree) out.push_back(e);
  }
  return out;
}

}  // namespace

void TrialConfig::validate() const {
  if (nx > 4 || ny > 4) throw std::invalid_argument("alphabet sizes are limited to 4 + 4");
  if (words_up_to(alphabet(), max_length) > enumeration_cap) {
    throw std::invalid_argument("enumeration up to length " + std::to_string(max_length) +
                                " exceeds the configured cap");
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Word random_word(const TrialConfig& cfg, std::size_t length, std::uint64_t seed) {
  const auto letters = cfg.alphabet().letters();
  if (letters.empty() && length > 0) throw std::invalid_argument("empty alphabet");
  Rng rng(seed);
  std::vector<Letter> seq;
  for (std::size_t i = 0; i < length; ++i) seq.push_back(pick(rng, letters));
  return Word::from_letters(seq);
}

AlgebraElement random_element(const TrialConfig& cfg, std::size_t degree, std::size_t density,
                              ElementShape shape, std::uint64_t seed, bool pure_only) {
  const auto alphabet = cfg.alphabet();
  const auto source = pure_only ? Alphabet::standard(0, cfg.ny) : alphabet;
  const auto letters = source.letters();
  const std::size_t available = shape == ElementShape::homogeneous ? count_words(source, degree)
                                                                    : words_up_to(source, degree);
  if (density == 0 || density > available) {
    throw std::invalid_argument("cannot draw " + std::to_string(density) + " distinct words; only " +
                                std::to_string(available) + " available");
  }
  Rng rng(seed);
  auto draw = [&](std::size_t length) {
    std::vector<Letter> seq;
    for (std::size_t i = 0; i < length; ++i) seq.push_back(pick(rng, letters));
    return Word::from_letters(seq);
  };
  std::set<Word> chosen;
  if (shape == ElementShape::up_to_degree) chosen.insert(draw(degree));
  while (chosen.size() < density) {
    chosen.insert(draw(shape == ElementShape::homogeneous ? degree : uniform(rng, 0, degree)));
  }
  AlgebraElement out(alphabet, cfg.field);
  for (const auto& w : chosen) out.add_term(w, random_scalar(cfg.field, rng));
  return out;
}

CheckHooks CheckHooks::corrupted() {
  CheckHooks h;
  h.factorizations = [](const Word& u, std::size_t n) {
    auto pairs = left_factorizations(u, n);
    if (pairs.empty()) return pairs;
    const auto [v, w] = pairs.front();
    // A same-length impostor of the opposite purity is never ~-equivalent.
    auto impostor = [](const Word& like) {
      std::vector<Letter> seq(like.length(), like.is_pure() ? Letter::x(0) : Letter::y(0));
      return Word::from_letters(seq);
    };
    if (n > 0) {
      pairs.emplace_back(impostor(v), w);
    } else if (w.length() > 0) {
      pairs.emplace_back(v, impostor(w));
    }
    return pairs;
  };
  h.product = [](const AlgebraElement& a, const AlgebraElement& b) {
    auto ab = multiply(a, b);
    if (ab.is_zero()) return ab;
    return ab - homogeneous_component(ab, *total_degree(ab));
  };
  h.class_support_second = [](const AlgebraElement& b, const Word& w) {
    auto words = support_in_class(b, w);
    if (words.empty()) return words;
    std::vector<Word> ps;
    for (const auto& v : words) ps.push_back(prefix(v));
    const auto top = max_word(ps);
    std::erase_if(words, [&](const Word& v) { return prefix(v) == top; });
    return words;
  };
  h.leading_term_second = [](const AlgebraElement& b) {
    auto ld = leading_data(b);
    ld.leading_term.add_term(ld.phi, -ld.c);
    return ld.leading_term;
  };
  h.centralizer = [](const AlgebraElement& u, std::size_t max_degree) {
    auto gb = centralizer_basis(u, max_degree);
    const auto& alphabet = u.alphabet();
    if (max_degree == 0 || alphabet.size() == 0) return gb;
    const Letter l = alphabet.noncommuting_count() > 0 ? Letter::x(0) : Letter::y(0);
    auto extra = AlgebraElement::monomial(alphabet, u.field(), Word::from_letter(l), FieldValue::one(u.field()));
    gb.per_degree[1].new_elements.push_back(extra);
    ++gb.per_degree[1].dim_gr;
    gb.cumulative.push_back(std::move(extra));
    return gb;
  };
  h.commutant = [](const AlgebraElement& a, std::size_t n) {
    auto basis = homogeneous_commutant(a, n);
    if (!basis.empty()) basis.pop_back();
    return basis;
  };
  return h;
}

CheckReport check_factorization_lemma(const Word& u, std::size_t n, const CheckHooks& hooks) {
  if (n > u.length()) throw std::out_of_range("split point exceeds word length");
  CheckReport report{.name = "factorization-lemma"};
  const auto pairs = hooks.factorizations(u, n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const auto& [v, w] = pairs[i];
      const auto& [v2, w2] = pairs[j];
      std::string clause;
      if (!equivalent(v, v2) || !equivalent(w, w2)) {
        clause = "(i) v ~ v' and w ~ w'";
      } else if (!v.is_pure() && prefix(v) != prefix(v2)) {
        clause = "(ii) p(v) = p(v')";
      } else if (!w.is_pure() && suffix(w) != suffix(w2)) {
        clause = "(iii) s(w) = s(w')";
      } else if (concat(suffix(v), prefix(w)) != concat(suffix(v2), prefix(w2))) {
        clause = "(iv) s(v)p(w) = s(v')p(w')";
      }
      if (clause.empty()) {
        report.record_pass();
        continue;
      }
      const auto alphabet = covering({&u, &v, &w, &v2, &w2});
      Json wit;
      wit["check"] = report.name;
      const Json names = alphabet_json(alphabet);
      for (const auto& [k, val] : names.items()) wit[k] = val;
      wit["u"] = format_word(alphabet, u);
      wit["n"] = n;
      wit["v"] = format_word(alphabet, v);
      wit["w"] = format_word(alphabet, w);
      wit["v2"] = format_word(alphabet, v2);
      wit["w2"] = format_word(alphabet, w2);
      report.record_failure("violates " + clause, std::move(wit));
    }
  }
  return report;
}

Word select_suffix_maximal(const AlgebraElement& a, const Word& x0, bool same_prefix) {
  const auto p0 = prefix(x0);
  std::optional<Word> best;
  for (const auto& w : support_in_class(a, x0)) {
    if (same_prefix && prefix(w) != p0) continue;
    if (!best || compare(suffix(w), suffix(*best)) > 0) best = w;
  }
  if (!best) throw std::invalid_argument("x0 is not in the support");
  return *best;
}

Word select_prefix_maximal(const AlgebraElement& b, const Word& y0, bool same_suffix) {
  const auto s0 = suffix(y0);
  std::optional<Word> best;
  for (const auto& w : support_in_class(b, y0)) {
    if (same_suffix && suffix(w) != s0) continue;
    if (!best || compare(prefix(w), prefix(*best)) > 0) best = w;
  }
  if (!best) throw std::invalid_argument("y0 is not in the support");
  return *best;
}

CheckReport check_product_support(const AlgebraElement& a, const AlgebraElement& b, const Word& x,
                                  const Word& y, const CheckHooks& hooks) {
  CheckReport report{.name = "product-support"};
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero() || !is_homogeneous(a) || !is_homogeneous(b) ||
      a.coefficient(x).is_zero() || b.coefficient(y).is_zero()) {
    report.record_not_applicable();
    return report;
  }
  // Condition on x: s(x) maximal over its class, or (x non-pure) over the
  // class members sharing its prefix.
  const auto class_x = support_in_class(a, x);
  std::vector<Word> all_s;
  std::vector<Word> same_p_s;
  for (const auto& w : class_x) {
    all_s.push_back(suffix(w));
    if (prefix(w) == prefix(x)) same_p_s.push_back(suffix(w));
  }
  const bool cond_x = maximal_in(suffix(x), all_s) || (!x.is_pure() && maximal_in(suffix(x), same_p_s));

  const auto class_y = support_in_class(b, y);
  std::vector<Word> all_p;
  std::vector<Word> same_s_p;
  for (const auto& w : class_y) {
    all_p.push_back(prefix(w));
    if (suffix(w) == suffix(y)) same_s_p.push_back(prefix(w));
  }
  const bool cond_y = maximal_in(prefix(y), all_p) || (!y.is_pure() && maximal_in(prefix(y), same_s_p));

  if (!cond_x || !cond_y) {
    report.record_not_applicable();
    return report;
  }
  const auto ab = hooks.product(a, b);
  const auto xy = concat(x, y);
  if (!ab.coefficient(xy).is_zero()) {
    report.record_pass();
    return report;
  }
  Json wit = witness(report.name, a);
  wit["a"] = format_element(a);
  wit["b"] = format_element(b);
  wit["x"] = format_word(a.alphabet(), x);
  wit["y"] = format_word(a.alphabet(), y);
  wit["ab"] = format_element(ab);
  report.record_failure("xy is missing from supp ab", std::move(wit));
  return report;
}

CheckReport check_prefix_suffix_transfer(const AlgebraElement& a, const AlgebraElement& b,
                                         const Word& v0, const CheckHooks& hooks) {
  CheckReport report{.name = "prefix-suffix-transfer"};
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero() || !is_homogeneous(a) || !is_homogeneous(b) || !same_degree(a, b) ||
      a.coefficient(v0).is_zero() || v0.is_pure() || !commutes(a, b)) {
    report.record_not_applicable();
    return report;
  }
  const auto class_a = support_in_class(a, v0);
  const auto class_b = hooks.class_support_second(b, v0);

  Json wit = witness(report.name, a);
  wit["a"] = format_element(a);
  wit["b"] = format_element(b);
  wit["v0"] = format_word(a.alphabet(), v0);
  wit["supp_v0_a"] = word_list(a.alphabet(), class_a);
  wit["supp_v0_b"] = word_list(a.alphabet(), class_b);

  if (class_b.empty()) {
    report.record_failure("supp_v0 b is empty", std::move(wit));
  } else if (prefixes(class_a) != prefixes(class_b)) {
    report.record_failure("prefix sets differ", std::move(wit));
  } else if (suffixes(class_a) != suffixes(class_b)) {
    report.record_failure("suffix sets differ", std::move(wit));
  } else {
    report.record_pass();
  }
  return report;
}

std::optional<FieldValue> proportionality_factor(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  if (rhs.is_zero()) throw std::invalid_argument("proportionality against zero");
  lhs.require_compatible(rhs);
  std::vector<Word> words;
  for (const auto& [w, c] : rhs.terms()) words.push_back(w);
  const auto phi = max_word(words);
  const auto lambda = lhs.coefficient(phi) / rhs.coefficient(phi);
  if (lhs == rhs * lambda) return lambda;
  return std::nullopt;
}

CheckReport check_leading_proportionality(const AlgebraElement& a, const AlgebraElement& b,
                                          const CheckHooks& hooks) {
  CheckReport report{.name = "leading-proportionality"};
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero() || !same_degree(a, b)) {
    report.record_not_applicable();
    return report;
  }
  const auto pa = purity_flags(a);
  const auto pb = purity_flags(b);
  const bool not_top_pure = !pa.top_pure || !pb.top_pure;
  const bool top_pure_branch = pa.top_pure && pb.top_pure && !pb.pure;
  if ((!not_top_pure && !top_pure_branch) || !commutes(a, b)) {
    report.record_not_applicable();
    return report;
  }
  const auto ta = leading_data(a).leading_term;
  const auto tb = hooks.leading_term_second(b);
  if (!tb.is_zero() && proportionality_factor(ta, tb)) {
    report.record_pass();
    return report;
  }
  Json wit = witness(report.name, a);
  wit["a"] = format_element(a);
  wit["b"] = format_element(b);
  wit["leading_a"] = format_element(ta);
  wit["leading_b"] = format_element(tb);
  report.record_failure("leading terms are not proportional", std::move(wit));
  return report;
}

CheckReport check_purity_profile(const AlgebraElement& a, const AlgebraElement& b, const CheckHooks& hooks) {
  CheckReport report{.name = "purity-profile"};
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero() || !same_degree(a, b)) {
    report.record_not_applicable();
    return report;
  }
  const auto pa = purity_flags(a);
  const auto pb = purity_flags(b);
  if (!pa.top_pure || !pb.top_pure || pb.pure || !commutes(a, b)) {
    report.record_not_applicable();
    return report;
  }
  Json wit = witness(report.name, a);
  wit["a"] = format_element(a);
  wit["b"] = format_element(b);

  if (pa.pure) {
    report.record_failure("a is pure", std::move(wit));
    return report;
  }
  const std::size_t ell = *pb.impure_degrees.rbegin();
  wit["ell"] = ell;
  if (pa.is_m_pure(ell)) {
    report.record_failure("a is ell-pure", std::move(wit));
    return report;
  }
  const auto d = *total_degree(a);
  for (std::size_t m = ell + 1; m <= d; ++m) {
    if (!pa.is_m_pure(m)) {
      wit["m"] = m;
      report.record_failure("a is not m-pure above ell", std::move(wit));
      return report;
    }
  }
  for (const auto& [w, c] : b.terms()) {
    if (w.length() != ell || w.is_pure()) continue;
    const auto class_a = support_in_class(a, w);
    const auto class_b = hooks.class_support_second(b, w);
    if (prefixes(class_a) != prefixes(class_b)) {
      wit["w"] = format_word(a.alphabet(), w);
      wit["supp_w_a"] = word_list(a.alphabet(), class_a);
      wit["supp_w_b"] = word_list(a.alphabet(), class_b);
      report.record_failure("prefix sets of supp_w a and supp_w b differ", std::move(wit));
      return report;
    }
  }
  report.record_pass();
  return report;
}

CheckReport check_commutant_proportionality(const AlgebraElement& a, const CheckHooks& hooks) {
  CheckReport report{.name = "commutant-proportionality"};
  if (a.is_zero() || !is_homogeneous(a) || purity_flags(a).pure) {
    report.record_not_applicable();
    return report;
  }
  const auto basis = hooks.commutant(a, *total_degree(a));
  if (basis.size() == 1) {
    if (auto lambda = proportionality_factor(basis.front(), a); lambda && !lambda->is_zero()) {
      report.record_pass();
      return report;
    }
  }
  Json wit = witness(report.name, a);
  wit["a"] = format_element(a);
  Json list = Json::array();
  for (const auto& e : basis) list.push_back(format_element(e));
  wit["commutant"] = std::move(list);
  report.record_failure("commutant is not span(a)", std::move(wit));
  return report;
}

std::pair<std::size_t, std::size_t> matching_powers(std::size_t degree_a, std::size_t degree_u) {
  const auto g = std::gcd(degree_a, degree_u);
  if (g == 0) throw std::invalid_argument("matching powers need a positive degree");
  return {degree_u / g, degree_a / g};
}

CheckReport check_theorem(const AlgebraElement& u, std::size_t max_degree, const CheckHooks& hooks) {
  if (u.is_zero() || is_scalar(u)) throw std::invalid_argument("theorem check requires a nonscalar element");
  CheckReport report{.name = "theorem"};
  const auto gb = hooks.centralizer(u, max_degree);
  auto base = [&] {
    Json wit = witness(report.name, u);
    wit["u"] = format_element(u);
    wit["max_degree"] = max_degree;
    return wit;
  };
  const auto& elems = gb.cumulative;

  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!commutes(elems[i], u)) {
      auto wit = base();
      wit["a"] = format_element(elems[i]);
      report.record_failure("basis element does not commute with u", std::move(wit));
    } else {
      report.record_pass();
    }
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (commutes(elems[i], elems[j])) {
        report.record_pass();
        continue;
      }
      auto wit = base();
      wit["a"] = format_element(elems[i]);
      wit["b"] = format_element(elems[j]);
      report.record_failure("centralizer basis is not commutative", std::move(wit));
    }
  }

  const auto pu = purity_flags(u);
  if (!pu.pure) {
    for (const auto& slice : gb.per_degree) {
      if (slice.dim_gr <= 1) {
        report.record_pass();
        continue;
      }
      auto wit = base();
      wit["degree"] = slice.degree;
      wit["dim_gr"] = slice.dim_gr;
      report.record_failure("graded component of dimension > 1", std::move(wit));
    }
  } else {
    const auto pure_count = words_up_to(Alphabet::standard(0, u.alphabet().commuting_count()), max_degree);
    const bool all_pure = std::all_of(elems.begin(), elems.end(),
                                      [](const AlgebraElement& e) { return purity_flags(e).pure; });
    if (all_pure && elems.size() == pure_count) {
      report.record_pass();
    } else {
      auto wit = base();
      wit["basis_size"] = elems.size();
      wit["pure_words"] = pure_count;
      report.record_failure("centralizer of a pure element is not the pure subalgebra", std::move(wit));
    }
  }

  // c-normalized elements with the same one-dimensional leading component
  // share their leading word.
  for (const auto& slice : gb.per_degree) {
    if (slice.dim_gr != 1 || slice.degree == 0) continue;
    const auto& a = slice.new_elements.front();
    AlgebraElement b = a;
    for (const auto& e : lower_than(gb, slice.degree)) b += e;
    const auto la = leading_data(a);
    const auto lb = leading_data(b);
    if (la.phi == lb.phi && la.c.is_one() && lb.c.is_one()) {
      report.record_pass();
    } else {
      auto wit = base();
      wit["a"] = format_element(a);
      wit["b"] = format_element(b);
      report.record_failure("phi(a) != phi(b) for c-normalized equal-degree elements", std::move(wit));
    }
  }

  // Power matching: a^p and u^q share a degree and have proportional leading
  // terms. Skipped (not applicable) when the powers would be too large.
  if (!pu.pure) {
    constexpr double kMaxTerms = 20000;
    const auto du = *total_degree(u);
    for (const auto& slice : gb.per_degree) {
      if (slice.degree == 0) continue;
      for (const auto& a : slice.new_elements) {
        const auto [p, q] = matching_powers(slice.degree, du);
        if (std::pow(static_cast<double>(a.term_count()), static_cast<double>(p)) > kMaxTerms ||
            std::pow(static_cast<double>(u.term_count()), static_cast<double>(q)) > kMaxTerms) {
          report.record_not_applicable();
          continue;
        }
        const auto ap = power(a, p);
        const auto uq = power(u, q);
        if (total_degree(ap) != total_degree(uq)) {
          auto wit = base();
          wit["a"] = format_element(a);
          wit["p"] = p;
          wit["q"] = q;
          report.record_failure("d(a^p) != d(u^q)", std::move(wit));
          continue;
        }
        report.absorb(check_leading_proportionality(ap, uq, hooks));
      }
    }
  }
  return report;
}

CheckReport replay(const Failure& failure, const CheckHooks& hooks) {
  const auto& w = failure.witness;
  const std::string check = w.at("check");
  const Alphabet alphabet(w.at("commuting").get<std::vector<std::string>>(),
                          w.at("noncommuting").get<std::vector<std::string>>());
  const auto field = FieldSpec::parse(w.contains("field") ? w.at("field").get<std::string>() : "q");
  auto elem = [&](const char* key) { return parse_element(alphabet, field, w.at(key).get<std::string>()); };
  auto word = [&](const char* key) { return parse_word(alphabet, w.at(key).get<std::string>()); };

  if (check == "factorization-lemma") return check_factorization_lemma(word("u"), w.at("n"), hooks);
  if (check == "product-support") return check_product_support(elem("a"), elem("b"), word("x"), word("y"), hooks);
  if (check == "prefix-suffix-transfer") return check_prefix_suffix_transfer(elem("a"), elem("b"), word("v0"), hooks);
  if (check == "leading-proportionality") return check_leading_proportionality(elem("a"), elem("b"), hooks);
  if (check == "purity-profile") return check_purity_profile(elem("a"), elem("b"), hooks);
  if (check == "commutant-proportionality") return check_commutant_proportionality(elem("a"), hooks);
  if (check == "theorem") return check_theorem(elem("u"), w.at("max_degree"), hooks);
  if (check == "degree-additivity") return degree_additivity_check(elem("a"), elem("b"), hooks.product);
  if (check == "pairwise-commutes") {
    CheckReport report{.name = check};
    if (commutes(elem("a"), elem("b"))) {
      report.record_pass();
    } else {
      report.record_failure("basis elements do not commute", w);
    }
    return report;
  }
  throw std::invalid_argument("no replay for check '" + check + "'");
}

// ---------------------------------------------------------------------------
// Campaigns

CheckReport run_factorization_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "factorization-lemma"};
  const auto alphabet = cfg.alphabet();
  for (std::size_t len = 0; len <= cfg.max_length; ++len) {
    for (const auto& u : enumerate_words(alphabet, len)) {
      for (std::size_t n = 0; n <= len; ++n) report.absorb(check_factorization_lemma(u, n, hooks));
    }
  }
  return report;
}

namespace {

// Every nonzero homogeneous degree-1 pair over GF(2) and every (x, y).
void exhaustive_product_support(const TrialConfig& cfg, const CheckHooks& hooks, CheckReport& report) {
  const auto alphabet = cfg.alphabet();
  const auto words = enumerate_words(alphabet, 1);
  const std::size_t subsets = std::size_t{1} << words.size();
  std::vector<AlgebraElement> elems;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    AlgebraElement a(alphabet, cfg.field);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (mask >> i & 1) a.add_term(words[i], FieldValue::one(cfg.field));
    }
    elems.push_back(std::move(a));
  }
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& [x, cx] : a.terms()) {
        for (const auto& [y, cy] : b.terms()) report.absorb(check_product_support(a, b, x, y, hooks));
      }
    }
  }
}

}  // namespace

CheckReport run_product_support_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "product-support"};
  const auto alphabet = cfg.alphabet();
  if (cfg.field == FieldSpec::prime(2) && alphabet.size() > 0 && alphabet.size() <= 4) {
    exhaustive_product_support(cfg, hooks, report);
  }
  if (alphabet.size() == 0 || cfg.max_length == 0) return report;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    const auto da = uniform(rng, 1, cfg.max_length);
    const auto db = uniform(rng, 1, cfg.max_length);
    const auto na = uniform(rng, 1, std::min<std::size_t>(6, count_words(alphabet, da)));
    const auto nb = uniform(rng, 1, std::min<std::size_t>(6, count_words(alphabet, db)));
    const auto a = random_element(cfg, da, na, ElementShape::homogeneous, derive_seed(seed, 1));
    const auto b = random_element(cfg, db, nb, ElementShape::homogeneous, derive_seed(seed, 2));
    const auto x0 = pick(rng, support(a));
    const auto y0 = pick(rng, support(b));
    const bool restrict_x = !x0.is_pure() && uniform(rng, 0, 1);
    const bool restrict_y = !y0.is_pure() && uniform(rng, 0, 1);
    const auto x = select_suffix_maximal(a, x0, restrict_x);
    const auto y = select_prefix_maximal(b, y0, restrict_y);
    report.absorb(check_product_support(a, b, x, y, hooks));
  }
  return report;
}

CheckReport run_transfer_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "prefix-suffix-transfer"};
  const auto alphabet = cfg.alphabet();
  if (alphabet.noncommuting_count() == 0 || cfg.max_length == 0) return report;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    const auto d = uniform(rng, 1, std::min<std::size_t>(cfg.max_length, 4));
    const auto density = uniform(rng, 1, std::min<std::size_t>(4, count_words(alphabet, d)));
    const auto a = random_impure_homogeneous(cfg, d, density, derive_seed(seed, 1));
    // Genuinely commuting partners come from the commutant itself.
    const auto b = random_combination(homogeneous_commutant(a, d), rng);
    std::vector<Word> impure;
    for (const auto& [w, c] : a.terms()) {
      if (!w.is_pure()) impure.push_back(w);
    }
    report.absorb(check_prefix_suffix_transfer(a, b, pick(rng, impure), hooks));
  }
  return report;
}

CheckReport run_proportionality_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "leading-proportionality"};
  const auto alphabet = cfg.alphabet();
  if (alphabet.noncommuting_count() == 0 || cfg.element_degree == 0) return report;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    const auto d = uniform(rng, 1, cfg.element_degree);
    const bool top_pure = d >= 2 && alphabet.commuting_count() > 0 && uniform(rng, 0, 2) == 0;
    const auto u = random_impure(cfg, d, top_pure, derive_seed(seed, 1));
    const auto gb = centralizer_basis(u, cfg.max_length);
    for (const auto& slice : gb.per_degree) {
      for (const auto& e : slice.new_elements) {
        auto b = e * random_scalar(cfg.field, rng);
        const auto lower = lower_than(gb, slice.degree);
        if (!lower.empty()) b += random_combination(lower, rng);
        report.absorb(check_leading_proportionality(e, b, hooks));
      }
    }
    const auto du = *total_degree(u);
    for (std::size_t k = 1; k * du <= cfg.max_length; ++k) {
      const auto& slice = gb.per_degree[k * du];
      if (slice.new_elements.empty()) continue;
      report.absorb(check_leading_proportionality(power(u, k), slice.new_elements.front(), hooks));
    }
  }
  return report;
}

CheckReport run_purity_profile_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "purity-profile"};

  // Exhaustive: every nonzero element over GF(2) supported on words of length
  // ≤ 2 in one noncommuting and one commuting variable.
  {
    const auto alphabet = Alphabet::standard(1, 1);
    const auto gf2 = FieldSpec::prime(2);
    std::vector<Word> words;
    for (std::size_t n = 0; n <= 2; ++n) {
      auto stratum = enumerate_words(alphabet, n);
      words.insert(words.end(), stratum.begin(), stratum.end());
    }
    std::vector<AlgebraElement> elems;
    for (std::size_t mask = 1; mask < (std::size_t{1} << words.size()); ++mask) {
      AlgebraElement a(alphabet, gf2);
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (mask >> i & 1) a.add_term(words[i], FieldValue::one(gf2));
      }
      elems.push_back(std::move(a));
    }
    for (const auto& a : elems) {
      const auto pa = purity_flags(a);
      if (!pa.top_pure) continue;
      for (const auto& b : elems) {
        const auto pb = purity_flags(b);
        if (!pb.top_pure || pb.pure || !same_degree(a, b)) continue;
        if (!commutes(a, b)) continue;
        report.absorb(check_purity_profile(a, b, hooks));
      }
    }
  }

  // Harvested: equal-degree elements of the centralizer of a random top-pure,
  // non-pure u.
  const auto alphabet = cfg.alphabet();
  if (alphabet.noncommuting_count() == 0 || alphabet.commuting_count() == 0 || cfg.element_degree < 2) {
    return report;
  }
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    const auto d = uniform(rng, 2, cfg.element_degree);
    const auto u = random_impure(cfg, d, true, derive_seed(seed, 1));
    const auto gb = centralizer_basis(u, cfg.max_length);
    for (const auto& slice : gb.per_degree) {
      for (const auto& e : slice.new_elements) {
        auto b = e * random_scalar(cfg.field, rng);
        const auto lower = lower_than(gb, slice.degree);
        if (!lower.empty()) b += random_combination(lower, rng);
        report.absorb(check_purity_profile(b, e, hooks));
      }
    }
    report.absorb(check_purity_profile(u, u, hooks));
  }
  return report;
}

CheckReport run_commutant_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "commutant-proportionality"};
  const auto alphabet = cfg.alphabet();
  if (alphabet.noncommuting_count() == 0 || cfg.max_length == 0) return report;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    const auto d = uniform(rng, 1, std::min<std::size_t>(cfg.max_length, 4));
    const auto density = uniform(rng, 1, std::min<std::size_t>(4, count_words(alphabet, d)));
    const auto a = random_impure_homogeneous(cfg, d, density, derive_seed(seed, 1));
    report.absorb(check_commutant_proportionality(a, hooks));
  }
  return report;
}

CheckReport run_degree_additivity_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "degree-additivity"};
  const auto alphabet = cfg.alphabet();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    const auto da = alphabet.size() == 0 ? 0 : uniform(rng, 0, cfg.element_degree);
    const auto db = alphabet.size() == 0 ? 0 : uniform(rng, 0, cfg.element_degree);
    const auto a = random_element(cfg, da, uniform(rng, 1, std::min<std::size_t>(4, words_up_to(alphabet, da))),
                                  ElementShape::up_to_degree, derive_seed(seed, 1));
    const auto b = random_element(cfg, db, uniform(rng, 1, std::min<std::size_t>(4, words_up_to(alphabet, db))),
                                  ElementShape::up_to_degree, derive_seed(seed, 2));
    report.absorb(degree_additivity_check(a, b, hooks.product));
  }
  return report;
}

CheckReport run_theorem_campaign(const TrialConfig& cfg, const CheckHooks& hooks) {
  cfg.validate();
  CheckReport report{.name = "theorem"};
  if (cfg.nx + cfg.ny == 0 || cfg.element_degree == 0) return report;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto seed = derive_seed(cfg.seed, t);
    Rng rng(seed);
    std::size_t nx = 0;
    std::size_t ny = 0;
    while (nx + ny == 0) {
      nx = uniform(rng, 0, cfg.nx);
      ny = uniform(rng, 0, cfg.ny);
    }
    const auto sub = with_sizes(cfg, nx, ny);
    const bool pure = nx == 0 || (ny > 0 && uniform(rng, 0, 3) == 0);
    const auto d = uniform(rng, 1, cfg.element_degree);
    const auto source = pure ? Alphabet::standard(0, ny) : sub.alphabet();
    const auto density = uniform(rng, 1, std::min<std::size_t>(4, words_up_to(source, d)));
    const auto u = random_element(sub, d, density, ElementShape::up_to_degree, derive_seed(seed, 1), pure);
    report.absorb(check_theorem(u, cfg.max_length, hooks));
  }
  return report;
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{
      "factorization", "product-support", "transfer",          "proportionality",
      "purity-profile", "commutant",      "degree-additivity", "theorem"};
  return names;
}

CheckReport run_campaign(const std::string& name, const TrialConfig& cfg, const CheckHooks& hooks) {
  if (name == "factorization") return run_factorization_campaign(cfg, hooks);
  if (name == "product-support") return run_product_support_campaign(cfg, hooks);
  if (name == "transfer") return run_transfer_campaign(cfg, hooks);
  if (name == "proportionality") return run_proportionality_campaign(cfg, hooks);
  if (name == "purity-profile") return run_purity_profile_campaign(cfg, hooks);
  if (name == "commutant") return run_commutant_campaign(cfg, hooks);
  if (name == "degree-additivity") return run_degree_additivity_campaign(cfg, hooks);
  if (name == "theorem") return run_theorem_campaign(cfg, hooks);
  throw std::invalid_argument("unknown lemma '" + name + "'");
}

}  // namespace coprod::verify
