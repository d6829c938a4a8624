#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coprod/centralizer.hpp"
#include "coprod/element.hpp"
#include "coprod/report.hpp"

// Executable forms of the support, factorization and proportionality lemmas
// and of the centralizer theorem, with seeded generators and campaigns.
namespace coprod::verify {

struct TrialConfig {
  std::size_t nx = 2;
  std::size_t ny = 2;
  FieldSpec field;
  /// Word length / degree bound (truncation degree for centralizers).
  std::size_t max_length = 4;
  /// Degree bound for randomly drawn elements.
  std::size_t element_degree = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Upper bound on the number of words any single enumeration may produce.
  std::size_t enumeration_cap = 1'000'000;

  Alphabet alphabet() const { return Alphabet::standard(nx, ny); }
  /// Throws std::invalid_argument when nx or ny exceeds 4 or an enumeration
  /// up to max_length would exceed the cap.
  void validate() const;
};

/// Independent per-trial seed derived from (master seed, trial index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class ElementShape { homogeneous, up_to_degree };

/// Random normalized letter sequence; deterministic per seed.
Word random_word(const TrialConfig& cfg, std::size_t length, std::uint64_t seed);

/// `density` distinct words with random nonzero coefficients. Homogeneous
/// elements use words of length exactly `degree`; the other shape draws from
/// lengths ≤ degree and always includes one word of length `degree`.
/// `pure_only` restricts to commuting letters. Throws std::invalid_argument
/// when fewer than `density` words are available.
AlgebraElement random_element(const TrialConfig& cfg, std::size_t degree, std::size_t density,
                              ElementShape shape, std::uint64_t seed, bool pure_only = false);

/// Replaceable conclusion-side computations. Hypotheses are always checked
/// with the genuine library functions; negative controls swap these out.
struct CheckHooks {
  std::function<std::vector<std::pair<Word, Word>>(const Word&, std::size_t)> factorizations =
      left_factorizations;
  ProductFn product = multiply;
  /// supp_w of the second element of a pair (b in the lemmas).
  std::function<std::set<Word>(const AlgebraElement&, const Word&)> class_support_second =
      support_in_class;
  /// Leading term of the second element of a pair.
  std::function<AlgebraElement(const AlgebraElement&)> leading_term_second =
      [](const AlgebraElement& a) { return leading_data(a).leading_term; };
  std::function<GradedBasis(const AlgebraElement&, std::size_t)> centralizer = centralizer_basis;
  std::function<std::vector<AlgebraElement>(const AlgebraElement&, std::size_t)> commutant =
      homogeneous_commutant;

  /// Each hook deliberately falsifies the conclusion it computes.
  static CheckHooks corrupted();
};

// Single-instance checkers. Each returns a report whose instances are pass,
// fail (with a replayable witness) or not applicable.

/// All pairs of factorizations of u at n: v∼v′ and w∼w′; p(v)=p(v′) for
/// non-pure v; s(w)=s(w′) for non-pure w; s(v)p(w)=s(v′)p(w′).
/// Throws std::out_of_range if n > |u|.
CheckReport check_factorization_lemma(const Word& u, std::size_t n, const CheckHooks& hooks = {});

/// xy ∈ supp ab, given the suffix/prefix maximality conditions on x and y.
CheckReport check_product_support(const AlgebraElement& a, const AlgebraElement& b, const Word& x,
                                  const Word& y, const CheckHooks& hooks = {});

/// An element of supp_{x0} a whose suffix is maximal, optionally among
/// those sharing x0's prefix (only meaningful for non-pure x0).
Word select_suffix_maximal(const AlgebraElement& a, const Word& x0, bool same_prefix);
/// Mirror image: maximal prefix, optionally among those sharing y0's suffix.
Word select_prefix_maximal(const AlgebraElement& b, const Word& y0, bool same_suffix);

/// For commuting homogeneous a, b of equal degree and non-pure v0 ∈ supp a:
/// supp_{v0} b ≠ ∅ and the prefix and suffix sets of the two classes agree.
CheckReport check_prefix_suffix_transfer(const AlgebraElement& a, const AlgebraElement& b,
                                         const Word& v0, const CheckHooks& hooks = {});

/// λ with lhs = λ·rhs, if one exists. rhs must be nonzero.
std::optional<FieldValue> proportionality_factor(const AlgebraElement& lhs, const AlgebraElement& rhs);

/// For commuting a, b of equal degree, not both pure: ā = λ b̄.
CheckReport check_leading_proportionality(const AlgebraElement& a, const AlgebraElement& b,
                                          const CheckHooks& hooks = {});

/// For commuting top-pure a, b of equal degree with b non-pure: a is
/// non-pure, ℓ (largest impure degree of b) is also a's largest impure degree,
/// and the prefix sets of supp_w a and supp_w b agree for every non-pure
/// w ∈ supp b of length ℓ.
CheckReport check_purity_profile(const AlgebraElement& a, const AlgebraElement& b,
                                 const CheckHooks& hooks = {});

/// For non-pure homogeneous a: its degree-d(a) commutant is exactly span(a).
CheckReport check_commutant_proportionality(const AlgebraElement& a, const CheckHooks& hooks = {});

/// Exponents p, q with p·d(a) = q·d(u): p = d(u)/g, q = d(a)/g, g = gcd.
std::pair<std::size_t, std::size_t> matching_powers(std::size_t degree_a, std::size_t degree_u);

/// Runs the centralizer to degree N and asserts: pairwise commutativity; for
/// non-pure u, dim (Gr C)_n ≤ 1 at every n; for pure u, the basis is exactly
/// the pure words; equal leading words for c-normalized elements of a
/// one-dimensional degree; and proportional leading terms of a^p and u^q.
/// Throws std::invalid_argument for scalar u.
CheckReport check_theorem(const AlgebraElement& u, std::size_t max_degree, const CheckHooks& hooks = {});

/// Re-runs the instance recorded in a failure witness.
CheckReport replay(const Failure& failure, const CheckHooks& hooks = {});

// Campaigns over a TrialConfig. Every campaign is deterministic in the config.

CheckReport run_factorization_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_product_support_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_transfer_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_proportionality_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_purity_profile_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_commutant_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_degree_additivity_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});
CheckReport run_theorem_campaign(const TrialConfig& cfg, const CheckHooks& hooks = {});

/// Campaign names accepted by run_campaign, in execution order.
const std::vector<std::string>& campaign_names();
/// Throws std::invalid_argument for an unknown name.
CheckReport run_campaign(const std::string& name, const TrialConfig& cfg, const CheckHooks& hooks = {});

}  // namespace coprod::verify
