#include "coprod/verify.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace coprod::verify;

namespace {

const Alphabet kXY = Alphabet({"y1", "y2"}, {"x"});

AlgebraElement XY(const std::string& text) { return E(text, FieldSpec::rationals(), kXY); }

TrialConfig small_config(FieldSpec field, std::uint64_t seed = 1) {
  TrialConfig cfg;
  cfg.field = field;
  cfg.max_length = 3;
  cfg.element_degree = 2;
  cfg.trials = 15;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("generators") {
  TrialConfig cfg;
  CHECK(verify::random_word(cfg, 0, 5) == Word{});
  CHECK(verify::random_word(cfg, 6, 5) == verify::random_word(cfg, 6, 5));
  CHECK(verify::random_word(cfg, 6, 5).length() == 6);

  const auto h = verify::random_element(cfg, 3, 5, ElementShape::homogeneous, 9);
  CHECK(h == verify::random_element(cfg, 3, 5, ElementShape::homogeneous, 9));
  CHECK(h.term_count() == 5);
  for (const auto& [w, c] : h.terms()) CHECK(w.length() == 3);

  const auto g = verify::random_element(cfg, 3, 6, ElementShape::up_to_degree, 9);
  CHECK(total_degree(g) == 3u);
  CHECK(g.term_count() == 6);

  const auto p = verify::random_element(cfg, 2, 3, ElementShape::homogeneous, 2, true);
  CHECK(purity_flags(p).pure);

  // 15 words of length 2 over 2 + 2 letters; 3 pure words of length 2.
  CHECK_NOTHROW(verify::random_element(cfg, 2, 15, ElementShape::homogeneous, 1));
  CHECK_THROWS_AS(verify::random_element(cfg, 2, 16, ElementShape::homogeneous, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify::random_element(cfg, 2, 4, ElementShape::homogeneous, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(verify::random_element(cfg, 2, 0, ElementShape::homogeneous, 1), std::invalid_argument);

  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("trial config validation") {
  TrialConfig cfg;
  cfg.nx = 5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.nx = 2;
  cfg.max_length = 6;
  cfg.enumeration_cap = 100;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.enumeration_cap = 1'000'000;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("factorization lemma checker") {
  const auto r = check_factorization_lemma(W("x1*y1*y2*x1"), 2);
  CHECK(r.ok());
  CHECK(r.trials == 3);
  const auto single = check_factorization_lemma(W("y1*x1*y2"), 2);
  CHECK(single.ok());
  CHECK(single.trials == 1);
  CHECK(check_factorization_lemma(W("y1^2*y2"), 1).ok());
  CHECK_THROWS_AS(check_factorization_lemma(W("x1"), 2), std::out_of_range);

  const auto bad = check_factorization_lemma(W("x1*y1*y2*x1"), 2, CheckHooks::corrupted());
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
  CHECK(replay(bad.failures.front()).ok());
}

TEST_CASE("product support checker") {
  const auto a = XY("x*y1 + x*y2");
  const auto b = XY("y1*x - y2*x");
  const auto r = check_product_support(a, b, W("x*y1", kXY), W("y1*x", kXY));
  CHECK(r.ok());
  CHECK(r.passed == 1);
  CHECK(check_product_support(XY("x"), XY("x"), W("x", kXY), W("x", kXY)).passed == 1);

  // x*y2 has neither a maximal suffix nor a maximal suffix among equal prefixes.
  CHECK(check_product_support(a, b, W("x*y2", kXY), W("y1*x", kXY)).not_applicable == 1);
  CHECK(check_product_support(a, b, W("x*y1", kXY), W("x*y1", kXY)).not_applicable == 1);
  CHECK(check_product_support(a + XY("1"), b, W("x*y1", kXY), W("y1*x", kXY)).not_applicable == 1);

  CHECK(select_suffix_maximal(a, W("x*y2", kXY), false) == W("x*y1", kXY));
  CHECK(select_prefix_maximal(b, W("y2*x", kXY), true) == W("y1*x", kXY));

  const auto bad = check_product_support(a, b, W("x*y1", kXY), W("y1*x", kXY), CheckHooks::corrupted());
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failures.front().witness.at("x") == "x*y1");
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
}

TEST_CASE("prefix/suffix transfer checker") {
  const auto a = XY("x*y1 + x*y2");
  CHECK(check_prefix_suffix_transfer(a, a, W("x*y1", kXY)).passed == 1);
  CHECK(check_prefix_suffix_transfer(a, a * Q(-3, 2), W("x*y2", kXY)).passed == 1);
  CHECK(check_prefix_suffix_transfer(a, XY("y1*x"), W("x*y1", kXY)).not_applicable == 1);
  CHECK(check_prefix_suffix_transfer(XY("y1^2"), XY("y1^2"), W("y1^2", kXY)).not_applicable == 1);
  const auto bad = check_prefix_suffix_transfer(a, a, W("x*y1", kXY), CheckHooks::corrupted());
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
}

TEST_CASE("leading proportionality checker") {
  const auto u = E("x1 + y1");
  const auto a = power(u, 2);
  const auto b = power(u, 2) * Q(2);
  CHECK(check_leading_proportionality(a, b).passed == 1);
  CHECK(proportionality_factor(leading_data(a).leading_term, leading_data(b).leading_term) == Q(1, 2));
  const auto t = E("y1^2 + x1");
  CHECK(check_leading_proportionality(t, t).passed == 1);
  CHECK(check_leading_proportionality(E("y1"), E("y2")).not_applicable == 1);
  CHECK(check_leading_proportionality(E("x1"), E("y1")).not_applicable == 1);
  CHECK(check_leading_proportionality(E("x1"), E("x1^2")).not_applicable == 1);
  CHECK_FALSE(proportionality_factor(E("x1 + y1"), E("x1")).has_value());
  CHECK_THROWS_AS(proportionality_factor(E("x1"), E("0")), std::invalid_argument);

  const auto bad = check_leading_proportionality(a, b, CheckHooks::corrupted());
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
}

TEST_CASE("purity profile checker") {
  const auto t = E("y1^2 + x1");
  const auto r = check_purity_profile(t, t);
  CHECK(r.passed == 1);
  const auto s = E("y1^3 + y1*x1 + x1*y1");
  CHECK(check_purity_profile(s, s).passed == 1);
  CHECK(check_purity_profile(t * Q(3) + E("2"), t).passed == 1);
  CHECK(check_purity_profile(E("x1*y1"), E("x1*y1")).not_applicable == 1);
  CHECK(check_purity_profile(E("y1"), E("y1")).not_applicable == 1);

  const auto bad = check_purity_profile(s, s, CheckHooks::corrupted());
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
  CHECK(replay(bad.failures.front()).ok());
}

TEST_CASE("commutant proportionality checker") {
  CHECK(check_commutant_proportionality(XY("x*y1 + x*y2")).passed == 1);
  CHECK(check_commutant_proportionality(E("x1*y1 - 2*y2*x2")).passed == 1);
  CHECK(check_commutant_proportionality(E("y1*y2")).not_applicable == 1);
  CHECK(check_commutant_proportionality(E("x1 + y1^2")).not_applicable == 1);
  const auto bad = check_commutant_proportionality(XY("x*y1 + x*y2"), CheckHooks::corrupted());
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
}

TEST_CASE("matching powers") {
  CHECK(matching_powers(2, 3) == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(matching_powers(4, 2) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(matching_powers(5, 5) == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("theorem checker") {
  const auto rx = check_theorem(E("x1"), 4);
  CHECK(rx.ok());
  CHECK(rx.passed > 0);
  const auto y2 = Alphabet::standard(0, 2);
  CHECK(check_theorem(E("y1", FieldSpec::rationals(), y2), 3).ok());
  CHECK(check_theorem(E("x1*y1 + y2*x2 + x1", FieldSpec::prime(2)), 4).ok());
  CHECK_THROWS_AS(check_theorem(E("2"), 3), std::invalid_argument);

  const auto bad = check_theorem(E("x1"), 3, CheckHooks::corrupted());
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(replay(bad.failures.front(), CheckHooks::corrupted()).ok());
  const auto bad_pure = check_theorem(E("y1", FieldSpec::rationals(), y2), 3, CheckHooks::corrupted());
  CHECK_FALSE(bad_pure.ok());
}

TEST_CASE("campaigns pass and are deterministic") {
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    const auto cfg = small_config(f);
    for (const auto& name : campaign_names()) {
      CAPTURE(name);
      CAPTURE(f.to_string());
      const auto r = run_campaign(name, cfg);
      CHECK(r.ok());
      CHECK(r.passed > 0);
      CHECK(r.to_json() == run_campaign(name, cfg).to_json());
    }
  }
  CHECK_THROWS_AS(run_campaign("nonsense", small_config(FieldSpec::rationals())), std::invalid_argument);
}

TEST_CASE("GF(2) product support sweep is exhaustive") {
  auto cfg = small_config(FieldSpec::prime(2));
  cfg.trials = 0;
  // 15 nonzero elements on 4 degree-1 words; Σ |supp a|·|supp b| = 32².
  CHECK(run_product_support_campaign(cfg).trials == 32 * 32);
}

TEST_CASE("every campaign fails under corrupted hooks and its witnesses replay") {
  const auto cfg = small_config(FieldSpec::prime(3), 7);
  const auto corrupted = CheckHooks::corrupted();
  for (const auto& name : campaign_names()) {
    CAPTURE(name);
    const auto r = run_campaign(name, cfg, corrupted);
    REQUIRE_FALSE(r.ok());
    for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i) {
      CHECK_FALSE(replay(r.failures[i], corrupted).ok());
    }
  }
}
