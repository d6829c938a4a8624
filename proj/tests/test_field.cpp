#include "helpers.hpp"

using namespace testing;

TEST_CASE("field examples") {
  CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
  const auto gf3 = FieldSpec::prime(3);
  CHECK(FieldValue::from_integer(gf3, 2) * FieldValue::from_integer(gf3, 2) == FieldValue::one(gf3));
  CHECK_THROWS_AS(FieldValue::zero(gf3).inverse(), std::domain_error);
  CHECK_THROWS_AS(Q(0).inverse(), std::domain_error);
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("gf:7") == FieldSpec::prime(7));
  CHECK(FieldSpec::prime(7).to_string() == "gf:7");
  CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647u);
  for (const char* bad : {"gf:4", "gf:1", "gf:", "gf:x", "r", "gf:-3", "gf:2147483659"}) {
    CHECK_THROWS_AS(FieldSpec::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("prime field axioms hold exhaustively") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto f = FieldSpec::prime(p);
    std::vector<FieldValue> all;
    for (std::uint32_t i = 0; i < p; ++i) all.push_back(FieldValue::from_integer(f, i));
    for (const auto& a : all) {
      CHECK(a + FieldValue::zero(f) == a);
      CHECK(a * FieldValue::one(f) == a);
      CHECK(a + -a == FieldValue::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldValue::one(f));
      for (const auto& b : all) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : all) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const mpq_class x(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    const mpq_class y(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    mpq_class xc = x;
    mpq_class yc = y;
    xc.canonicalize();
    yc.canonicalize();
    const auto a = FieldValue::from_rational(FieldSpec::rationals(), xc);
    const auto b = FieldValue::from_rational(FieldSpec::rationals(), yc);
    CHECK(*(a + b).as_rational() == xc + yc);
    CHECK(*(a * b).as_rational() == xc * yc);
    CHECK(*(a - b).as_rational() == xc - yc);
    if (yc != 0) CHECK(*(a / b).as_rational() == xc / yc);
  }
}

TEST_CASE("coefficient parsing and reduction") {
  const auto gf5 = FieldSpec::prime(5);
  CHECK(FieldValue::parse(FieldSpec::rationals(), "-6/4") == Q(-3, 2));
  CHECK(FieldValue::parse(FieldSpec::rationals(), "-6/4").to_string() == "-3/2");
  CHECK(FieldValue::parse(gf5, "7") == FieldValue::from_integer(gf5, 2));
  CHECK(FieldValue::parse(gf5, "-1") == FieldValue::from_integer(gf5, 4));
  CHECK(FieldValue::parse(gf5, "1/2") == FieldValue::from_integer(gf5, 3));
  CHECK(FieldValue::from_integer(gf5, -1).to_string() == "4");
  CHECK_THROWS_AS(FieldValue::parse(gf5, "1/5"), std::domain_error);
  CHECK_THROWS_AS(FieldValue::parse(FieldSpec::rationals(), "1/0"), std::domain_error);
  for (const char* bad : {"", "1/", "/2", "1/-2", "1.5", "--1", "a"}) {
    CHECK_THROWS_AS(FieldValue::parse(FieldSpec::rationals(), bad), std::invalid_argument);
  }
}

TEST_CASE("mixing fields is rejected") {
  const auto g3 = FieldValue::one(FieldSpec::prime(3));
  const auto g5 = FieldValue::one(FieldSpec::prime(5));
  CHECK_THROWS_AS(g3 + g5, std::invalid_argument);
  CHECK_THROWS_AS(g3 * Q(1), std::invalid_argument);
  CHECK(g3.belongs_to(FieldSpec::prime(3)));
  CHECK_FALSE(g3.belongs_to(FieldSpec::rationals()));
  CHECK(g5.field() == FieldSpec::prime(5));
}
