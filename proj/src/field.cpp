#include "coprod/field.hpp"

#include <charconv>
#include <stdexcept>

namespace coprod {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

[[noreturn]] void mixed_fields() { throw std::invalid_argument("operands from different fields"); }

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  FieldSpec spec;
  spec.kind_ = Kind::prime;
  spec.p_ = p;
  return spec;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("gf:")) {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
  }
  throw std::invalid_argument("field must be 'q' or 'gf:P', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "gf:" + std::to_string(p_) : "q";
}

FieldValue FieldValue::zero(const FieldSpec& field) { return from_integer(field, 0); }
FieldValue FieldValue::one(const FieldSpec& field) { return from_integer(field, 1); }

FieldValue FieldValue::from_integer(const FieldSpec& field, long value) {
  return from_rational(field, mpq_class(value));
}

FieldValue FieldValue::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (!field.is_prime()) {
    mpq_class v(value);
    v.canonicalize();
    return FieldValue(std::move(v));
  }
  const auto p = field.characteristic();
  const auto den = reduce(value.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes in " + field.to_string());
  const auto num = reduce(value.get_num(), p);
  const auto inv = pow_mod(den, p - 2, p);
  return FieldValue(Residue{static_cast<std::uint32_t>(std::uint64_t{num} * inv % p), p});
}

FieldValue FieldValue::parse(const FieldSpec& field, std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-') {
    throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  return from_rational(field, mpq_class(n, d));
}

FieldSpec FieldValue::field() const {
  FieldSpec spec;
  if (const auto* r = std::get_if<Residue>(&value_)) {
    spec.kind_ = FieldSpec::Kind::prime;
    spec.p_ = r->modulus;
  }
  return spec;
}

bool FieldValue::belongs_to(const FieldSpec& field) const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return field.is_prime() && field.p_ == r->modulus;
  return !field.is_prime();
}

bool FieldValue::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldValue::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool FieldValue::is_negative() const noexcept {
  const auto* q = std::get_if<mpq_class>(&value_);
  return q != nullptr && sgn(*q) < 0;
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldValue(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  return FieldValue(mpq_class(1) / std::get<mpq_class>(value_));
}

FieldValue& FieldValue::operator+=(const FieldValue& other) {
  if (value_.index() != other.value_.index()) mixed_fields();
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& o = std::get<Residue>(other.value_);
    if (r->modulus != o.modulus) mixed_fields();
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + o.value) % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& other) { return *this += -other; }

FieldValue& FieldValue::operator*=(const FieldValue& other) {
  if (value_.index() != other.value_.index()) mixed_fields();
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto& o = std::get<Residue>(other.value_);
    if (r->modulus != o.modulus) mixed_fields();
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * o.value % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& other) { return *this *= other.inverse(); }

FieldValue FieldValue::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldValue(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return FieldValue(mpq_class(-std::get<mpq_class>(value_)));
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.value_.index() != b.value_.index()) mixed_fields();
  if (const auto* r = std::get_if<FieldValue::Residue>(&a.value_)) {
    const auto& o = std::get<FieldValue::Residue>(b.value_);
    if (r->modulus != o.modulus) mixed_fields();
    return r->value == o.value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string FieldValue::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace coprod
