#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace coprod {

/// The coefficient field k: the rationals or a prime field GF(p), p < 2^31.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// "q" or "gf:P".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class FieldValue;

  Kind kind_ = Kind::rationals;
  std::uint32_t p_ = 0;
};

/// An exact scalar: a reduced rational or a residue in [0, p).
///
/// Values carry their field. Mixing fields in one operation throws
/// std::invalid_argument; inverting zero throws std::domain_error.
class FieldValue {
 public:
  /// Rational zero.
  FieldValue() = default;

  static FieldValue zero(const FieldSpec& field);
  static FieldValue one(const FieldSpec& field);
  static FieldValue from_integer(const FieldSpec& field, long value);
  static FieldValue from_rational(const FieldSpec& field, const mpq_class& value);
  /// "a" or "a/b" with optional leading '-'; residues are taken mod p.
  static FieldValue parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool belongs_to(const FieldSpec& field) const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  FieldValue inverse() const;

  FieldValue& operator+=(const FieldValue& other);
  FieldValue& operator-=(const FieldValue& other);
  FieldValue& operator*=(const FieldValue& other);
  FieldValue& operator/=(const FieldValue& other);

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }
  FieldValue operator-() const;

  friend bool operator==(const FieldValue& a, const FieldValue& b);

  /// "a", "-a/b", or the residue.
  std::string to_string() const;
  /// Residues are never negative.
  bool is_negative() const noexcept;

  const mpq_class* as_rational() const noexcept { return std::get_if<mpq_class>(&value_); }

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit FieldValue(mpq_class v) : value_(std::move(v)) {}
  explicit FieldValue(Residue r) : value_(r) {}

  std::variant<mpq_class, Residue> value_;
};

}  // namespace coprod
