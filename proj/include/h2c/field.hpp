#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace h2c {

enum class Errc {
  parse_error,
  division_by_zero,
  no_sqrt_minus_one,
  field_mismatch,
  dimension_mismatch,
  no_unit,
  not_idempotent,
  not_jordan,
  relation_failed,
  dependent_frame,
  bracket_escapes_component,
  bad_epsilon,
  wrong_convention,
  not_associative,
  not_involutive,
  missing_bracket_slot,
  invalid_input,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Stable PascalCase tag for reports and CLI output.
std::string errc_name(Errc c);

enum class FieldKind : std::uint8_t { rational, gaussian_rational, prime };

// Coefficient field descriptor. Characteristic 2 is rejected at construction.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;  // modulus, set iff kind == prime

  static FieldSpec rationals() { return {FieldKind::rational, 0}; }
  static FieldSpec gaussian_rationals() { return {FieldKind::gaussian_rational, 0}; }
  static FieldSpec prime(std::uint64_t p);  // p an odd prime, p <= 2^31

  bool has_sqrt_minus_one() const {
    return kind == FieldKind::gaussian_rational || (kind == FieldKind::prime && p % 4 == 1);
  }
  bool operator==(const FieldSpec&) const = default;

  std::string name() const;                       // "q", "qi", "gf13"
  static FieldSpec from_name(std::string_view);   // inverse of name()
};

// Exact field element. Rationals are reduced mpq fractions, Gaussian
// rationals a (re, im) pair of them, GF(p) values canonical residues in [0,p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(long v, const FieldSpec& f);
  // num/den as a field element (den inverted in GF(p)); den != 0.
  static Scalar fraction(long num, long den, const FieldSpec& f);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar residue(std::uint64_t r, const FieldSpec& f);  // r < p required

  // Canonical text form; parse(str()) == *this.
  static Scalar parse(std::string_view text, const FieldSpec& f);
  std::string str() const;

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws division_by_zero on 0

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  // Rational / Gaussian parts (rational kinds only).
  const mpq_class& re() const;
  const mpq_class& im() const;
  std::uint64_t residue_value() const;  // prime kind only

 private:
  struct Gauss {
    mpq_class re, im;
    bool operator==(const Gauss&) const = default;
  };

  FieldSpec field_;
  std::variant<mpq_class, Gauss, std::uint64_t> v_;

  static void require_same_field(const Scalar& a, const Scalar& b);
};

// Element with eps*eps == -1: i over Q(i), the smaller root over GF(p) with
// p = 1 (mod 4). Throws no_sqrt_minus_one otherwise.
Scalar sqrt_minus_one(const FieldSpec& f);

}  // namespace h2c
