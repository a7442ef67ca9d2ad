#include "h2c/field.hpp"

#include <cctype>

namespace h2c {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p <= 2^31, so a*b < 2^62
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace

std::string errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::no_sqrt_minus_one: return "NoSqrtMinusOne";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::no_unit: return "NoUnit";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_jordan: return "NotJordan";
    case Errc::relation_failed: return "RelationFailed";
    case Errc::dependent_frame: return "DependentFrame";
    case Errc::bracket_escapes_component: return "BracketEscapesComponent";
    case Errc::bad_epsilon: return "BadEpsilon";
    case Errc::wrong_convention: return "WrongConvention";
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_involutive: return "NotInvolutive";
    case Errc::missing_bracket_slot: return "MissingBracketSlot";
    case Errc::invalid_input: return "InvalidInput";
  }
  return "Error";
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw Error(Errc::invalid_input, "characteristic 2 is not supported");
  if (p < 3 || p > (1ull << 31) || !is_prime_u64(p))
    throw Error(Errc::invalid_input, "modulus must be an odd prime <= 2^31, got " + std::to_string(p));
  return {FieldKind::prime, p};
}

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::rational: return "q";
    case FieldKind::gaussian_rational: return "qi";
    case FieldKind::prime: return "gf" + std::to_string(p);
  }
  return "?";
}

FieldSpec FieldSpec::from_name(std::string_view s) {
  if (s == "q") return rationals();
  if (s == "qi") return gaussian_rationals();
  if (s.substr(0, 2) == "gf") {
    std::uint64_t p = 0;
    auto digits = s.substr(2);
    if (digits.empty()) throw Error(Errc::parse_error, "bad field name");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(Errc::parse_error, "bad field name");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p > (1ull << 31)) throw Error(Errc::parse_error, "modulus too large");
    }
    return prime(p);
  }
  throw Error(Errc::parse_error, "unknown field name: " + std::string(s));
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  switch (f.kind) {
    case FieldKind::rational: s.v_ = mpq_class(0); break;
    case FieldKind::gaussian_rational: s.v_ = Gauss{mpq_class(0), mpq_class(0)}; break;
    case FieldKind::prime: s.v_ = std::uint64_t{0}; break;
  }
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(1, f); }

Scalar Scalar::of_int(long v, const FieldSpec& f) {
  Scalar s = zero(f);
  switch (f.kind) {
    case FieldKind::rational: s.v_ = mpq_class(v); break;
    case FieldKind::gaussian_rational: s.v_ = Gauss{mpq_class(v), mpq_class(0)}; break;
    case FieldKind::prime: {
      long r = v % static_cast<long>(f.p);
      if (r < 0) r += static_cast<long>(f.p);
      s.v_ = static_cast<std::uint64_t>(r);
      break;
    }
  }
  return s;
}

Scalar Scalar::fraction(long num, long den, const FieldSpec& f) {
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
  return of_int(num, f) / of_int(den, f);
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s = zero(FieldSpec::gaussian_rationals());
  s.v_ = Gauss{re, im};
  return s;
}

Scalar Scalar::residue(std::uint64_t r, const FieldSpec& f) {
  if (f.kind != FieldKind::prime || r >= f.p)
    throw Error(Errc::invalid_input, "bad residue");
  Scalar s = zero(f);
  s.v_ = r;
  return s;
}

bool Scalar::is_zero() const {
  switch (field_.kind) {
    case FieldKind::rational: return std::get<mpq_class>(v_) == 0;
    case FieldKind::gaussian_rational: {
      const auto& g = std::get<Gauss>(v_);
      return g.re == 0 && g.im == 0;
    }
    case FieldKind::prime: return std::get<std::uint64_t>(v_) == 0;
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::field_mismatch, "scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (field_.kind) {
    case FieldKind::rational: r.v_ = mpq_class(-std::get<mpq_class>(v_)); break;
    case FieldKind::gaussian_rational: {
      const auto& g = std::get<Gauss>(v_);
      r.v_ = Gauss{mpq_class(-g.re), mpq_class(-g.im)};
      break;
    }
    case FieldKind::prime: {
      auto x = std::get<std::uint64_t>(v_);
      r.v_ = x == 0 ? 0 : field_.p - x;
      break;
    }
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar r = a;
  switch (a.field_.kind) {
    case FieldKind::rational:
      r.v_ = mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_));
      break;
    case FieldKind::gaussian_rational: {
      const auto& x = std::get<Scalar::Gauss>(a.v_);
      const auto& y = std::get<Scalar::Gauss>(b.v_);
      r.v_ = Scalar::Gauss{mpq_class(x.re + y.re), mpq_class(x.im + y.im)};
      break;
    }
    case FieldKind::prime: {
      auto s = std::get<std::uint64_t>(a.v_) + std::get<std::uint64_t>(b.v_);
      if (s >= a.field_.p) s -= a.field_.p;
      r.v_ = s;
      break;
    }
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar r = a;
  switch (a.field_.kind) {
    case FieldKind::rational:
      r.v_ = mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_));
      break;
    case FieldKind::gaussian_rational: {
      const auto& x = std::get<Scalar::Gauss>(a.v_);
      const auto& y = std::get<Scalar::Gauss>(b.v_);
      r.v_ = Scalar::Gauss{mpq_class(x.re * y.re - x.im * y.im),
                           mpq_class(x.re * y.im + x.im * y.re)};
      break;
    }
    case FieldKind::prime:
      r.v_ = mulmod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_), a.field_.p);
      break;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  Scalar r = *this;
  switch (field_.kind) {
    case FieldKind::rational:
      r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
      break;
    case FieldKind::gaussian_rational: {
      const auto& g = std::get<Gauss>(v_);
      mpq_class n = g.re * g.re + g.im * g.im;
      r.v_ = Gauss{mpq_class(g.re / n), mpq_class(-g.im / n)};
      break;
    }
    case FieldKind::prime:
      r.v_ = powmod(std::get<std::uint64_t>(v_), field_.p - 2, field_.p);
      break;
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& b) const {
  if (!(field_ == b.field_)) return false;
  return v_ == b.v_;
}

const mpq_class& Scalar::re() const {
  if (field_.kind == FieldKind::rational) return std::get<mpq_class>(v_);
  if (field_.kind == FieldKind::gaussian_rational) return std::get<Gauss>(v_).re;
  throw Error(Errc::field_mismatch, "re() on prime-field scalar");
}

const mpq_class& Scalar::im() const {
  if (field_.kind == FieldKind::gaussian_rational) return std::get<Gauss>(v_).im;
  throw Error(Errc::field_mismatch, "im() on non-gaussian scalar");
}

std::uint64_t Scalar::residue_value() const {
  if (field_.kind != FieldKind::prime) throw Error(Errc::field_mismatch, "residue_value() on rational scalar");
  return std::get<std::uint64_t>(v_);
}

namespace {

// int [ '/' uint ], reduced, positive denominator
mpq_class parse_rational_body(std::string_view t) {
  if (t.empty()) throw Error(Errc::parse_error, "empty scalar");
  std::size_t i = 0;
  if (t[0] == '-') i = 1;
  bool saw_digit = false, saw_slash = false, digit_after_slash = false;
  for (std::size_t j = i; j < t.size(); ++j) {
    char c = t[j];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (saw_slash ? digit_after_slash : saw_digit) = true;
    } else if (c == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
    } else {
      throw Error(Errc::parse_error, "malformed rational: " + std::string(t));
    }
  }
  if (!saw_digit || (saw_slash && !digit_after_slash))
    throw Error(Errc::parse_error, "malformed rational: " + std::string(t));
  mpq_class q;
  if (q.set_str(std::string(t), 10) != 0)
    throw Error(Errc::parse_error, "malformed rational: " + std::string(t));
  if (q.get_den() == 0) throw Error(Errc::parse_error, "zero denominator: " + std::string(t));
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::rational: {
      Scalar s = zero(f);
      s.v_ = parse_rational_body(text);
      return s;
    }
    case FieldKind::gaussian_rational: {
      if (text.empty()) throw Error(Errc::parse_error, "empty scalar");
      if (text.back() != 'i') {
        return gaussian(parse_rational_body(text), mpq_class(0));
      }
      std::string_view body = text.substr(0, text.size() - 1);
      // split at the last top-level sign; no sign -> pure imaginary
      std::size_t split = std::string_view::npos;
      for (std::size_t j = body.size(); j-- > 1;) {
        if (body[j] == '+' || body[j] == '-') {
          split = j;
          break;
        }
      }
      if (split == std::string_view::npos) {
        return gaussian(mpq_class(0), parse_rational_body(body));
      }
      mpq_class re = parse_rational_body(body.substr(0, split));
      mpq_class im = parse_rational_body(body.substr(split + 1));
      if (body[split] == '-') im = -im;
      return gaussian(re, im);
    }
    case FieldKind::prime: {
      if (text.empty()) throw Error(Errc::parse_error, "empty scalar");
      mpz_class v;
      for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(Errc::parse_error, "malformed residue: " + std::string(text));
      if (v.set_str(std::string(text), 10) != 0)
        throw Error(Errc::parse_error, "malformed residue: " + std::string(text));
      if (v >= mpz_class(static_cast<unsigned long>(f.p)))
        throw Error(Errc::parse_error, "residue not reduced mod " + std::to_string(f.p) + ": " + std::string(text));
      return residue(v.get_ui(), f);
    }
  }
  throw Error(Errc::parse_error, "bad field");
}

std::string Scalar::str() const {
  switch (field_.kind) {
    case FieldKind::rational: return rational_str(std::get<mpq_class>(v_));
    case FieldKind::gaussian_rational: {
      const auto& g = std::get<Gauss>(v_);
      if (g.im == 0) return rational_str(g.re);
      if (g.re == 0) return rational_str(g.im) + "i";
      mpq_class a = abs(g.im);
      return rational_str(g.re) + (g.im > 0 ? "+" : "-") + rational_str(a) + "i";
    }
    case FieldKind::prime: return std::to_string(std::get<std::uint64_t>(v_));
  }
  return "?";
}

Scalar sqrt_minus_one(const FieldSpec& f) {
  if (f.kind == FieldKind::gaussian_rational)
    return Scalar::gaussian(mpq_class(0), mpq_class(1));
  if (f.kind == FieldKind::prime && f.p % 4 == 1) {
    // r = a^((p-1)/4) for the smallest quadratic non-residue a
    std::uint64_t a = 2;
    while (powmod(a, (f.p - 1) / 2, f.p) != f.p - 1) ++a;
    std::uint64_t r = powmod(a, (f.p - 1) / 4, f.p);
    std::uint64_t r2 = f.p - r;
    return Scalar::residue(r < r2 ? r : r2, f);
  }
  throw Error(Errc::no_sqrt_minus_one,
              "field " + f.name() + " has no square root of -1");
}

}  // namespace h2c
