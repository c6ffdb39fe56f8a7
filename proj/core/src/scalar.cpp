#include "frobcoh/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace frobcoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::UnitLawFails: return "UnitLawFails";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NoScalarHandle: return "NoScalarHandle";
    case ErrorCode::NoSolutionInField: return "NoSolutionInField";
    case ErrorCode::SingularCoefficient: return "SingularCoefficient";
    case ErrorCode::NotProportionalToIdentity: return "NotProportionalToIdentity";
    case ErrorCode::DuplicateMulLine: return "DuplicateMulLine";
    case ErrorCode::UnknownBasisName: return "UnknownBasisName";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_mathematical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative:
    case ErrorCode::UnitLawFails:
    case ErrorCode::DegeneratePairing:
    case ErrorCode::NotSymmetric:
    case ErrorCode::NotCommutative:
    case ErrorCode::NoScalarHandle:
    case ErrorCode::NoSolutionInField:
    case ErrorCode::SingularCoefficient:
    case ErrorCode::NotProportionalToIdentity:
    case ErrorCode::VerificationFailed:
      return true;
    default:
      return false;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "GF(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  }
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::GaussianRationals: return "Qi";
    case Kind::PrimeField: return "GF" + std::to_string(p_);
  }
  return "?";
}

FieldSpec parse_field(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "Q") return FieldSpec::rationals();
  if (text == "Qi") return FieldSpec::gaussian();
  if (text.substr(0, 2) == "GF") {
    auto digits = trim(text.substr(2));
    if (digits.empty() || digits.size() > 12) {
      throw Error(ErrorCode::ParseError, "expected a prime after GF, got '" + std::string(text) + "'");
    }
    std::uint64_t p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::ParseError, "expected a prime after GF, got '" + std::string(text) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw Error(ErrorCode::ParseError, "GF " + std::to_string(p) + ": modulus is not a prime below 2^31");
    }
    return FieldSpec::prime(p);
  }
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) + "' (expected Q, Qi or GF <p>)");
}

// ---------------------------------------------------------------- Rational

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

mpz_class to_mpz(i128 x) {
  u128 u = abs128(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return x < 0 ? mpz_class(-r) : r;
}

bool fits64(i128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
    num_ = 0;
    den_ = 1;
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits64(num) && fits64(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, 1);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational Rational::inverse() const { return Rational(1) / *this; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only if values differ
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpq_class q = to_mpq();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

// ---------------------------------------------------------------- residues

namespace {

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_pow(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  return mod_pow(a, p - 2, p);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

// Tonelli-Shanks; returns a root of a (a is a nonzero quadratic residue).
std::uint32_t tonelli_shanks(std::uint32_t a, std::uint32_t p) {
  if (p == 2) return a;
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint32_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint32_t m = s;
  std::uint32_t c = mod_pow(z, q, p);
  std::uint32_t t = mod_pow(a, q, p);
  std::uint32_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint32_t i = 0;
    std::uint32_t tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 < m - i; ++j) b = mod_mul(b, b, p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return r;
}

[[noreturn]] void field_mismatch(const Scalar& a, const Scalar& b) {
  throw Error(ErrorCode::FieldMismatch, "operands over " + a.field().name() + " and " + b.field().name());
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t n) { return from_rational(field, Rational(n)); }

Scalar Scalar::from_rational(const FieldSpec& field, const Rational& r) {
  switch (field.kind()) {
    case FieldSpec::Kind::Rationals: return Scalar(r);
    case FieldSpec::Kind::GaussianRationals: return Scalar(Gaussian{r, Rational(0)});
    case FieldSpec::Kind::PrimeField: {
      const std::uint32_t p = field.modulus();
      mpq_class q = r.to_mpq();
      std::uint32_t den = reduce(q.get_den(), p);
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field.name());
      return Scalar(Residue{mod_mul(reduce(q.get_num(), p), mod_inverse(den, p), p), p});
    }
  }
  return Scalar();
}

Scalar Scalar::imaginary_unit(const FieldSpec& field) {
  if (field.kind() != FieldSpec::Kind::GaussianRationals) {
    throw Error(ErrorCode::FieldMismatch, "imaginary unit requested over " + field.name());
  }
  return Scalar(Gaussian{Rational(0), Rational(1)});
}

FieldSpec Scalar::field() const {
  switch (v_.index()) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::gaussian();
    default: return FieldSpec::prime(std::get<Residue>(v_).modulus);
  }
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return std::get<Rational>(v_).is_zero();
    case 1: {
      const auto& g = std::get<Gaussian>(v_);
      return g.re.is_zero() && g.im.is_zero();
    }
    default: return std::get<Residue>(v_).value == 0;
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<Rational>(v_).is_one();
    case 1: {
      const auto& g = std::get<Gaussian>(v_);
      return g.re.is_one() && g.im.is_zero();
    }
    default: return std::get<Residue>(v_).value == 1;
  }
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(-std::get<Rational>(v_));
    case 1: {
      const auto& g = std::get<Gaussian>(v_);
      return Scalar(Gaussian{-g.re, -g.im});
    }
    default: {
      const auto& r = std::get<Residue>(v_);
      return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
    }
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) field_mismatch(a, b);
  switch (a.v_.index()) {
    case 0: return Scalar(std::get<Rational>(a.v_) + std::get<Rational>(b.v_));
    case 1: {
      const auto& x = std::get<Gaussian>(a.v_);
      const auto& y = std::get<Gaussian>(b.v_);
      return Scalar(Gaussian{x.re + y.re, x.im + y.im});
    }
    default: {
      const auto& x = std::get<Residue>(a.v_);
      const auto& y = std::get<Residue>(b.v_);
      if (x.modulus != y.modulus) field_mismatch(a, b);
      std::uint64_t s = static_cast<std::uint64_t>(x.value) + y.value;
      return Scalar(Residue{static_cast<std::uint32_t>(s % x.modulus), x.modulus});
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) field_mismatch(a, b);
  switch (a.v_.index()) {
    case 0: return Scalar(std::get<Rational>(a.v_) * std::get<Rational>(b.v_));
    case 1: {
      const auto& x = std::get<Gaussian>(a.v_);
      const auto& y = std::get<Gaussian>(b.v_);
      if (x.im.is_zero() && y.im.is_zero()) return Scalar(Gaussian{x.re * y.re, Rational(0)});
      return Scalar(Gaussian{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
    }
    default: {
      const auto& x = std::get<Residue>(a.v_);
      const auto& y = std::get<Residue>(b.v_);
      if (x.modulus != y.modulus) field_mismatch(a, b);
      return Scalar(Residue{mod_mul(x.value, y.value, x.modulus), x.modulus});
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (v_.index()) {
    case 0: return Scalar(std::get<Rational>(v_).inverse());
    case 1: {
      const auto& g = std::get<Gaussian>(v_);
      Rational norm = g.re * g.re + g.im * g.im;
      return Scalar(Gaussian{g.re / norm, -g.im / norm});
    }
    default: {
      const auto& r = std::get<Residue>(v_);
      return Scalar(Residue{mod_inverse(r.value, r.modulus), r.modulus});
    }
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) field_mismatch(a, b);
  return a * b.inverse();
}

std::string to_string(const Scalar& s) {
  if (const auto* r = s.as_rational()) return r->to_string();
  if (const auto* g = s.as_gaussian()) {
    if (g->im.is_zero()) return g->re.to_string();
    if (g->re.is_zero()) return g->im.to_string() + "i";
    std::string out = "(" + g->re.to_string();
    if (g->im.sign() < 0) {
      out += "-" + (-g->im).to_string();
    } else {
      out += "+" + g->im.to_string();
    }
    return out + "i)";
  }
  return std::to_string(s.as_residue()->value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

// ---------------------------------------------------------------- parsing

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::ParseError, "column " + std::to_string(pos + 1) + ": " + what);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// rational := ['-'] digits ['/' digits]; requires a digit (after the sign).
std::optional<mpq_class> parse_rational_at(std::string_view text, std::size_t& pos, bool allow_sign) {
  std::size_t p = pos;
  bool negative = false;
  if (allow_sign && p < text.size() && text[p] == '-') {
    negative = true;
    ++p;
  }
  std::size_t start = p;
  while (p < text.size() && is_digit(text[p])) ++p;
  if (p == start) return std::nullopt;
  mpz_class num(std::string(text.substr(start, p - start)), 10);
  mpz_class den(1);
  if (p < text.size() && text[p] == '/') {
    std::size_t dstart = p + 1;
    std::size_t q = dstart;
    while (q < text.size() && is_digit(text[q])) ++q;
    if (q == dstart) parse_fail(dstart, "expected digits after '/'");
    den = mpz_class(std::string(text.substr(dstart, q - dstart)), 10);
    if (den == 0) parse_fail(dstart, "zero denominator");
    p = q;
  }
  if (negative) num = -num;
  pos = p;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<Scalar> parse_scalar_prefix(std::string_view text, std::size_t& pos, const FieldSpec& field) {
  const bool gaussian = field.kind() == FieldSpec::Kind::GaussianRationals;
  std::size_t p = pos;
  if (p < text.size() && text[p] == '(') {
    std::size_t open = p;
    ++p;
    auto re = parse_rational_at(text, p, true);
    if (!re) parse_fail(p, "expected rational after '('");
    if (p >= text.size() || (text[p] != '+' && text[p] != '-')) parse_fail(p, "expected '+' or '-' in complex scalar");
    bool minus = text[p] == '-';
    ++p;
    auto im = parse_rational_at(text, p, false);
    if (!im) parse_fail(p, "expected rational imaginary part");
    if (p >= text.size() || text[p] != 'i') parse_fail(p, "expected 'i'");
    ++p;
    if (p >= text.size() || text[p] != ')') parse_fail(p, "expected ')'");
    ++p;
    if (!gaussian) parse_fail(open, "complex scalar not allowed over " + field.name());
    mpq_class imq = minus ? mpq_class(-*im) : *im;
    pos = p;
    return Scalar(Gaussian{Rational(*re), Rational(imq)});
  }
  auto r = parse_rational_at(text, p, true);
  if (!r) return std::nullopt;
  if (p < text.size() && text[p] == 'i') {
    if (!gaussian) parse_fail(p, "imaginary unit not allowed over " + field.name());
    pos = p + 1;
    return Scalar(Gaussian{Rational(0), Rational(*r)});
  }
  if (field.kind() == FieldSpec::Kind::PrimeField) {
    const std::uint32_t m = field.modulus();
    if (reduce(r->get_den(), m) == 0) parse_fail(pos, "denominator vanishes in " + field.name());
  }
  pos = p;
  return Scalar::from_rational(field, Rational(*r));
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  std::size_t pos = 0;
  auto s = parse_scalar_prefix(text, pos, field);
  if (!s) parse_fail(0, "expected scalar, got '" + std::string(text) + "'");
  if (pos != text.size()) parse_fail(pos, "unexpected trailing text '" + std::string(text.substr(pos)) + "'");
  return *s;
}

// ---------------------------------------------------------------- sqrt

std::optional<Scalar> sqrt_in_field(const Scalar& a) {
  if (const auto* r = a.as_rational()) {
    auto s = r->sqrt();
    if (!s) return std::nullopt;
    return Scalar(*s);
  }
  if (const auto* res = a.as_residue()) {
    const std::uint32_t p = res->modulus;
    if (res->value == 0) return a;
    if (p != 2 && mod_pow(res->value, (p - 1) / 2, p) != 1) return std::nullopt;
    std::uint32_t root = tonelli_shanks(res->value, p);
    std::uint32_t other = root == 0 ? 0 : p - root;
    return Scalar(Residue{std::min(root, other), p});
  }
  const auto& g = *a.as_gaussian();
  if (g.im.is_zero()) {
    if (g.re.sign() >= 0) {
      auto s = g.re.sqrt();
      if (!s) return std::nullopt;
      return Scalar(Gaussian{*s, Rational(0)});
    }
    auto s = (-g.re).sqrt();
    if (!s) return std::nullopt;
    return Scalar(Gaussian{Rational(0), *s});
  }
  // (x + yi)^2 = a + bi  =>  x^2 = (a + |z|)/2, y^2 = (|z| - a)/2, 2xy = b.
  auto modulus = (g.re * g.re + g.im * g.im).sqrt();
  if (!modulus) return std::nullopt;
  auto x = ((g.re + *modulus) / Rational(2)).sqrt();
  auto y = ((*modulus - g.re) / Rational(2)).sqrt();
  if (!x || !y) return std::nullopt;
  Rational yy = g.im.sign() < 0 ? -*y : *y;
  // x > 0 here because b != 0.
  return Scalar(Gaussian{*x, yy});
}

}  // namespace frobcoh
