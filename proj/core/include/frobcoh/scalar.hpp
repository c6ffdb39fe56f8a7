#pragma once

// Exact scalars over Q, Q(i) and GF(p).

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "frobcoh/error.hpp"

namespace frobcoh {

bool is_prime(std::uint64_t n);

class FieldSpec {
 public:
  enum class Kind { Rationals, GaussianRationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec gaussian() { return FieldSpec(Kind::GaussianRationals, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return p_; }
  /// 0 for Q and Q(i).
  std::uint32_t characteristic() const { return p_; }

  /// "Q", "Qi" or "GF<p>".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Parses "Q", "Qi", "GF<p>" or "GF <p>".
FieldSpec parse_field(std::string_view text);

/// Reduced fraction with positive denominator. Values that fit in 64 bits
/// stay inline; everything else lives in a shared immutable mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational inverse() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  std::optional<Rational> sqrt() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

struct Gaussian {
  Rational re;
  Rational im;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(Gaussian g) : v_(std::move(g)) {}
  explicit Scalar(Residue r) : v_(r) {}

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t n);
  static Scalar from_rational(const FieldSpec& field, const Rational& r);
  /// i in Q(i); throws FieldMismatch elsewhere.
  static Scalar imaginary_unit(const FieldSpec& field);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational* as_rational() const { return std::get_if<Rational>(&v_); }
  const Gaussian* as_gaussian() const { return std::get_if<Gaussian>(&v_); }
  const Residue* as_residue() const { return std::get_if<Residue>(&v_); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  std::variant<Rational, Gaussian, Residue> v_;
};

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses a whole string; throws ParseError (with column) on failure.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

/// Parses a scalar starting at `pos`, advancing it past the scalar. Returns
/// nullopt and leaves `pos` untouched when no scalar starts there. Throws
/// ParseError for text that starts like a scalar but is malformed for the
/// field (e.g. an imaginary part over Q, a zero denominator).
std::optional<Scalar> parse_scalar_prefix(std::string_view text, std::size_t& pos,
                                          const FieldSpec& field);

/// Deterministic square root: nonnegative over Q, smallest residue over GF(p),
/// re > 0 (or re = 0, im >= 0) over Q(i). nullopt when none exists.
std::optional<Scalar> sqrt_in_field(const Scalar& a);

}  // namespace frobcoh
