#include <cstdint>
#include <limits>
#include <random>

#include "doctest.h"
#include "frobcoh/scalar.hpp"

using namespace frobcoh;

TEST_SUITE("scalars") {
  TEST_CASE("rational arithmetic agrees with mpq_class, including overflow into big values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> small(-50, 50);
    const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 3;
    for (int i = 0; i < 500; ++i) {
      const std::int64_t an = (i % 5 == 0) ? huge - small(rng) : small(rng);
      std::int64_t ad = small(rng);
      std::int64_t bn = (i % 7 == 0) ? huge + small(rng) : small(rng);
      std::int64_t bd = small(rng);
      if (ad == 0) ad = 1;
      if (bd == 0) bd = 3;
      const Rational a(an, ad), b(bn, bd);
      mpq_class qa(an, ad), qb(bn, bd);
      qa.canonicalize();
      qb.canonicalize();
      CHECK((a + b).to_mpq() == qa + qb);
      CHECK((a - b).to_mpq() == qa - qb);
      CHECK((a * b).to_mpq() == qa * qb);
      if (!b.is_zero()) {
        CHECK((a / b).to_mpq() == qa / qb);
        CHECK((a * b) / b == a);  // through a big intermediate and back
      }
    }
  }

  TEST_CASE("rational normal form and equality") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
    CHECK_FALSE(Rational(2).sqrt().has_value());
  }

  TEST_CASE("Gaussian rationals") {
    const FieldSpec qi = FieldSpec::gaussian();
    const Scalar i = Scalar::imaginary_unit(qi);
    CHECK(i * i == Scalar::from_int(qi, -1));
    const Scalar z = parse_scalar("(1/2-3i)", qi);
    CHECK(to_string(z) == "(1/2-3i)");
    CHECK(z * z.inverse() == Scalar::one(qi));
    CHECK(to_string(parse_scalar("-2i", qi)) == "-2i");
    // √(2i) = 1 + i, chosen with positive real part.
    auto s = sqrt_in_field(Scalar::from_int(qi, 2) * i);
    REQUIRE(s);
    CHECK(to_string(*s) == "(1+1i)");
    CHECK_FALSE(sqrt_in_field(Scalar::from_int(qi, 2)).has_value());
  }

  TEST_CASE("prime fields against a brute-force oracle") {
    for (std::uint64_t p : {2u, 3u, 7u, 101u}) {
      const FieldSpec f = FieldSpec::prime(p);
      for (std::int64_t a = -5; a < static_cast<std::int64_t>(p) + 5; ++a) {
        const Scalar s = Scalar::from_int(f, a);
        const std::uint32_t expect = static_cast<std::uint32_t>(((a % static_cast<std::int64_t>(p)) + p) % p);
        CHECK(s.as_residue()->value == expect);
        if (expect != 0) CHECK(s * s.inverse() == Scalar::one(f));
        // Square roots exist exactly for the squares found by enumeration.
        bool square = false;
        for (std::uint64_t x = 0; x < p; ++x) square = square || (x * x) % p == expect;
        auto r = sqrt_in_field(s);
        CHECK(r.has_value() == square);
        if (r) CHECK(*r * *r == s);
      }
    }
    CHECK(parse_scalar("1/3", FieldSpec::prime(7)) * Scalar::from_int(FieldSpec::prime(7), 3) ==
          Scalar::one(FieldSpec::prime(7)));
  }

  TEST_CASE("field parsing") {
    CHECK(parse_field("Q") == FieldSpec::rationals());
    CHECK(parse_field("Qi") == FieldSpec::gaussian());
    CHECK(parse_field("GF2") == FieldSpec::prime(2));
    CHECK(parse_field("GF 5") == FieldSpec::prime(5));
    CHECK_THROWS_AS(parse_field("GF 4"), Error);
    CHECK_THROWS_AS(parse_field("R"), Error);
  }

  TEST_CASE("scalar parse errors") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(parse_scalar("1/0", q), Error);
    CHECK_THROWS_AS(parse_scalar("2i", q), Error);
    CHECK_THROWS_AS(parse_scalar("(1+2i)", q), Error);
    CHECK_THROWS_AS(parse_scalar("1/2", FieldSpec::prime(2)), Error);
    CHECK_THROWS_AS(parse_scalar("abc", q), Error);
    CHECK(parse_scalar("-7/14", q) == Scalar::from_rational(q, Rational(-1, 2)));
  }

  TEST_CASE("mixing fields is an error") {
    CHECK_THROWS_AS(Scalar::one(FieldSpec::rationals()) + Scalar::one(FieldSpec::prime(3)), Error);
    CHECK_THROWS_AS(Scalar::zero(FieldSpec::rationals()).inverse(), Error);
  }
}
