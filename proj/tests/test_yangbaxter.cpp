#include "doctest.h"
#include "frobcoh/yangbaxter.hpp"
#include "frobcoh_cli/builtins.hpp"
#include "oracle.hpp"

using namespace frobcoh;

namespace {

FrobeniusAlgebra load(const std::string& name, std::optional<FieldSpec> f = std::nullopt) {
  return validate(cli::resolve_builtin(name, f));
}

}  // namespace

TEST_SUITE("yangbaxter") {
  TEST_CASE("check_ybe agrees with a brute-force sum over basis triples") {
    for (const char* name : {"complex", "poly:2", "group:Z2", "poly:3", "group:S3"}) {
      CAPTURE(name);
      auto alg = load(name);
      std::vector<RMatrix> candidates{r_delta_mu(alg), r_skein(alg, Scalar::one(alg.field()),
                                                              Scalar::from_int(alg.field(), 2),
                                                              Scalar::from_int(alg.field(), -1),
                                                              Scalar::one(alg.field()))};
      if (alg.symmetric()) {
        candidates.push_back(r_tau_delta_mu(alg));
        candidates.push_back(r_sandwich(alg));
      }
      for (const auto& r : candidates) {
        CAPTURE(to_string(r.kind));
        CHECK(check_ybe(r).holds == oracle::ybe_brute_force(oracle::to_q(r.map), alg.dim()));
        CHECK(provenance_consistent(alg, r));
      }
    }
  }

  TEST_CASE("Δμ solves the YBE on every builtin") {
    for (const auto& name : cli::standard_builtins()) {
      CAPTURE(name);
      CHECK(check_ybe(r_delta_mu(load(name))).holds);
    }
  }

  TEST_CASE("τΔμ and the sandwich map on symmetric commutative builtins") {
    for (const char* name : {"complex", "poly:2", "poly:3", "group:Z2", "qpoly:i"}) {
      CAPTURE(name);
      auto alg = load(name);
      CHECK(check_ybe(r_tau_delta_mu(alg)).holds);
      CHECK(check_ybe(r_sandwich(alg)).holds);
    }
  }

  TEST_CASE("τΔμ on the symmetric but noncommutative S3 fails, with a witness") {
    auto alg = load("group:S3");
    const YbeResult r = check_ybe(r_tau_delta_mu(alg));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK_FALSE(r.witness->lhs == r.witness->rhs);
    CHECK(check_ybe(r_sandwich(alg)).holds);
  }

  TEST_CASE("symmetric constructions reject nonsymmetric algebras") {
    auto alg = load("s3alt");
    CHECK_THROWS_AS(r_tau_delta_mu(alg), Error);
    CHECK_THROWS_AS(r_sandwich(alg), Error);
  }

  TEST_CASE("case (i): R = 1 − γβ is an involution on C and kZ2") {
    for (const char* name : {"complex", "group:Z2"}) {
      CAPTURE(name);
      auto alg = load(name);
      const auto sols = solve_skein_case_i(alg);
      REQUIRE(sols.size() == 1);  // δ0 = 2 gives the double root B = −1
      const auto& s = sols[0];
      CHECK(to_string(s.coefficients.b) == "-1");
      CHECK(to_string(s.inverse_coefficients.b) == "-1");
      CHECK(s.ybe_ok);
      CHECK(s.inverse_ok);
      CHECK(compose(s.r.map, s.r.map) == alg.identity(2));
      CHECK(oracle::ybe_brute_force(oracle::to_q(s.r.map), alg.dim()));
    }
  }

  TEST_CASE("case (i) solutions satisfy the quadratic in every field tried") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      CAPTURE(p);
      auto alg = load("group:Zn:3", FieldSpec::prime(p));
      try {
        for (const auto& s : solve_skein_case_i(alg)) {
          const Scalar& b = s.coefficients.b;
          CHECK((b * b + alg.delta0() * b + Scalar::one(alg.field())).is_zero());
          CHECK(s.ybe_ok);
          CHECK(s.inverse_ok);
        }
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoSolutionInField);
      }
    }
  }

  TEST_CASE("case (ii) inverse coefficients") {
    auto alg = load("group:Z2");
    const FieldSpec q = alg.field();
    const auto s = solve_skein_case_ii(alg, Scalar::one(q), Scalar::one(q));
    CHECK(to_string(s.inverse_coefficients.c) == "-1/3");
    CHECK(to_string(s.inverse_coefficients.t) == "1");
    CHECK(compose(s.r.map, s.r_inverse.map) == alg.identity(2));
    CHECK(s.ybe_ok);

    // T' = 1/T and C' = −C·T'/(T + δ1·C) for other parameters.
    const Scalar c = Scalar::from_int(q, 3), t = Scalar::from_rational(q, Rational(1, 2));
    const auto s2 = solve_skein_case_ii(alg, c, t);
    const Scalar t_inv = t.inverse();
    CHECK(s2.inverse_coefficients.t == t_inv);
    CHECK(s2.inverse_coefficients.c == -(c * t_inv) / (t + Scalar::from_int(q, 2) * c));
    CHECK(s2.inverse_ok);
  }

  TEST_CASE("case (ii) error paths") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(solve_skein_case_ii(load("group:S3"), Scalar::one(q), Scalar::one(q)), Error);
    CHECK_THROWS_AS(solve_skein_case_ii(load("poly:2"), Scalar::one(q), Scalar::one(q)), Error);
    auto z2 = load("group:Z2");
    CHECK_THROWS_AS(solve_skein_case_ii(z2, Scalar::one(q), Scalar::zero(q)), Error);
    // T + δ1·C = 0 makes the inverse singular.
    try {
      (void)solve_skein_case_ii(z2, Scalar::one(q), Scalar::from_int(q, -2));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularCoefficient);
    }
  }

  TEST_CASE("Temperley-Lieb relations") {
    for (const char* name : {"complex", "group:Z2", "group:S3", "poly:2"}) {
      CAPTURE(name);
      for (const auto& a : temperley_lieb_checks(load(name))) {
        CAPTURE(a.name);
        CHECK(a.holds);
      }
    }
  }

  TEST_CASE("Δμ is singular, so it has no inverse") {
    auto alg = load("complex");
    CHECK_FALSE(invert(r_delta_mu(alg)).has_value());
    CHECK(invert(LinMap(alg.identity(2))).has_value());
  }
}
