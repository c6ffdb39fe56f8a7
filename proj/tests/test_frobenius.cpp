#include "doctest.h"
#include "frobcoh/frobenius.hpp"
#include "frobcoh_cli/builtins.hpp"
#include "oracle.hpp"

using namespace frobcoh;

namespace {

FrobeniusAlgebra load(const std::string& name, std::optional<FieldSpec> f = std::nullopt) {
  return validate(cli::resolve_builtin(name, f));
}

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("every builtin validates and passes all axiom checks") {
    for (const auto& name : cli::standard_builtins()) {
      CAPTURE(name);
      auto alg = load(name);
      for (const auto& a : verify_axioms(alg)) {
        CAPTURE(a.name);
        CHECK(a.holds);
      }
    }
    for (const char* name : {"poly:2", "poly:4", "group:Z2", "group:Zn:3", "group:S3"}) {
      CAPTURE(name);
      auto alg = load(name, FieldSpec::prime(2));
      for (const auto& a : verify_axioms(alg)) CHECK(a.holds);
    }
  }

  TEST_CASE("comultiplication matches the Gram-inverse oracle") {
    for (const char* name : {"complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt", "group:Zn:3"}) {
      CAPTURE(name);
      auto alg = load(name);
      const oracle::Algebra ref(alg.presentation());
      const auto delta = oracle::to_q(alg.delta());
      const std::size_t d = alg.dim();
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t c = 0; c < d; ++c) CHECK(delta[b * d + c][a] == ref.dl(a, b, c));
        }
      }
    }
  }

  TEST_CASE("handle element equals Σ over the comultiplication of the unit") {
    for (const char* name : {"complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt"}) {
      CAPTURE(name);
      auto alg = load(name);
      const oracle::Algebra ref(alg.presentation());
      const std::size_t d = alg.dim();
      // δ_h = μΔ(1) with 1 = Σ u_a e_a.
      std::vector<oracle::Q> h(d);
      for (std::size_t a = 0; a < d; ++a) {
        const oracle::Q u = oracle::q(alg.presentation().unit_vector[a]);
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t e = 0; e < d; ++e) h[e] += u * ref.dl(a, b, c) * ref.l(b, c, e);
      }
      for (std::size_t e = 0; e < d; ++e) CHECK(oracle::q(alg.handle_element()[e]) == h[e]);
    }
  }

  TEST_CASE("handle constants of the small builtins") {
    auto c = load("complex");
    CHECK(to_string(c.delta0()) == "2");
    REQUIRE(c.scalar_handle());
    CHECK(to_string(*c.scalar_handle()) == "2");
    CHECK(c.symmetric());
    CHECK(c.commutative());

    for (int n : {2, 3, 4}) {
      auto p = load("poly:" + std::to_string(n));
      CHECK(format_element(p.presentation(), p.handle_element()) ==
            std::to_string(n) + " * " + (n == 2 ? std::string("x") : "x^" + std::to_string(n - 1)));
      CHECK_FALSE(p.scalar_handle());
    }

    auto s3 = load("group:S3");
    CHECK(to_string(s3.delta0()) == "6");
    CHECK(s3.symmetric());
    CHECK_FALSE(s3.commutative());

    auto alt = load("s3alt");
    CHECK_FALSE(alt.symmetric());
    CHECK(format_element(alt.presentation(), alt.handle_element()) == "2 * x + 2 * y + 2 * xyx");

    auto qp = load("qpoly:i");
    CHECK(qp.id() == "qpoly:1i");
    CHECK(format_element(qp.presentation(), qp.handle_element()) == "-4 * xy");
  }

  TEST_CASE("characteristic 2 makes δ0 vanish on kZ2") {
    auto z2 = load("group:Z2", FieldSpec::prime(2));
    CHECK(z2.delta0().is_zero());
    CHECK(z2.handle_element() == Vector(2, Scalar::zero(FieldSpec::prime(2))));
  }

  TEST_CASE("validation rejects broken presentations") {
    const FieldSpec q = FieldSpec::rationals();
    auto good = cli::resolve_builtin("poly:2");

    auto changed = good;
    changed.lambda(0, 1, 0) = Scalar::one(q);  // 1·x = 1 + x
    try {
      (void)validate(changed);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::UnitLawFails || e.code() == ErrorCode::NotAssociative));
    }

    auto degenerate = good;
    degenerate.counit_vector.assign(2, Scalar::zero(q));
    degenerate.counit_vector[0] = Scalar::one(q);  // ε(x) = 0 kills the pairing on x
    try {
      (void)validate(degenerate);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegeneratePairing);
    }

    // A unital table where (x·x)·x ≠ x·(x·x); the error names the witness.
    auto bad = AlgebraPresentation::empty("bad", q, {"1", "x", "y"});
    for (std::size_t b = 0; b < 3; ++b) {
      bad.lambda(0, b, b) = Scalar::one(q);
      bad.lambda(b, 0, b) = Scalar::one(q);
    }
    bad.lambda(1, 1, 2) = Scalar::one(q);  // x·x = y
    bad.lambda(2, 1, 0) = Scalar::one(q);  // y·x = 1, x·y = 0: (xx)x = 1 ≠ 0 = x(xx)
    bad.unit_vector[0] = Scalar::one(q);
    bad.counit_vector[2] = Scalar::one(q);
    try {
      (void)validate(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAssociative);
      CHECK(std::string(e.what()).find("x") != std::string::npos);
    }
  }

  TEST_CASE("group builders reject non-groups") {
    CHECK_THROWS_AS(build_group({{0, 1}, {1, 1}}, FieldSpec::rationals(), {"e", "g"}, "bad"), Error);
    CHECK_THROWS_AS(cli::resolve_builtin("group:Zn:0"), Error);
    CHECK_THROWS_AS(cli::resolve_builtin("complex", FieldSpec::prime(3)), Error);
    CHECK_THROWS_AS(cli::resolve_builtin("nope"), Error);
  }
}
