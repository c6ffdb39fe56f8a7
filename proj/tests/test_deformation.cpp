#include "doctest.h"
#include "frobcoh/deformation.hpp"
#include "frobcoh/random.hpp"
#include "frobcoh_cli/builtins.hpp"

using namespace frobcoh;

namespace {

FrobeniusAlgebra load(const std::string& name, std::optional<FieldSpec> f = std::nullopt) {
  return validate(cli::resolve_builtin(name, f));
}

}  // namespace

TEST_SUITE("deformation") {
  TEST_CASE("dual number arithmetic") {
    const FieldSpec q = FieldSpec::rationals();
    const DualScalar x{Scalar::from_int(q, 2), Scalar::from_int(q, 3)};
    const DualScalar y{Scalar::from_int(q, 5), Scalar::from_int(q, -1)};
    const DualScalar p = x * y;
    CHECK(p.a0 == Scalar::from_int(q, 10));
    CHECK(p.a1 == Scalar::from_int(q, 13));  // 2·(−1) + 3·5
    const DualScalar one = DualScalar::constant(Scalar::one(q));
    CHECK(x * x.inverse() == one);
    CHECK(to_string(x) == "2 + 3·t");
    CHECK_THROWS_AS((DualScalar{Scalar::zero(q), Scalar::one(q)}.inverse()), Error);
  }

  TEST_CASE("dual linear maps obey the interchange law mod t^2") {
    const FieldSpec q = FieldSpec::rationals();
    RandomSource rng(21);
    for (int i = 0; i < 20; ++i) {
      auto rnd = [&] { return DualLinMap{rng.linmap(q, 2, 1, 1), rng.linmap(q, 2, 1, 1)}; };
      const DualLinMap a = rnd(), b = rnd(), c = rnd(), d = rnd();
      CHECK(compose(tensor(a, b), tensor(c, d)) == tensor(compose(a, c), compose(b, d)));
    }
  }

  TEST_CASE("the order-t obstruction is D2, in both compatibility shapes") {
    RandomSource rng(22);
    for (const char* name : {"complex", "poly:2", "poly:3", "group:Z2", "group:S3"}) {
      CAPTURE(name);
      auto alg = load(name);
      for (int i = 0; i < 10; ++i) {
        const Cochain phi = rng.cochain(alg, 2);
        const PrimaryObstruction obs = primary_obstruction(alg, phi[0], phi[1]);
        const Cochain n = d2(alg, phi, Variant::N);
        const Cochain m = d2(alg, phi, Variant::Mirror);
        CHECK(obs.cochain() == n);
        CHECK(obs.xi2_prime == m[1]);
        CHECK(d3(alg, obs.cochain()).is_zero());
      }
    }
  }

  TEST_CASE("cocycles are exactly the first-order Frobenius deformations") {
    auto alg = load("group:Z2");
    for (const auto& z : cocycle_basis(alg, 2, Variant::N)) {
      CHECK(check_frobenius_mod_t2({alg.mu(), z[0]}, {alg.delta(), z[1]}));
    }
    // A cochain that is not a cocycle: φ1 = projection onto the first factor's e_0 coefficient.
    LinMap phi1(alg.field(), 2, 2, 1);
    phi1.set(0, 0, Scalar::one(alg.field()));
    LinMap phi2(alg.field(), 2, 1, 2);
    CHECK_FALSE(check_frobenius_mod_t2({alg.mu(), phi1}, {alg.delta(), phi2}));
    CHECK_FALSE(d2(alg, Cochain{2, {phi1, phi2}}, Variant::N).is_zero());
  }

  TEST_CASE("constraint space on C and kZ2") {
    for (const char* name : {"complex", "group:Z2"}) {
      CAPTURE(name);
      auto alg = load(name);
      const Subspace s = deformation_constraint_space(alg);
      CHECK(s.dim() == 5);
      const Scalar two = Scalar::from_int(alg.field(), 2);
      for (const auto& v : s.basis()) {
        const Cochain phi = Cochain::from_coordinates(alg, 2, v);
        // Members are symmetric 2-cocycles.
        CHECK(d2(alg, phi, Variant::N).is_zero());
        CHECK(d2(alg, phi, Variant::Mirror).is_zero());
        CHECK(compose(phi[0], alg.tau()) == phi[0]);
        CHECK(compose(alg.tau(), phi[1]) == phi[1]);
        const DualScalar d1 = delta1_of(alg, phi[0], phi[1]);
        CHECK(d1.a0 == two);
        const Scalar sum = phi[0].at(0, 3) + phi[1].at(3, 0);
        CHECK(d1.a1 == (std::string(name) == "complex" ? -(two * sum) : two * sum));
        const DeformedR r = deformed_r(alg, phi[0], phi[1], Scalar::one(alg.field()), Scalar::one(alg.field()));
        CHECK(r.ybe_ok);
      }
    }
  }

  TEST_CASE("constraint space preconditions") {
    CHECK_THROWS_AS(deformation_constraint_space(load("group:S3")), Error);
    CHECK_THROWS_AS(deformation_constraint_space(load("poly:2")), Error);
  }

  TEST_CASE("δ1 requires (μ+tφ1)(Δ+tφ2) to be scalar") {
    auto alg = load("complex");
    LinMap phi1(alg.field(), 2, 2, 1);
    phi1.set(1, 0, Scalar::one(alg.field()));  // 1·1 picks up i
    LinMap phi2(alg.field(), 2, 1, 2);
    try {
      (void)delta1_of(alg, phi1, phi2);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotProportionalToIdentity);
    }
  }
}
