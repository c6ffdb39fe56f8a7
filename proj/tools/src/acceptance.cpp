#include "frobcoh_cli/acceptance.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "frobcoh/deformation.hpp"
#include "frobcoh/random.hpp"
#include "frobcoh/yangbaxter.hpp"
#include "frobcoh_cli/builtins.hpp"

namespace frobcoh::cli {

namespace {

FieldSpec gf2() { return FieldSpec::prime(2); }

FrobeniusAlgebra load(const std::string& name, std::optional<FieldSpec> field = std::nullopt) {
  return validate(resolve_builtin(name, field));
}

std::string label(const FrobeniusAlgebra& alg) { return alg.id() + "/" + alg.field().name(); }

Vector element(const FrobeniusAlgebra& alg, const std::vector<std::pair<std::string, std::int64_t>>& terms) {
  const auto& names = alg.presentation().basis_names;
  Vector v(alg.dim(), Scalar::zero(alg.field()));
  for (const auto& [n, c] : terms) {
    auto it = std::find(names.begin(), names.end(), n);
    v[static_cast<std::size_t>(it - names.begin())] += Scalar::from_int(alg.field(), c);
  }
  return v;
}

Vector kron(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

class Checker {
 public:
  Checker(int number, std::string title) {
    r_.number = number;
    r_.title = std::move(title);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      r_.passed = false;
      r_.details.push_back(what);
    }
  }
  void discrepancy(std::string what) { r_.discrepancies.push_back(std::move(what)); }
  template <class F>
  void guard(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }
  CriterionResult take() { return std::move(r_); }

 private:
  CriterionResult r_;
};

// ---------------------------------------------------------------- 1

CriterionResult axiom_suite() {
  Checker c(1, "axiom suite on all builtins");
  for (const auto& name : standard_builtins()) {
    c.guard(name, [&] {
      auto alg = load(name);
      for (const auto& a : verify_axioms(alg)) c.expect(a.holds, name + ": " + a.name + " fails");
    });
  }
  return c.take();
}

// ---------------------------------------------------------------- 2

CriterionResult constants() {
  Checker c(2, "handle constants");
  struct Expected {
    std::string name;
    std::optional<std::int64_t> delta0;
    std::vector<std::pair<std::string, std::int64_t>> handle;
    std::optional<std::int64_t> delta1;
  };
  const std::vector<Expected> table{
      {"complex", 2, {{"1", 2}}, 2},
      {"poly:2", std::nullopt, {{"x", 2}}, std::nullopt},
      {"poly:3", std::nullopt, {{"x^2", 3}}, std::nullopt},
      {"poly:4", std::nullopt, {{"x^3", 4}}, std::nullopt},
      {"group:Z2", 2, {{"1", 2}}, 2},
      {"s3alt", std::nullopt, {{"xyx", 2}, {"x", 2}, {"y", 2}}, std::nullopt},
      {"qpoly:i", std::nullopt, {{"xy", -4}}, std::nullopt},
  };
  for (const auto& e : table) {
    c.guard(e.name, [&] {
      auto alg = load(e.name);
      const Vector want = element(alg, e.handle);
      c.expect(alg.handle_element() == want, e.name + ": handle element " +
                                                 format_element(alg.presentation(), alg.handle_element()) +
                                                 ", expected " + format_element(alg.presentation(), want));
      if (e.delta0) {
        c.expect(alg.delta0() == Scalar::from_int(alg.field(), *e.delta0),
                 e.name + ": delta0 = " + to_string(alg.delta0()));
      }
      if (e.delta1) {
        c.expect(alg.scalar_handle() && *alg.scalar_handle() == Scalar::from_int(alg.field(), *e.delta1),
                 e.name + ": delta1 missing or wrong");
      } else {
        c.expect(!alg.scalar_handle(), e.name + ": unexpected scalar handle");
      }
    });
  }
  return c.take();
}

// ---------------------------------------------------------------- 3

CriterionResult cohomology_regression() {
  Checker c(3, "cohomology regression (H1, Z2, H2)");
  struct Expected {
    std::string name;
    std::optional<FieldSpec> field;
    std::ptrdiff_t h1;
    std::size_t z2;
    std::ptrdiff_t h2;
  };
  const std::vector<Expected> table{
      {"complex", std::nullopt, 0, 6, 4},   {"poly:2", std::nullopt, 0, 6, 4}, {"poly:2", gf2(), 1, 6, 5},
      {"group:Z2", std::nullopt, 0, 6, 4}, {"group:Z2", gf2(), 1, 6, 5},
  };
  for (const auto& e : table) {
    c.guard(e.name, [&] {
      auto alg = load(e.name, e.field);
      std::optional<std::vector<DegreeDims>> first;
      for (Variant v : {Variant::N, Variant::Mirror}) {
        auto report = cohomology_dims(alg, 2, v);
        const auto& d1 = report.degrees[0];
        const auto& d2 = report.degrees[1];
        std::ostringstream got;
        got << label(alg) << " variant " << static_cast<int>(v) << ": (H1, Z2, H2) = (" << d1.dim_h << ", "
            << d2.dim_z << ", " << d2.dim_h << "), expected (" << e.h1 << ", " << e.z2 << ", " << e.h2
            << "); dim C1 = " << cochain_dimension(alg.dim(), 1) << ", dim Z1 = " << d1.dim_z
            << ", so B2 = rank D1 = " << d2.dim_b;
        c.expect(d1.dim_h == e.h1 && d2.dim_z == e.z2 && d2.dim_h == e.h2, got.str());
        if (first) {
          bool same = true;
          for (std::size_t i = 0; i < first->size(); ++i) {
            same = same && (*first)[i].dim_z == report.degrees[i].dim_z && (*first)[i].dim_b == report.degrees[i].dim_b;
          }
          c.expect(same, label(alg) + ": variants give different dimensions");
        } else {
          first = report.degrees;
        }
      }
    });
  }
  return c.take();
}

// ---------------------------------------------------------------- 4

CriterionResult chain_identities(bool deep) {
  Checker c(4, deep ? "chain identities (deep)" : "chain identities");
  std::vector<std::pair<std::string, std::optional<FieldSpec>>> algebras{
      {"complex", std::nullopt}, {"poly:2", std::nullopt}, {"group:Z2", std::nullopt},
      {"poly:2", gf2()},         {"group:Z2", gf2()}};
  const std::size_t small = algebras.size();
  if (deep) {
    algebras.emplace_back("qpoly:i", std::nullopt);
    algebras.emplace_back("s3alt", std::nullopt);
  }
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const auto& [name, field] = algebras[i];
    c.guard(name, [&] {
      auto alg = load(name, field);
      for (Variant v : {Variant::N, Variant::Mirror}) {
        auto check = chain_identity(alg, 1, v);
        c.expect(check.holds, label(alg) + ": D2^(" + std::to_string(static_cast<int>(v)) + ")D1 fails, " +
                                  check.witness);
      }
      auto d3d2 = chain_identity(alg, 2, Variant::N);
      c.expect(d3d2.holds, label(alg) + ": D3D2^(1) fails on " + std::to_string(d3d2.failing_columns) + " of " +
                               std::to_string(d3d2.columns_checked) + " columns, " + d3d2.witness);
      if (i >= small) return;
      std::map<std::string, ChainCheck> by_name;
      for (auto& k : degree4_component_checks(alg)) by_name.emplace(k.name, k);
      for (const char* mandatory : {"d41.d31", "d45.d34"}) {
        const auto& k = by_name.at(mandatory);
        c.expect(k.holds, label(alg) + ": " + k.name + " fails, " + k.witness);
      }
      for (const char* displayed : {"d42.(d31,d32)", "d44.(d33,d34)"}) {
        const auto& k = by_name.at(displayed);
        const std::string signed_name = std::string(displayed).replace(3, 0, "_signed");
        const auto& s = by_name.at(signed_name);
        std::string line = label(alg) + ": " + k.name + (k.holds ? " vanishes" : " nonzero on " +
                                                                        std::to_string(k.failing_columns) + "/" +
                                                                        std::to_string(k.columns_checked) +
                                                                        " columns (" + k.witness + ")");
        line += "; " + s.name + (s.holds ? " vanishes" : " nonzero (" + s.witness + ")");
        c.discrepancy(line);
      }
    });
  }
  return c.take();
}

// ---------------------------------------------------------------- 5

CriterionResult ybe_suite() {
  Checker c(5, "Yang-Baxter suite");
  for (const auto& name : standard_builtins()) {
    c.guard(name, [&] {
      auto alg = load(name);
      auto dm = check_ybe(r_delta_mu(alg));
      c.expect(dm.holds, name + ": delta-mu fails the YBE");
      if (alg.symmetric()) {
        auto tdm = check_ybe(r_tau_delta_mu(alg));
        std::string w;
        if (tdm.witness) {
          w = " at (" + std::to_string(tdm.witness->row) + ", " + std::to_string(tdm.witness->col) + "): " +
              to_string(tdm.witness->lhs) + " vs " + to_string(tdm.witness->rhs);
        }
        c.expect(tdm.holds, name + ": tau-delta-mu fails the YBE" + w +
                                (alg.commutative() ? "" : " (symmetric but not commutative)"));
        c.expect(check_ybe(r_sandwich(alg)).holds, name + ": sandwich fails the YBE");
      }
    });
  }
  for (const std::string name : {"complex", "group:Z2"}) {
    c.guard(name + " case (i)", [&] {
      auto alg = load(name);
      const Scalar one = Scalar::one(alg.field());
      const Scalar minus_one = -one;
      auto sols = solve_skein_case_i(alg);
      bool found = false;
      for (const auto& s : sols) {
        if (s.coefficients.a == one && s.coefficients.b == minus_one) {
          found = true;
          c.expect(s.inverse_coefficients.a == one && s.inverse_coefficients.b == minus_one,
                   name + ": case (i) inverse is not (1, -1)");
          c.expect(s.ybe_ok && s.inverse_ok, name + ": case (i) YBE/inverse check fails");
          c.expect(compose(s.r.map, s.r.map) == alg.identity(2), name + ": case (i) R^2 is not the identity");
        }
      }
      c.expect(found, name + ": case (i) has no solution (A, B) = (1, -1)");
    });
  }
  c.guard("group:Z2 case (ii)", [&] {
    auto alg = load("group:Z2");
    const FieldSpec f = alg.field();
    auto s = solve_skein_case_ii(alg, Scalar::one(f), Scalar::one(f));
    c.expect(s.inverse_coefficients.c == Scalar::from_rational(f, Rational(-1, 3)) &&
                 s.inverse_coefficients.t == Scalar::one(f),
             "group:Z2: case (ii) gives (C', T') = (" + to_string(s.inverse_coefficients.c) + ", " +
                 to_string(s.inverse_coefficients.t) + ")");
    c.expect(s.ybe_ok && s.inverse_ok, "group:Z2: case (ii) YBE/inverse check fails");
  });
  return c.take();
}

// ---------------------------------------------------------------- 6

CriterionResult deformation_suite() {
  Checker c(6, "deformation suite");
  for (const std::string name : {"complex", "group:Z2"}) {
    c.guard(name, [&] {
      auto alg = load(name);
      const FieldSpec f = alg.field();
      auto space = deformation_constraint_space(alg);
      c.expect(space.dim() == 5, name + ": constraint space has dimension " + std::to_string(space.dim()));
      const Scalar two = Scalar::from_int(f, 2);
      for (std::size_t k = 0; k < space.basis().size(); ++k) {
        auto cochain = Cochain::from_coordinates(alg, 2, space.basis()[k]);
        const LinMap& phi1 = cochain[0];
        const LinMap& phi2 = cochain[1];
        const std::string tag = name + " basis " + std::to_string(k);
        auto r = deformed_r(alg, phi1, phi2, Scalar::one(f), Scalar::one(f));
        c.expect(r.ybe_ok, tag + ": deformed R fails the YBE mod t^2" + (r.witness ? ", " + *r.witness : ""));
        // λ^1_{bb} = φ1 entry (0, 3) and γ_1^{bb} = φ2 entry (3, 0), b the second basis element.
        const Scalar sum = phi1.at(0, 3) + phi2.at(3, 0);
        const DualScalar want{two, name == "group:Z2" ? two * sum : -(two * sum)};
        const DualScalar got = delta1_of(alg, phi1, phi2);
        c.expect(got == want, tag + ": delta1 = " + to_string(got) + ", closed form gives " + to_string(want));
        if (name == "complex") {
          // 3γ_i^{11} + 2λ^i_{ii} + γ_i^{ii} = 0
          const Scalar relation = Scalar::from_int(f, 3) * phi2.at(0, 1) + two * phi1.at(1, 3) + phi2.at(3, 1);
          c.expect(relation.is_zero(), tag + ": relation 3γ_i^{11} + 2λ^i_{ii} + γ_i^{ii} = " + to_string(relation));
        }
      }
    });
  }
  return c.take();
}

// ---------------------------------------------------------------- 7

Cochain random_combination(RandomSource& rng, const FrobeniusAlgebra& alg, const std::vector<Cochain>& basis,
                           unsigned degree) {
  Vector coords(cochain_dimension(alg.dim(), degree), Scalar::zero(alg.field()));
  for (const auto& b : basis) {
    const Scalar s = rng.scalar(alg.field());
    const Vector bc = b.coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += s * bc[i];
  }
  return Cochain::from_coordinates(alg, degree, coords);
}

// ker d^{2,1} as a subspace of Hom(A⊗A, A) coordinates.
Subspace d21_kernel(const FrobeniusAlgebra& alg) {
  const std::size_t n = ipow(alg.dim(), 3);
  Matrix m(alg.field(), ipow(alg.dim(), 4), n);
  for (std::size_t k = 0; k < n; ++k) {
    LinMap e(alg.field(), alg.dim(), 2, 1);
    e.set(k / ipow(alg.dim(), 2), k % ipow(alg.dim(), 2), Scalar::one(alg.field()));
    const LinMap image = d21(alg, e);
    Vector col;
    col.reserve(image.rows() * image.cols());
    for (std::size_t r = 0; r < image.rows(); ++r) {
      for (std::size_t cc = 0; cc < image.cols(); ++cc) col.push_back(image.at(r, cc));
    }
    m.set_column(k, col);
  }
  return kernel(m);
}

CriterionResult property_suites(const AcceptanceOptions& opt) {
  Checker c(7, "property suites (" + std::to_string(opt.cases) + " cases each)");
  RandomSource rng(opt.seed);
  const std::vector<std::pair<std::string, std::optional<FieldSpec>>> small{
      {"complex", std::nullopt}, {"poly:2", std::nullopt}, {"group:Z2", std::nullopt}, {"poly:2", gf2()}};

  for (const auto& [name, field] : small) {
    c.guard(name, [&, &name = name, &field = field] {
      auto alg = load(name, field);
      const std::string tag = label(alg);
      const auto z2 = cocycle_basis(alg, 2, Variant::N);
      std::size_t obstruction_bad = 0, deform3_bad = 0, equivalence_bad = 0, cocycles_seen = 0;
      for (std::size_t i = 0; i < opt.cases; ++i) {
        Cochain phi = i % 2 == 0 ? rng.cochain(alg, 2) : random_combination(rng, alg, z2, 2);
        auto obs = primary_obstruction(alg, phi[0], phi[1]);
        auto v1 = d2(alg, phi, Variant::N);
        auto v2 = d2(alg, phi, Variant::Mirror);
        if (!(obs.cochain() == v1 && obs.xi2_prime == v2[1] && obs.xi1 == v2[0] && obs.xi3 == v2[2])) {
          ++obstruction_bad;
        }
        if (!d3(alg, obs.cochain()).is_zero()) ++deform3_bad;
        const bool cocycle = v1.is_zero() && v2.is_zero();
        cocycles_seen += cocycle;
        const bool frob = check_frobenius_mod_t2({alg.mu(), phi[0]}, {alg.delta(), phi[1]});
        if (frob != cocycle) ++equivalence_bad;
      }
      c.expect(obstruction_bad == 0, tag + ": obstruction differs from D2 on " + std::to_string(obstruction_bad) +
                                         " samples");
      c.expect(deform3_bad == 0, tag + ": D3 of the obstruction is nonzero on " + std::to_string(deform3_bad) +
                                     " samples");
      c.expect(equivalence_bad == 0, tag + ": cocycle <=> Frobenius mod t^2 fails on " +
                                         std::to_string(equivalence_bad) + " samples");
      c.expect(cocycles_seen > 0, tag + ": no cocycles sampled");

      // Pointwise identities for degree-1 cochains.
      const Vector one = alg.presentation().unit_vector;
      std::size_t unit_identity_bad = 0;
      for (std::size_t i = 0; i < opt.cases; ++i) {
        LinMap h = rng.linmap(alg.field(), alg.dim(), 1, 1);
        LinMap first = d11(alg, h);
        const Vector h1 = h.apply(one);
        bool ok = first.apply(kron(one, one)) == h1;
        for (std::size_t b = 0; b < alg.dim(); ++b) {
          const Vector x = alg.basis_vector(b);
          const Vector want = alg.multiply(h1, x);
          ok = ok && first.apply(kron(one, x)) == want && first.apply(kron(x, one)) == want;
        }
        unit_identity_bad += !ok;
      }
      c.expect(unit_identity_bad == 0, tag + ": d11(h)(1⊗x) = h(1)x fails on " + std::to_string(unit_identity_bad) + " samples");

      // Degree-2 pointwise identities for Hochschild cocycles φ1 (commutative algebras).
      if (alg.commutative()) {
        const Subspace ker = d21_kernel(alg);
        std::size_t cocycle_identity_bad = 0;
        for (std::size_t i = 0; i < opt.cases; ++i) {
          Vector coords(ker.ambient_dim(), Scalar::zero(alg.field()));
          for (const auto& b : ker.basis()) {
            const Scalar s = rng.scalar(alg.field());
            for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += s * b[j];
          }
          LinMap phi1(alg.field(), alg.dim(), 2, 1);
          for (std::size_t j = 0; j < coords.size(); ++j) phi1.set(j / phi1.cols(), j % phi1.cols(), coords[j]);
          auto at = [&](const Vector& a, const Vector& b) { return phi1.apply(kron(a, b)); };
          bool ok = true;
          for (std::size_t b = 0; b < alg.dim(); ++b) {
            const Vector x = alg.basis_vector(b);
            const Vector x2 = alg.multiply(x, x);
            ok = ok && alg.multiply(x, at(one, one)) == at(one, x) && at(one, x) == at(x, one);
            ok = ok && at(x2, x) == at(x, x2) && at(one, x2) == alg.multiply(x, at(one, x));
          }
          cocycle_identity_bad += !ok;
        }
        c.expect(cocycle_identity_bad == 0, tag + ": pointwise identities for d21-cocycles fail on " +
                                     std::to_string(cocycle_identity_bad) + " samples");
      }
    });
  }

  // Degree-1 cocycles on k[x]/(x²), where γ(1) = 1⊗x + x⊗1: h(x) = α·1 with 2α = 0.
  for (const auto& field : {FieldSpec::rationals(), gf2()}) {
    c.guard("poly:2 Z1", [&] {
      auto alg = load("poly:2", field);
      const Vector x = alg.basis_vector(1);
      for (const auto& h : cocycle_basis(alg, 1, Variant::N)) {
        const Vector hx = h[0].apply(x);
        const bool scalar_multiple = hx[1].is_zero();
        const bool two_alpha = (Scalar::from_int(alg.field(), 2) * hx[0]).is_zero();
        c.expect(scalar_multiple && two_alpha, label(alg) + ": degree-1 cocycle with h(x) = " +
                                                   format_element(alg.presentation(), hx));
      }
    });
  }

  // tensorlin: rank–nullity and the interchange law.
  {
    const FieldSpec q = FieldSpec::rationals();
    std::size_t bad_rank = 0, bad_interchange = 0;
    for (std::size_t i = 0; i < opt.cases; ++i) {
      const std::size_t d = 2 + i % 2;
      LinMap f = rng.linmap(q, d, 1 + i % 2, 1, 0.4);
      bad_rank += rank(f) + kernel(f).dim() != f.cols();
      LinMap a = rng.linmap(q, d, 1, 1), b = rng.linmap(q, d, 1, 1), g = rng.linmap(q, d, 1, 1),
             h = rng.linmap(q, d, 1, 1);
      bad_interchange += compose(tensor(a, b), tensor(g, h)) != tensor(compose(a, g), compose(b, h));
    }
    c.expect(bad_rank == 0, "rank-nullity fails on " + std::to_string(bad_rank) + " samples");
    c.expect(bad_interchange == 0, "interchange law fails on " + std::to_string(bad_interchange) + " samples");
  }
  return c.take();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  auto add = [&](CriterionResult r) {
    if (progress) progress(r);
    out.push_back(std::move(r));
  };
  add(axiom_suite());
  add(constants());
  add(cohomology_regression());
  add(chain_identities(options.deep));
  add(ybe_suite());
  add(deformation_suite());
  add(property_suites(options));
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  std::string out = std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.number) + "  " + r.title + "\n";
  for (const auto& d : r.details) out += "        - " + d + "\n";
  for (const auto& d : r.discrepancies) out += "        ~ " + d + "\n";
  return out;
}

}  // namespace frobcoh::cli
