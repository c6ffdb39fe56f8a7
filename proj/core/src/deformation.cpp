#include "frobcoh/deformation.hpp"

namespace frobcoh {

DualScalar DualScalar::inverse() const {
  const Scalar inv = a0.inverse();
  return {inv, -(a1 * inv * inv)};
}

std::string to_string(const DualScalar& x) {
  if (x.a1.is_zero()) return to_string(x.a0);
  return to_string(x.a0) + " + " + to_string(x.a1) + "·t";
}

DualLinMap DualLinMap::constant(LinMap f) {
  LinMap zero = LinMap::zero(f.field(), f.dim(), f.dom_arity(), f.cod_arity());
  return {std::move(f), std::move(zero)};
}

DualLinMap DualLinMap::identity(FieldSpec field, std::size_t dim, unsigned arity) {
  return constant(LinMap::identity(field, dim, arity));
}

DualLinMap operator*(const DualScalar& s, const DualLinMap& f) { return {s.a0 * f.f0, s.a0 * f.f1 + s.a1 * f.f0}; }

DualLinMap compose(const DualLinMap& g, const DualLinMap& f) {
  return {compose(g.f0, f.f0), compose(g.f0, f.f1) + compose(g.f1, f.f0)};
}

DualLinMap tensor(const DualLinMap& f, const DualLinMap& g) {
  return {tensor(f.f0, g.f0), tensor(f.f0, g.f1) + tensor(f.f1, g.f0)};
}

Cochain PrimaryObstruction::cochain() const {
  Cochain c;
  c.degree = 3;
  c.components = {xi1, xi2, xi3};
  return c;
}

FrobeniusDefects frobenius_defects(const DualLinMap& mu_t, const DualLinMap& delta_t) {
  const DualLinMap id = DualLinMap::identity(mu_t.f0.field(), mu_t.f0.dim(), 1);
  const DualLinMap mu_l = tensor(mu_t, id), mu_r = tensor(id, mu_t);
  const DualLinMap delta_l = tensor(delta_t, id), delta_r = tensor(id, delta_t);
  const DualLinMap delta_mu = compose(delta_t, mu_t);
  return {
      compose(mu_t, mu_l) - compose(mu_t, mu_r),
      delta_mu - compose(mu_l, delta_r),
      delta_mu - compose(mu_r, delta_l),
      compose(delta_l, delta_t) - compose(delta_r, delta_t),
  };
}

bool check_frobenius_mod_t2(const DualLinMap& mu_t, const DualLinMap& delta_t) {
  if (mu_t.f0.dom_arity() != 2 || mu_t.f0.cod_arity() != 1 || delta_t.f0.dom_arity() != 1 ||
      delta_t.f0.cod_arity() != 2) {
    throw Error(ErrorCode::ArityMismatch, "μ_t must be 2→1 and Δ_t must be 1→2");
  }
  const FrobeniusDefects d = frobenius_defects(mu_t, delta_t);
  return d.associativity.is_zero() && d.compatibility_n.is_zero() && d.compatibility_mirror.is_zero() &&
         d.coassociativity.is_zero();
}

PrimaryObstruction primary_obstruction(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2) {
  if (phi1.dom_arity() != 2 || phi1.cod_arity() != 1 || phi2.dom_arity() != 1 || phi2.cod_arity() != 2) {
    throw Error(ErrorCode::ArityMismatch, "φ1 must be 2→1 and φ2 must be 1→2");
  }
  const FrobeniusDefects d = frobenius_defects({alg.mu(), phi1}, {alg.delta(), phi2});
  // The order-0 parts are the undeformed Frobenius identities.
  if (!d.associativity.f0.is_zero() || !d.compatibility_n.f0.is_zero() || !d.compatibility_mirror.f0.is_zero() ||
      !d.coassociativity.f0.is_zero()) {
    throw Error(ErrorCode::VerificationFailed, "undeformed structure maps are not Frobenius");
  }
  return {d.associativity.f1, d.compatibility_n.f1, d.compatibility_mirror.f1, d.coassociativity.f1};
}

namespace {

void append(SparseVector& out, std::size_t& offset, const LinMap& m) {
  std::size_t r = offset;
  for (const auto& s : m.matrix().data()) {
    if (!s.is_zero()) out.emplace_back(r, s);
    ++r;
  }
  offset = r;
}

const Scalar& require_scalar_handle(const FrobeniusAlgebra& alg) {
  if (!alg.scalar_handle()) {
    throw Error(ErrorCode::NoScalarHandle, "handle element of " + alg.id() + " is " +
                                               format_element(alg.presentation(), alg.handle_element()) +
                                               ", not a multiple of the unit");
  }
  return *alg.scalar_handle();
}

}  // namespace

Subspace deformation_constraint_space(const FrobeniusAlgebra& alg) {
  if (!alg.commutative()) throw Error(ErrorCode::NotCommutative, alg.id() + " is not commutative");
  require_scalar_handle(alg);
  const FieldSpec field = alg.field();
  const std::size_t d = alg.dim();
  const std::size_t n = cochain_dimension(d, 2);
  const LinMap& tau = alg.tau();
  const LinMap id1 = alg.identity(1);

  // Unknowns: the n coordinates of (φ1, φ2), then δ1¹. Column k of the system
  // is the image of the k-th unit vector.
  std::vector<SparseVector> columns;
  std::size_t rows = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    LinMap phi1(field, d, 2, 1), phi2(field, d, 1, 2);
    Scalar aux = Scalar::zero(field);
    if (k < n) {
      Vector coords(n, Scalar::zero(field));
      coords[k] = Scalar::one(field);
      Cochain c = Cochain::from_coordinates(alg, 2, coords);
      phi1 = c[0];
      phi2 = c[1];
    } else {
      aux = Scalar::one(field);
    }
    SparseVector col;
    std::size_t offset = 0;
    append(col, offset, d21(alg, phi1));
    append(col, offset, d22(alg, phi1, phi2, Variant::N));
    append(col, offset, d22(alg, phi1, phi2, Variant::Mirror));
    append(col, offset, d23(alg, phi2));
    append(col, offset, compose(phi1, tau) - phi1);
    append(col, offset, compose(tau, phi2) - phi2);
    append(col, offset, compose(alg.mu(), phi2) + compose(phi1, alg.delta()) - aux * id1);
    rows = offset;
    columns.push_back(std::move(col));
  }

  Matrix system(field, rows, n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& [r, s] : columns[k]) system(r, k) = s;
  }
  Subspace joint = kernel(system);
  // Drop δ1¹. The projection is injective: a solution with φ = 0 forces
  // δ1¹·| = 0, hence δ1¹ = 0.
  std::vector<Vector> projected;
  for (const auto& v : joint.basis()) projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  return Subspace::span(field, n, projected);
}

DualScalar delta1_of(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2) {
  const Scalar& d0 = require_scalar_handle(alg);
  const LinMap first = compose(alg.mu(), phi2) + compose(phi1, alg.delta());
  const Scalar c = first.at(0, 0);
  if (first != c * alg.identity(1)) {
    throw Error(ErrorCode::NotProportionalToIdentity, "μφ2 + φ1Δ is not a multiple of the identity");
  }
  return {d0, c};
}

DeformedR deformed_r(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2, const Scalar& c,
                     const Scalar& t) {
  const DualLinMap mu_t{alg.mu(), phi1};
  const DualLinMap delta_t{alg.delta(), phi2};
  DeformedR out{DualScalar::constant(c) * compose(delta_t, mu_t) +
                    DualScalar::constant(t) * DualLinMap::constant(alg.tau()),
                false, std::nullopt};
  const DualLinMap id = DualLinMap::identity(alg.field(), alg.dim(), 1);
  const DualLinMap r_l = tensor(out.r, id), r_r = tensor(id, out.r);
  const DualLinMap lhs = compose(r_l, compose(r_r, r_l));
  const DualLinMap rhs = compose(r_r, compose(r_l, r_r));
  out.ybe_ok = lhs == rhs;
  if (!out.ybe_ok) {
    for (int order = 0; order < 2 && !out.witness; ++order) {
      const LinMap& a = order == 0 ? lhs.f0 : lhs.f1;
      const LinMap& b = order == 0 ? rhs.f0 : rhs.f1;
      for (std::size_t i = 0; i < a.rows() && !out.witness; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (a.at(i, j) != b.at(i, j)) {
            out.witness = "order t^" + std::to_string(order) + " entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + "): " + to_string(a.at(i, j)) + " vs " + to_string(b.at(i, j));
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace frobcoh
