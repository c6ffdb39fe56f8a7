#include "frobcoh/yangbaxter.hpp"

namespace frobcoh {

std::string to_string(RKind kind) {
  switch (kind) {
    case RKind::DeltaMu: return "delta-mu";
    case RKind::TauDeltaMu: return "tau-delta-mu";
    case RKind::Sandwich: return "sandwich";
    case RKind::Skein: return "skein";
  }
  return "?";
}

namespace {

LinMap delta_mu(const FrobeniusAlgebra& alg) { return compose(alg.delta(), alg.mu()); }
LinMap gamma_beta(const FrobeniusAlgebra& alg) { return compose(alg.gamma(), alg.beta()); }

LinMap skein_map(const FrobeniusAlgebra& alg, const SkeinCoefficients& k) {
  return k.a * alg.identity(2) + k.b * gamma_beta(alg) + k.c * delta_mu(alg) + k.t * alg.tau();
}

void require_symmetric(const FrobeniusAlgebra& alg, const char* what) {
  if (!alg.symmetric()) {
    throw Error(ErrorCode::NotSymmetric, std::string(what) + " needs a symmetric Frobenius form; " + alg.id() +
                                             " is not symmetric");
  }
}

const Scalar& require_scalar_handle(const FrobeniusAlgebra& alg) {
  if (!alg.scalar_handle()) {
    throw Error(ErrorCode::NoScalarHandle, "handle element of " + alg.id() + " is " +
                                               format_element(alg.presentation(), alg.handle_element()) +
                                               ", not a multiple of the unit");
  }
  return *alg.scalar_handle();
}

/// Roots of x² + b·x + c in the field, distinct, in a fixed order.
std::vector<Scalar> quadratic_roots(const Scalar& b, const Scalar& c) {
  const FieldSpec field = b.field();
  std::vector<Scalar> roots;
  if (field.characteristic() == 2) {
    // No 1/2; GF(2) has two elements, so just try them.
    for (std::int64_t v = 0; v < 2; ++v) {
      Scalar x = Scalar::from_int(field, v);
      if ((x * x + b * x + c).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  const Scalar two = Scalar::from_int(field, 2);
  const Scalar disc = b * b - Scalar::from_int(field, 4) * c;
  auto s = sqrt_in_field(disc);
  if (!s) return roots;
  roots.push_back((-b + *s) / two);
  if (!s->is_zero()) roots.push_back((-b - *s) / two);
  return roots;
}

bool two_sided_inverse(const LinMap& r, const LinMap& r_inv) {
  const LinMap id = LinMap::identity(r.field(), r.dim(), 2);
  return compose(r, r_inv) == id && compose(r_inv, r) == id;
}

}  // namespace

LinMap rebuild(const FrobeniusAlgebra& alg, RKind kind, const std::optional<SkeinCoefficients>& coefficients) {
  switch (kind) {
    case RKind::DeltaMu: return delta_mu(alg);
    case RKind::TauDeltaMu: return compose(alg.tau(), delta_mu(alg));
    case RKind::Sandwich: return compose_layers({{alg.mu(), 0, 1}, {alg.tau(), 1, 0}, {alg.delta(), 0, 1}});
    case RKind::Skein:
      if (!coefficients) throw Error(ErrorCode::InvalidArgument, "skein R-matrix without coefficients");
      return skein_map(alg, *coefficients);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown R-matrix kind");
}

bool provenance_consistent(const FrobeniusAlgebra& alg, const RMatrix& r) {
  return rebuild(alg, r.kind, r.coefficients) == r.map;
}

YbeResult check_ybe(const LinMap& r) {
  if (r.dom_arity() != 2 || r.cod_arity() != 2) throw Error(ErrorCode::ArityMismatch, "R must map A⊗A to A⊗A");
  const LinMap lhs = compose_layers({{r, 0, 1}, {r, 1, 0}, {r, 0, 1}});
  const LinMap rhs = compose_layers({{r, 1, 0}, {r, 0, 1}, {r, 1, 0}});
  YbeResult out;
  for (std::size_t i = 0; i < lhs.rows() && out.holds; ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs.at(i, j) != rhs.at(i, j)) {
        out.holds = false;
        out.witness = YbeWitness{i, j, lhs.at(i, j), rhs.at(i, j)};
        break;
      }
    }
  }
  return out;
}

RMatrix r_delta_mu(const FrobeniusAlgebra& alg) { return {RKind::DeltaMu, std::nullopt, delta_mu(alg)}; }

RMatrix r_tau_delta_mu(const FrobeniusAlgebra& alg) {
  require_symmetric(alg, "τΔμ");
  return {RKind::TauDeltaMu, std::nullopt, rebuild(alg, RKind::TauDeltaMu, std::nullopt)};
}

RMatrix r_sandwich(const FrobeniusAlgebra& alg) {
  require_symmetric(alg, "the sandwich R-matrix");
  return {RKind::Sandwich, std::nullopt, rebuild(alg, RKind::Sandwich, std::nullopt)};
}

RMatrix r_skein(const FrobeniusAlgebra& alg, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& t) {
  SkeinCoefficients k{a, b, c, t};
  return {RKind::Skein, k, skein_map(alg, k)};
}

std::optional<LinMap> invert(const LinMap& r) { return inverse(r); }

std::vector<SkeinSolution> solve_skein_case_i(const FrobeniusAlgebra& alg) {
  require_scalar_handle(alg);
  const FieldSpec field = alg.field();
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);
  // A = 1: A² + B² + δ0·AB = 0 becomes B² + δ0·B + 1 = 0.
  auto roots = quadratic_roots(alg.delta0(), one);
  if (roots.empty()) {
    throw Error(ErrorCode::NoSolutionInField, "B² + " + to_string(alg.delta0()) + "·B + 1 has no root in " +
                                                  field.name());
  }
  std::vector<SkeinSolution> out;
  for (const auto& b : roots) {
    // A' = 1/A = 1 and A·B' + A'·B + δ0·B·B' = 0, i.e. B'(1 + δ0·B) = −B.
    const Scalar denom = one + alg.delta0() * b;
    if (denom.is_zero()) throw Error(ErrorCode::SingularCoefficient, "1 + δ0·B vanishes");
    const Scalar b_inv = -b / denom;
    SkeinSolution s{{one, b, zero, zero}, {one, b_inv, zero, zero}, r_skein(alg, one, b, zero, zero),
                     r_skein(alg, one, b_inv, zero, zero)};
    s.ybe_ok = check_ybe(s.r).holds && check_ybe(s.r_inverse).holds;
    s.inverse_ok = two_sided_inverse(s.r.map, s.r_inverse.map);
    out.push_back(std::move(s));
  }
  return out;
}

SkeinSolution solve_skein_case_ii(const FrobeniusAlgebra& alg, const Scalar& c, const Scalar& t) {
  if (!alg.commutative()) throw Error(ErrorCode::NotCommutative, alg.id() + " is not commutative");
  const Scalar& delta1 = require_scalar_handle(alg);
  if (c.is_zero() || t.is_zero()) throw Error(ErrorCode::ZeroParameter, "C and T must be nonzero");
  const FieldSpec field = alg.field();
  const Scalar zero = Scalar::zero(field);
  const Scalar denom = t + delta1 * c;
  if (denom.is_zero()) {
    throw Error(ErrorCode::SingularCoefficient,
                "T + δ1·C = " + to_string(t) + " + " + to_string(delta1) + "·" + to_string(c) + " = 0");
  }
  // T·T' = 1 and C·T' + C'·T + δ1·C·C' = 0.
  const Scalar t_inv = t.inverse();
  const Scalar c_inv = -(c * t_inv) / denom;
  SkeinSolution s{{zero, zero, c, t}, {zero, zero, c_inv, t_inv}, r_skein(alg, zero, zero, c, t),
                  r_skein(alg, zero, zero, c_inv, t_inv)};
  s.ybe_ok = check_ybe(s.r).holds && check_ybe(s.r_inverse).holds;
  s.inverse_ok = two_sided_inverse(s.r.map, s.r_inverse.map);
  return s;
}

std::vector<AxiomCheck> temperley_lieb_checks(const FrobeniusAlgebra& alg) {
  const LinMap e = gamma_beta(alg);
  const LinMap h = delta_mu(alg);
  std::vector<AxiomCheck> out;
  out.push_back({"gamma_beta_squared", compose(e, e) == alg.delta0() * e});
  if (alg.scalar_handle()) {
    const Scalar& d1 = *alg.scalar_handle();
    out.push_back({"delta_mu_squared", compose(h, h) == d1 * h});
    out.push_back({"delta_mu_gamma_beta", compose(h, e) == d1 * e});
    out.push_back({"gamma_beta_delta_mu", compose(e, h) == d1 * e});
  }
  return out;
}

}  // namespace frobcoh
