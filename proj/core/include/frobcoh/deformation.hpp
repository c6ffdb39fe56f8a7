#pragma once

// First-order deformations over the dual numbers k[t]/(t²).

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/cohomology.hpp"
#include "frobcoh/yangbaxter.hpp"

namespace frobcoh {

/// a0 + a1·t with t² = 0.
struct DualScalar {
  Scalar a0;
  Scalar a1;

  static DualScalar constant(Scalar a) { return {a, Scalar::zero(a.field())}; }

  friend DualScalar operator+(const DualScalar& x, const DualScalar& y) { return {x.a0 + y.a0, x.a1 + y.a1}; }
  friend DualScalar operator-(const DualScalar& x, const DualScalar& y) { return {x.a0 - y.a0, x.a1 - y.a1}; }
  friend DualScalar operator*(const DualScalar& x, const DualScalar& y) {
    return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0};
  }
  /// Throws DivisionByZero when a0 = 0.
  DualScalar inverse() const;
  friend bool operator==(const DualScalar&, const DualScalar&) = default;
};

std::string to_string(const DualScalar& x);

/// f0 + f1·t.
struct DualLinMap {
  LinMap f0;
  LinMap f1;

  static DualLinMap constant(LinMap f);
  static DualLinMap identity(FieldSpec field, std::size_t dim, unsigned arity);

  friend DualLinMap operator+(const DualLinMap& f, const DualLinMap& g) { return {f.f0 + g.f0, f.f1 + g.f1}; }
  friend DualLinMap operator-(const DualLinMap& f, const DualLinMap& g) { return {f.f0 - g.f0, f.f1 - g.f1}; }
  friend DualLinMap operator*(const DualScalar& s, const DualLinMap& f);
  bool is_zero() const { return f0.is_zero() && f1.is_zero(); }
  friend bool operator==(const DualLinMap&, const DualLinMap&) = default;
};

/// g ∘ f = (g0f0, g0f1 + g1f0).
DualLinMap compose(const DualLinMap& g, const DualLinMap& f);
/// f ⊗ g = (f0⊗g0, f0⊗g1 + f1⊗g0).
DualLinMap tensor(const DualLinMap& f, const DualLinMap& g);

struct PrimaryObstruction {
  LinMap xi1;        // associativity defect, A^{⊗3} -> A
  LinMap xi2;        // N-shaped compatibility defect
  LinMap xi2_prime;  // mirror compatibility defect
  LinMap xi3;        // coassociativity defect, A -> A^{⊗3}

  /// (ξ1, ξ2, ξ3) as a degree-3 cochain.
  Cochain cochain() const;
};

/// Order-t defects of (μ + tφ1, Δ + tφ2), computed with dual-number
/// arithmetic (independently of the cochain differentials).
PrimaryObstruction primary_obstruction(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2);

struct FrobeniusDefects {
  DualLinMap associativity;
  DualLinMap compatibility_n;
  DualLinMap compatibility_mirror;
  DualLinMap coassociativity;
};

FrobeniusDefects frobenius_defects(const DualLinMap& mu_t, const DualLinMap& delta_t);

/// Associativity, both compatibilities and coassociativity mod t².
bool check_frobenius_mod_t2(const DualLinMap& mu_t, const DualLinMap& delta_t);

/// (φ1, φ2) in C² satisfying every cocycle condition (d^{2,1}, both d^{2,2},
/// d^{2,3}), φ1τ = φ1, τφ2 = φ2 and μφ2 + φ1Δ ∈ k·|, as a subspace of the
/// degree-2 coordinate space. Throws NotCommutative, NoScalarHandle.
Subspace deformation_constraint_space(const FrobeniusAlgebra& alg);

/// δ1 with (μ + tφ1)(Δ + tφ2) = δ1·| mod t².
/// Throws NoScalarHandle, NotProportionalToIdentity.
DualScalar delta1_of(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2);

struct DeformedR {
  DualLinMap r;  // C·(Δ + tφ2)(μ + tφ1) + T·τ
  bool ybe_ok = false;
  std::optional<std::string> witness;  // first failing entry, order and position
};

/// YBE checked exactly with dual-number arithmetic mod t².
DeformedR deformed_r(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2, const Scalar& c,
                     const Scalar& t);

}  // namespace frobcoh
