#pragma once

// R-matrices built from Frobenius structure maps, the Yang-Baxter check, and
// the two invertible skein families.

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/frobenius.hpp"

namespace frobcoh {

struct SkeinCoefficients {
  Scalar a, b, c, t;  // R = a·|⊗| + b·γβ + c·Δμ + t·τ
  friend bool operator==(const SkeinCoefficients&, const SkeinCoefficients&) = default;
};

enum class RKind { DeltaMu, TauDeltaMu, Sandwich, Skein };

std::string to_string(RKind kind);

struct RMatrix {
  RKind kind;
  std::optional<SkeinCoefficients> coefficients;  // set iff kind == Skein
  LinMap map;
};

/// Rebuilds the map named by the provenance; equal to r.map for anything
/// produced by this module.
LinMap rebuild(const FrobeniusAlgebra& alg, RKind kind, const std::optional<SkeinCoefficients>& coefficients);
bool provenance_consistent(const FrobeniusAlgebra& alg, const RMatrix& r);

struct YbeWitness {
  std::size_t row;
  std::size_t col;
  Scalar lhs;
  Scalar rhs;
};

struct YbeResult {
  bool holds = true;
  std::optional<YbeWitness> witness;  // first differing entry when !holds
};

/// (R⊗|)(|⊗R)(R⊗|) = (|⊗R)(R⊗|)(|⊗R), exactly.
YbeResult check_ybe(const LinMap& r);
inline YbeResult check_ybe(const RMatrix& r) { return check_ybe(r.map); }

RMatrix r_delta_mu(const FrobeniusAlgebra& alg);
/// Requires a symmetric algebra (NotSymmetric otherwise).
RMatrix r_tau_delta_mu(const FrobeniusAlgebra& alg);
/// (μ⊗|)(|⊗τ)(Δ⊗|). Requires a symmetric algebra (NotSymmetric otherwise).
RMatrix r_sandwich(const FrobeniusAlgebra& alg);
RMatrix r_skein(const FrobeniusAlgebra& alg, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& t);

/// Exact inverse, or nullopt when singular.
std::optional<LinMap> invert(const LinMap& r);
inline std::optional<LinMap> invert(const RMatrix& r) { return invert(r.map); }

struct SkeinSolution {
  SkeinCoefficients coefficients;
  SkeinCoefficients inverse_coefficients;
  RMatrix r;
  RMatrix r_inverse;
  bool ybe_ok = false;      // both R and R' satisfy the YBE
  bool inverse_ok = false;  // R·R' = R'·R = |⊗|
};

/// R = |⊗| + B·γβ with B² + δ0·B + 1 = 0 (A normalized to 1) and its inverse
/// |⊗| + B'·γβ. One solution per distinct root.
/// Throws NoScalarHandle, NoSolutionInField.
std::vector<SkeinSolution> solve_skein_case_i(const FrobeniusAlgebra& alg);

/// R = C·Δμ + T·τ with inverse C'·Δμ + T'·τ, T' = 1/T, C' = −C·T'/(T + δ1·C).
/// Throws NotCommutative, NoScalarHandle, ZeroParameter, SingularCoefficient.
SkeinSolution solve_skein_case_ii(const FrobeniusAlgebra& alg, const Scalar& c, const Scalar& t);

/// (γβ)² = δ0·γβ, and with a scalar handle (Δμ)² = δ1·Δμ,
/// (Δμ)(γβ) = δ1·γβ = (γβ)(Δμ).
std::vector<AxiomCheck> temperley_lieb_checks(const FrobeniusAlgebra& alg);

}  // namespace frobcoh
