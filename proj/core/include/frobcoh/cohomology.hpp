#pragma once

// Frobenius cochains C^n = ⊕_{0<i≤n} Hom(A^{⊗(n+1-i)}, A^{⊗i}) and the
// explicit differentials in degrees 1 to 3, plus the degree-4 components
// that have closed forms.

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/frobenius.hpp"

namespace frobcoh {

/// Element of C^n. components[i-1] lies in Hom(A^{⊗(n+1-i)}, A^{⊗i}).
struct Cochain {
  unsigned degree = 0;
  std::vector<LinMap> components;

  static Cochain zero(const FrobeniusAlgebra& alg, unsigned degree);
  /// Coordinates are the components' row-major entries, concatenated.
  static Cochain from_coordinates(const FrobeniusAlgebra& alg, unsigned degree, std::span<const Scalar> coords);
  Vector coordinates() const;
  bool is_zero() const;

  const LinMap& operator[](std::size_t i) const { return components[i]; }

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// dim C^n = n·d^{n+1}.
std::size_t cochain_dimension(std::size_t d, unsigned degree);

/// Which compatibility shape the degree-2 differential uses: the "N"
/// (μ⊗|)(|⊗Δ) or its mirror (|⊗μ)(Δ⊗|).
enum class Variant { N = 1, Mirror = 2 };

Variant parse_variant(int v);

// Individual components.
LinMap d11(const FrobeniusAlgebra& alg, const LinMap& h);
LinMap d12(const FrobeniusAlgebra& alg, const LinMap& h);
LinMap d21(const FrobeniusAlgebra& alg, const LinMap& phi1);
LinMap d22(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2, Variant variant);
LinMap d23(const FrobeniusAlgebra& alg, const LinMap& phi2);
LinMap d31(const FrobeniusAlgebra& alg, const LinMap& xi1);
LinMap d32(const FrobeniusAlgebra& alg, const LinMap& xi1, const LinMap& xi2);
/// ξ3μ + (|⊗Δ)ξ2 − (ξ2⊗|)(|⊗Δ) − (Δ⊗|)ξ2 − (μ⊗|⊗|)(|⊗ξ3): the shape that
/// matches d^{2,2}_{(1)}, so that d^{3,3}(d^{2,2}_{(1)}, d^{2,3}) = 0.
LinMap d33(const FrobeniusAlgebra& alg, const LinMap& xi2, const LinMap& xi3);
/// ξ3μ + (|⊗Δ)ξ2 + (|⊗ξ2)(Δ⊗|) − (Δ⊗|)ξ2 − (|⊗|⊗μ)(ξ3⊗|). Built from the
/// mirror compatibility shape; it annihilates (d^{2,2}_{(2)}, d^{2,3}) but not
/// the N variant. Kept for comparison, never used by D_3.
LinMap d33_mirror(const FrobeniusAlgebra& alg, const LinMap& xi2, const LinMap& xi3);
LinMap d34(const FrobeniusAlgebra& alg, const LinMap& xi3);
LinMap d41(const FrobeniusAlgebra& alg, const LinMap& zeta1);
LinMap d42(const FrobeniusAlgebra& alg, const LinMap& zeta1, const LinMap& zeta2);
LinMap d44(const FrobeniusAlgebra& alg, const LinMap& zeta3, const LinMap& zeta4);
LinMap d45(const FrobeniusAlgebra& alg, const LinMap& zeta4);
/// d^{4,2} and d^{4,4} with the sign pattern that makes them vanish on the
/// image of D_3: the ζ2 terms alternate as in a Hochschild differential.
///   d42_signed = Δζ1 + ζ2(|⊗|⊗μ) − (μ⊗|)(|⊗ζ2) − (ζ1⊗|)(|^{⊗3}⊗Δ) + ζ2(μ⊗|⊗|) − ζ2(|⊗μ⊗|)
///   d44_signed = ζ4μ + (|⊗|⊗Δ)ζ3 − (ζ3⊗|)(|⊗Δ) − (μ⊗|^{⊗3})(|⊗ζ4) + (Δ⊗|⊗|)ζ3 − (|⊗Δ⊗|)ζ3
LinMap d42_signed(const FrobeniusAlgebra& alg, const LinMap& zeta1, const LinMap& zeta2);
LinMap d44_signed(const FrobeniusAlgebra& alg, const LinMap& zeta3, const LinMap& zeta4);

/// D_1(h) = (d^{1,1}h, -d^{1,2}h).
Cochain d1(const FrobeniusAlgebra& alg, const Cochain& h);
/// D_2^{(v)}(φ1, φ2) = (d^{2,1}φ1, d^{2,2}_{(v)}(φ1, φ2), d^{2,3}φ2).
Cochain d2(const FrobeniusAlgebra& alg, const Cochain& c, Variant variant);
/// D_3 (N variant): (d^{3,1}, d^{3,2}, d^{3,3}, d^{3,4}).
Cochain d3(const FrobeniusAlgebra& alg, const Cochain& c);

/// The degree-5 components that have explicit formulas. C^{5,3} is absent.
struct PartialDegree5 {
  LinMap c1;  // d^{4,1}: Hom(A^{⊗5}, A)
  LinMap c2;  // d^{4,2}: Hom(A^{⊗4}, A^{⊗2})
  LinMap c4;  // d^{4,4}: Hom(A^{⊗2}, A^{⊗4})
  LinMap c5;  // d^{4,5}: Hom(A, A^{⊗5})
};
PartialDegree5 d4_partial(const FrobeniusAlgebra& alg, const Cochain& c);

/// D_n applied to a cochain of degree n (n = 1, 2, 3; variant only affects n = 2).
Cochain differential(const FrobeniusAlgebra& alg, const Cochain& c, Variant variant);

/// Matrix of D_n on the coordinate bases of C^n and C^{n+1}.
Matrix differential_matrix(const FrobeniusAlgebra& alg, unsigned degree, Variant variant);

/// rank D_n, computed column by column with sparse elimination.
std::size_t differential_rank(const FrobeniusAlgebra& alg, unsigned degree, Variant variant);

struct DegreeDims {
  unsigned degree;
  std::size_t dim_z;
  std::size_t dim_b;
  std::ptrdiff_t dim_h;
};

struct ChainCheck {
  std::string name;  // e.g. "D2D1", "D3D2"
  bool holds = true;
  std::size_t columns_checked = 0;
  std::size_t failing_columns = 0;
  std::string witness;  // first failing column, empty when holds
};

struct ComplexReport {
  std::string algebra_id;
  Variant variant = Variant::N;
  std::vector<DegreeDims> degrees;
  std::vector<ChainCheck> chain_checks;
};

/// dim Z^n, B^n, H^n for n = 1..max_degree (max_degree ≤ 3), plus the chain
/// identities D_{n+1}D_n = 0 for every n < max_degree.
ComplexReport cohomology_dims(const FrobeniusAlgebra& alg, unsigned max_degree, Variant variant);

/// Echelonized basis of Z^n lifted back to cochains.
std::vector<Cochain> cocycle_basis(const FrobeniusAlgebra& alg, unsigned degree, Variant variant);

/// D_{n+1} ∘ D_n = 0 checked column by column on the basis of C^n
/// (n = 1 gives D2D1, n = 2 gives D3D2).
ChainCheck chain_identity(const FrobeniusAlgebra& alg, unsigned n, Variant variant);

/// Component checks of D4 ∘ D3 on the basis of C^3:
/// d^{4,1}d^{3,1}, d^{4,2}(d^{3,1}, d^{3,2}), d^{4,4}(d^{3,3}, d^{3,4}), d^{4,5}d^{3,4},
/// then the same two middle checks with the signed forms.
std::vector<ChainCheck> degree4_component_checks(const FrobeniusAlgebra& alg);

}  // namespace frobcoh
