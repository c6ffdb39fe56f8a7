#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/scalar.hpp"
#include "frobcoh/tensorlin.hpp"

namespace frobcoh {

/// Raw structure constants of a unital algebra with a candidate Frobenius
/// form. Nothing is checked until validate().
struct AlgebraPresentation {
  std::string id;  // e.g. "group:Z2"; used in reports
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> basis_names;
  /// λ^c_{ab} stored at (a*d + b)*d + c, so e_a e_b = Σ_c λ^c_{ab} e_c.
  std::vector<Scalar> mul_constants;
  std::vector<Scalar> unit_vector;
  std::vector<Scalar> counit_vector;

  std::size_t dim() const { return basis_names.size(); }
  const Scalar& lambda(std::size_t a, std::size_t b, std::size_t c) const {
    return mul_constants[(a * dim() + b) * dim() + c];
  }
  Scalar& lambda(std::size_t a, std::size_t b, std::size_t c) { return mul_constants[(a * dim() + b) * dim() + c]; }

  /// Zero-initialized presentation over `field` with the given basis.
  static AlgebraPresentation empty(std::string id, FieldSpec field, std::vector<std::string> names);

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;
};

struct HandleData {
  Vector handle_element;                // δ_h = μγ(1)
  Scalar delta0;                        // δ_0 = βγ(1)
  std::optional<Scalar> scalar_handle;  // δ_1 when δ_h = δ_1·1
};

/// A Frobenius algebra whose axioms have all been verified exactly.
class FrobeniusAlgebra {
 public:
  const AlgebraPresentation& presentation() const { return pres_; }
  const std::string& id() const { return pres_.id; }
  const FieldSpec& field() const { return pres_.field; }
  std::size_t dim() const { return pres_.dim(); }

  const LinMap& mu() const { return mu_; }
  const LinMap& eta() const { return eta_; }
  const LinMap& epsilon() const { return epsilon_; }
  const LinMap& beta() const { return beta_; }
  const LinMap& gamma() const { return gamma_; }
  const LinMap& delta() const { return delta_; }
  const LinMap& tau() const { return tau_; }
  const LinMap& id1() const { return id1_; }
  LinMap identity(unsigned arity) const { return LinMap::identity(field(), dim(), arity); }

  const Scalar& delta0() const { return handle_.delta0; }
  const Vector& handle_element() const { return handle_.handle_element; }
  const std::optional<Scalar>& scalar_handle() const { return handle_.scalar_handle; }
  const HandleData& handle() const { return handle_; }

  bool symmetric() const { return symmetric_; }
  bool commutative() const { return commutative_; }

  /// Matrix of left multiplication by an element.
  LinMap left_multiplication(std::span<const Scalar> x) const;
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Vector basis_vector(std::size_t i) const;

 private:
  friend FrobeniusAlgebra validate(const AlgebraPresentation& pres);
  explicit FrobeniusAlgebra(AlgebraPresentation pres);

  AlgebraPresentation pres_;
  LinMap mu_, eta_, epsilon_, beta_, gamma_, delta_, tau_, id1_;
  HandleData handle_;
  bool symmetric_ = false;
  bool commutative_ = false;
};

/// Checks associativity, the unit law and nondegeneracy, derives γ, Δ and
/// the handle data, and asserts every Frobenius identity exactly.
/// Throws NotAssociative (witness triple), UnitLawFails, DegeneratePairing,
/// DimensionMismatch for malformed shapes, VerificationFailed if a derived
/// identity does not hold.
FrobeniusAlgebra validate(const AlgebraPresentation& pres);

struct AxiomCheck {
  std::string name;
  bool holds;
};

/// Every Frobenius identity as a named exact matrix check.
std::vector<AxiomCheck> verify_axioms(const FrobeniusAlgebra& alg);

HandleData handle_data(const FrobeniusAlgebra& alg);

/// Formats a coordinate vector as a linear combination of basis names.
std::string format_element(const AlgebraPresentation& pres, std::span<const Scalar> v);
/// Same for an element of A⊗A, with terms written a⊗b.
std::string format_tensor2(const AlgebraPresentation& pres, std::span<const Scalar> v);

// ---------------------------------------------------------------- builders

/// C over Q with basis {1, i}, ε(1) = 1, ε(i) = 0.
AlgebraPresentation build_complex();
/// k[x]/(x^n) with ε(x^{n-1}) = 1.
AlgebraPresentation build_poly(int n, FieldSpec field);
/// Group algebra from a multiplication table (table[a][b] = index of g_a g_b),
/// ε = indicator of the identity. Throws NotAGroup.
AlgebraPresentation build_group(const std::vector<std::vector<std::size_t>>& table, FieldSpec field,
                                std::vector<std::string> names, std::string id);
AlgebraPresentation build_cyclic_group(int n, FieldSpec field);
/// QS3 (or kS3) with basis order (e, x, y, xy, yx, xyx) and ε(e) = 1.
AlgebraPresentation build_s3(FieldSpec field);
/// QS3 with the alternative form ε(xyx) = 1, else 0.
AlgebraPresentation build_s3_alt();
/// k<x,y>/(x², y², yx - q xy) over Q(i) with q = -A^{-2}, ε(xy) = iA.
AlgebraPresentation build_qpoly(const Scalar& a);
/// Replaces the counit by ε(a) = trace of left multiplication by a.
/// Throws DegeneratePairing when the trace form is degenerate.
AlgebraPresentation trace_form(const AlgebraPresentation& pres);

/// Multiplication table of S3 in the order (e, x, y, xy, yx, xyx).
std::vector<std::vector<std::size_t>> s3_table();

}  // namespace frobcoh
