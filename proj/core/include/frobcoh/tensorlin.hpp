#pragma once

// Dense exact linear algebra on tensor powers of a d-dimensional space.
//
// The basis of A^{⊗k} is ordered lexicographically with the leftmost tensor
// factor most significant: e_{a_1}⊗...⊗e_{a_k} has index
// a_1 d^{k-1} + ... + a_k. A map A^{⊗m} -> A^{⊗n} is a d^n x d^m matrix.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "frobcoh/scalar.hpp"

namespace frobcoh {

std::size_t ipow(std::size_t base, unsigned exp);

using Vector = std::vector<Scalar>;

/// Row-major matrix of scalars over one field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> data() const { return data_; }
  std::span<Scalar> data() { return data_; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

/// A linear map A^{⊗dom} -> A^{⊗cod}; arity 0 is the ground field.
class LinMap {
 public:
  LinMap(FieldSpec field, std::size_t dim, unsigned dom_arity, unsigned cod_arity);
  LinMap(std::size_t dim, unsigned dom_arity, unsigned cod_arity, Matrix entries);

  static LinMap identity(FieldSpec field, std::size_t dim, unsigned arity);
  static LinMap zero(FieldSpec field, std::size_t dim, unsigned dom_arity, unsigned cod_arity) {
    return LinMap(field, dim, dom_arity, cod_arity);
  }

  const FieldSpec& field() const { return m_.field(); }
  std::size_t dim() const { return dim_; }
  unsigned dom_arity() const { return dom_; }
  unsigned cod_arity() const { return cod_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }

  const Scalar& at(std::size_t row, std::size_t col) const { return m_(row, col); }
  void set(std::size_t row, std::size_t col, Scalar s) { m_(row, col) = std::move(s); }
  void add_to(std::size_t row, std::size_t col, const Scalar& s) { m_(row, col) += s; }
  const Matrix& matrix() const { return m_; }

  /// Image of a domain basis vector.
  Vector apply(std::span<const Scalar> v) const;
  bool is_zero() const { return m_.is_zero(); }

  LinMap operator-() const;
  LinMap& operator+=(const LinMap& other);
  LinMap& operator-=(const LinMap& other);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(const Scalar& s, const LinMap& f);

  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  std::size_t dim_;
  unsigned dom_;
  unsigned cod_;
  Matrix m_;
};

/// g ∘ f. Throws ArityMismatch / FieldMismatch / DimensionMismatch.
LinMap compose(const LinMap& g, const LinMap& f);
/// f ⊗ g (Kronecker product, left factor most significant).
LinMap tensor(const LinMap& f, const LinMap& g);
/// The flip e_a⊗e_b -> e_b⊗e_a.
LinMap transposition(FieldSpec field, std::size_t dim);

/// |^{⊗left} ⊗ map ⊗ |^{⊗right}, without materializing the padding.
struct Layer {
  const LinMap& map;
  unsigned left = 0;
  unsigned right = 0;
};

/// Composite L_1 ∘ L_2 ∘ ... ∘ L_k of padded layers (written order; the last
/// layer is applied first). Sparse column propagation, so the cost follows
/// the number of nonzeros rather than the padded sizes.
LinMap compose_layers(std::initializer_list<Layer> layers);

/// Linear subspace of k^n in reduced row-echelon form.
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}
  /// Span of arbitrary vectors (echelonized).
  static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// In-place reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

/// Sparse vector as (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental row echelon form over sparse vectors; used to rank tall,
/// very sparse matrices (differentials) without materializing them.
class SparseEchelon {
 public:
  explicit SparseEchelon(FieldSpec field) : field_(field) {}
  /// Returns true if v was independent of everything inserted so far.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }

 private:
  FieldSpec field_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by leading index, leading entry 1
};

std::size_t rank(const Matrix& m);
std::size_t rank(const LinMap& f);
Subspace kernel(const Matrix& m);
Subspace kernel(const LinMap& f);
std::optional<Matrix> inverse(const Matrix& m);
std::optional<LinMap> inverse(const LinMap& f);

struct AffineConstraint {
  Vector row;
  Scalar rhs;
};

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Solution set of the system, or nullopt when infeasible.
std::optional<AffineSolution> solve_affine(FieldSpec field, std::span<const AffineConstraint> constraints,
                                           std::size_t unknowns);

}  // namespace frobcoh
