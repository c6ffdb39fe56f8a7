#include "frobcoh/tensorlin.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace frobcoh {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "matrix product over different fields");
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
  }
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik.is_one() ? bkj : aik * bkj;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(FieldSpec field, std::size_t dim, unsigned dom_arity, unsigned cod_arity)
    : dim_(dim), dom_(dom_arity), cod_(cod_arity), m_(field, ipow(dim, cod_arity), ipow(dim, dom_arity)) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "base dimension must be positive");
}

LinMap::LinMap(std::size_t dim, unsigned dom_arity, unsigned cod_arity, Matrix entries)
    : dim_(dim), dom_(dom_arity), cod_(cod_arity), m_(std::move(entries)) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "base dimension must be positive");
  if (m_.rows() != ipow(dim, cod_arity) || m_.cols() != ipow(dim, dom_arity)) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shape does not match arities");
  }
}

LinMap LinMap::identity(FieldSpec field, std::size_t dim, unsigned arity) {
  LinMap id(field, dim, arity, arity);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < id.rows(); ++i) id.set(i, i, one);
  return id;
}

Vector LinMap::apply(std::span<const Scalar> v) const {
  if (v.size() != cols()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match domain");
  Vector out(rows(), Scalar::zero(field()));
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Scalar& e = at(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

LinMap LinMap::operator-() const {
  LinMap out = *this;
  for (auto& s : out.m_.data()) {
    if (!s.is_zero()) s = -s;
  }
  return out;
}

namespace {

void require_same_shape(const LinMap& a, const LinMap& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "maps on spaces of different dimension");
  if (a.dom_arity() != b.dom_arity() || a.cod_arity() != b.cod_arity()) {
    throw Error(ErrorCode::ArityMismatch, "maps of different arity");
  }
}

}  // namespace

LinMap& LinMap::operator+=(const LinMap& other) {
  require_same_shape(*this, other);
  auto dst = m_.data();
  auto src = other.m_.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!src[i].is_zero()) dst[i] += src[i];
  }
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& other) {
  require_same_shape(*this, other);
  auto dst = m_.data();
  auto src = other.m_.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!src[i].is_zero()) dst[i] -= src[i];
  }
  return *this;
}

LinMap operator*(const Scalar& s, const LinMap& f) {
  LinMap out = f;
  for (auto& e : out.m_.data()) {
    if (!e.is_zero()) e = s * e;
  }
  return out;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(g.field() == f.field())) throw Error(ErrorCode::FieldMismatch, g.field().name() + " vs " + f.field().name());
  if (g.dim() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "maps on spaces of different dimension");
  if (f.cod_arity() != g.dom_arity()) {
    throw Error(ErrorCode::ArityMismatch, "compose: inner codomain arity " + std::to_string(f.cod_arity()) +
                                              " != outer domain arity " + std::to_string(g.dom_arity()));
  }
  return LinMap(f.dim(), f.dom_arity(), g.cod_arity(), multiply(g.matrix(), f.matrix()));
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (!(g.field() == f.field())) throw Error(ErrorCode::FieldMismatch, f.field().name() + " vs " + g.field().name());
  if (g.dim() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "maps on spaces of different dimension");
  LinMap out(f.field(), f.dim(), f.dom_arity() + g.dom_arity(), f.cod_arity() + g.cod_arity());
  const std::size_t gr = g.rows();
  const std::size_t gc = g.cols();
  for (std::size_t r1 = 0; r1 < f.rows(); ++r1) {
    for (std::size_t c1 = 0; c1 < f.cols(); ++c1) {
      const Scalar& a = f.at(r1, c1);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < gr; ++r2) {
        for (std::size_t c2 = 0; c2 < gc; ++c2) {
          const Scalar& b = g.at(r2, c2);
          if (b.is_zero()) continue;
          out.set(r1 * gr + r2, c1 * gc + c2, a * b);
        }
      }
    }
  }
  return out;
}

LinMap transposition(FieldSpec field, std::size_t dim) {
  LinMap tau(field, dim, 2, 2);
  const Scalar one = Scalar::one(field);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) tau.set(b * dim + a, a * dim + b, one);
  }
  return tau;
}

// ---------------------------------------------------------------- layers

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Scalar acc = std::move(v[i].second);
    while (j < v.size() && v[j].first == v[i].first) {
      acc += v[j].second;
      ++j;
    }
    if (!acc.is_zero()) {
      v[out].first = v[i].first;
      v[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

struct PreparedLayer {
  std::vector<SparseVec> columns;
  std::size_t in_size;   // d^{dom of map}
  std::size_t out_size;  // d^{cod of map}
  std::size_t right_size;
};

}  // namespace

LinMap compose_layers(std::initializer_list<Layer> layers) {
  if (layers.size() == 0) throw Error(ErrorCode::InvalidArgument, "compose_layers needs at least one layer");
  const Layer* first = layers.begin();
  const FieldSpec field = first->map.field();
  const std::size_t d = first->map.dim();

  std::vector<PreparedLayer> prepared;
  prepared.reserve(layers.size());
  unsigned expected_cod = 0;
  bool have_expected = false;
  for (const Layer& l : layers) {
    if (!(l.map.field() == field)) throw Error(ErrorCode::FieldMismatch, "compose_layers over different fields");
    if (l.map.dim() != d) throw Error(ErrorCode::DimensionMismatch, "compose_layers on different dimensions");
    unsigned out_arity = l.left + l.map.cod_arity() + l.right;
    if (have_expected && out_arity != expected_cod) {
      throw Error(ErrorCode::ArityMismatch, "compose_layers: adjacent layers do not match");
    }
    expected_cod = l.left + l.map.dom_arity() + l.right;
    have_expected = true;
    PreparedLayer p;
    p.in_size = l.map.cols();
    p.out_size = l.map.rows();
    p.right_size = ipow(d, l.right);
    p.columns.resize(p.in_size);
    for (std::size_t c = 0; c < p.in_size; ++c) {
      for (std::size_t r = 0; r < p.out_size; ++r) {
        const Scalar& e = l.map.at(r, c);
        if (!e.is_zero()) p.columns[c].emplace_back(r, e);
      }
    }
    prepared.push_back(std::move(p));
  }
  const Layer& last = *(layers.end() - 1);
  const unsigned dom_arity = last.left + last.map.dom_arity() + last.right;
  const unsigned cod_arity = first->left + first->map.cod_arity() + first->right;

  LinMap out(field, d, dom_arity, cod_arity);
  const Scalar one = Scalar::one(field);
  SparseVec cur, next;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    cur.clear();
    cur.emplace_back(j, one);
    for (auto it = prepared.rbegin(); it != prepared.rend() && !cur.empty(); ++it) {
      next.clear();
      for (const auto& [idx, coef] : cur) {
        const std::size_t rr = idx % it->right_size;
        const std::size_t rest = idx / it->right_size;
        const std::size_t mid = rest % it->in_size;
        const std::size_t left = rest / it->in_size;
        const std::size_t base = left * it->out_size;
        for (const auto& [row, val] : it->columns[mid]) {
          next.emplace_back((base + row) * it->right_size + rr, coef.is_one() ? val : coef * val);
        }
      }
      normalize(next);
      std::swap(cur, next);
    }
    for (auto& [idx, coef] : cur) out.set(idx, j, std::move(coef));
  }
  return out;
}

// ---------------------------------------------------------------- elimination

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && m(pr, col).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m(pr, c), m(row, c));
    }
    if (!m(row, col).is_one()) {
      const Scalar inv = m(row, col).inverse();
      for (std::size_t c = col; c < cols; ++c) {
        if (!m(row, c).is_zero()) m(row, c) = m(row, c) * inv;
      }
    }
    std::vector<std::size_t> nz;
    for (std::size_t c = col + 1; c < cols; ++c) {
      if (!m(row, c).is_zero()) nz.push_back(c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      m(r, col) = Scalar::zero(m.field());
      for (std::size_t c : nz) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

std::size_t rank(const LinMap& f) { return rank(f.matrix()); }

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  Matrix m(field, vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "span: vector length mismatch");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  const auto pivots = row_reduce(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Vector v(ambient_dim, Scalar::zero(field));
    for (std::size_t c = 0; c < ambient_dim; ++c) v[c] = m(r, c);
    s.basis_.push_back(std::move(v));
  }
  return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "contains: vector length mismatch");
  Vector rem(v.begin(), v.end());
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    if (rem[pivot].is_zero()) continue;
    const Scalar factor = rem[pivot];
    for (std::size_t c = pivot; c < ambient_; ++c) {
      if (!b[c].is_zero()) rem[c] -= factor * b[c];
    }
  }
  return std::all_of(rem.begin(), rem.end(), [](const Scalar& s) { return s.is_zero(); });
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!r(i, f).is_zero()) v[pivots[i]] = -r(i, f);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace kernel(const LinMap& f) { return kernel(f.matrix()); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

std::optional<LinMap> inverse(const LinMap& f) {
  if (f.dom_arity() != f.cod_arity()) return std::nullopt;
  auto inv = inverse(f.matrix());
  if (!inv) return std::nullopt;
  return LinMap(f.dim(), f.cod_arity(), f.dom_arity(), std::move(*inv));
}

std::optional<AffineSolution> solve_affine(FieldSpec field, std::span<const AffineConstraint> constraints,
                                           std::size_t unknowns) {
  Matrix aug(field, constraints.size(), unknowns + 1);
  Matrix lhs(field, constraints.size(), unknowns);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    if (constraints[r].row.size() != unknowns) {
      throw Error(ErrorCode::DimensionMismatch, "constraint row has wrong number of unknowns");
    }
    for (std::size_t c = 0; c < unknowns; ++c) {
      aug(r, c) = constraints[r].row[c];
      lhs(r, c) = constraints[r].row[c];
    }
    aug(r, unknowns) = constraints[r].rhs;
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  Vector particular(unknowns, Scalar::zero(field));
  for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = aug(i, unknowns);
  return AffineSolution{std::move(particular), kernel(lhs)};
}

bool SparseEchelon::insert(SparseVector v) {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      const Scalar inv = v.front().second.inverse();
      for (auto& [idx, value] : v) value = value * inv;
      const std::size_t lead = v.front().first;
      rows_.emplace(lead, std::move(v));
      return true;
    }
    // v -= v_lead * row, merging two sorted lists.
    const Scalar factor = v.front().second;
    const SparseVector& row = it->second;
    SparseVector out;
    out.reserve(v.size() + row.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < row.size()) {
      if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
        out.push_back(std::move(v[i++]));
      } else if (i == v.size() || row[j].first < v[i].first) {
        out.emplace_back(row[j].first, -(factor * row[j].second));
        ++j;
      } else {
        Scalar value = v[i].second - factor * row[j].second;
        if (!value.is_zero()) out.emplace_back(v[i].first, std::move(value));
        ++i;
        ++j;
      }
    }
    v = std::move(out);
  }
  return false;
}

}  // namespace frobcoh
