#include "frobcoh/frobenius.hpp"

#include <array>
#include <functional>
#include <set>

namespace frobcoh {

AlgebraPresentation AlgebraPresentation::empty(std::string id, FieldSpec field, std::vector<std::string> names) {
  AlgebraPresentation p;
  p.id = std::move(id);
  p.field = field;
  const std::size_t d = names.size();
  p.basis_names = std::move(names);
  p.mul_constants.assign(d * d * d, Scalar::zero(field));
  p.unit_vector.assign(d, Scalar::zero(field));
  p.counit_vector.assign(d, Scalar::zero(field));
  return p;
}

namespace {

LinMap build_mu(const AlgebraPresentation& p) {
  const std::size_t d = p.dim();
  LinMap mu(p.field, d, 2, 1);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) mu.set(c, a * d + b, p.lambda(a, b, c));
    }
  }
  return mu;
}

LinMap column_map(const AlgebraPresentation& p, const Vector& v) {
  LinMap m(p.field, p.dim(), 0, 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

LinMap row_map(const AlgebraPresentation& p, const Vector& v) {
  LinMap m(p.field, p.dim(), 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(0, i, v[i]);
  return m;
}

void check_shape(const AlgebraPresentation& p) {
  const std::size_t d = p.dim();
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "algebra must have at least one basis element");
  std::set<std::string> seen;
  for (const auto& n : p.basis_names) {
    if (n.empty()) throw Error(ErrorCode::InvalidArgument, "empty basis name");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgument, "duplicate basis name '" + n + "'");
  }
  if (p.mul_constants.size() != d * d * d || p.unit_vector.size() != d || p.counit_vector.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "structure constant arrays do not match the basis size");
  }
  auto same_field = [&](const Scalar& s) {
    if (!(s.field() == p.field)) {
      throw Error(ErrorCode::FieldMismatch, "constant " + to_string(s) + " is not in " + p.field.name());
    }
  };
  for (const auto& s : p.mul_constants) same_field(s);
  for (const auto& s : p.unit_vector) same_field(s);
  for (const auto& s : p.counit_vector) same_field(s);
}

Matrix gram_matrix(const AlgebraPresentation& p) {
  const std::size_t d = p.dim();
  Matrix g(p.field, d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Scalar s = Scalar::zero(p.field);
      for (std::size_t c = 0; c < d; ++c) {
        if (!p.lambda(a, b, c).is_zero()) s += p.lambda(a, b, c) * p.counit_vector[c];
      }
      g(a, b) = s;
    }
  }
  return g;
}

std::string name_triple(const AlgebraPresentation& p, std::size_t index) {
  const std::size_t d = p.dim();
  std::size_t c = index % d;
  std::size_t b = (index / d) % d;
  std::size_t a = index / (d * d);
  return "(" + p.basis_names[a] + ", " + p.basis_names[b] + ", " + p.basis_names[c] + ")";
}

}  // namespace

FrobeniusAlgebra::FrobeniusAlgebra(AlgebraPresentation pres)
    : pres_(std::move(pres)),
      mu_(build_mu(pres_)),
      eta_(column_map(pres_, pres_.unit_vector)),
      epsilon_(row_map(pres_, pres_.counit_vector)),
      beta_(compose(epsilon_, mu_)),
      gamma_(pres_.field, pres_.dim(), 0, 2),
      delta_(pres_.field, pres_.dim(), 1, 2),
      tau_(transposition(pres_.field, pres_.dim())),
      id1_(LinMap::identity(pres_.field, pres_.dim(), 1)),
      handle_{Vector{}, Scalar::zero(pres_.field), std::nullopt} {}

Vector FrobeniusAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim(), Scalar::zero(field()));
  v[i] = Scalar::one(field());
  return v;
}

Vector FrobeniusAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t d = dim();
  Vector out(d, Scalar::zero(field()));
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b].is_zero()) continue;
      const Scalar xy = x[a] * y[b];
      for (std::size_t c = 0; c < d; ++c) {
        if (!pres_.lambda(a, b, c).is_zero()) out[c] += xy * pres_.lambda(a, b, c);
      }
    }
  }
  return out;
}

LinMap FrobeniusAlgebra::left_multiplication(std::span<const Scalar> x) const {
  LinMap l(field(), dim(), 1, 1);
  for (std::size_t b = 0; b < dim(); ++b) {
    Vector col = multiply(x, basis_vector(b));
    for (std::size_t c = 0; c < dim(); ++c) l.set(c, b, col[c]);
  }
  return l;
}

HandleData handle_data(const FrobeniusAlgebra& alg) { return alg.handle(); }

FrobeniusAlgebra validate(const AlgebraPresentation& pres) {
  check_shape(pres);
  FrobeniusAlgebra alg(pres);
  const std::size_t d = pres.dim();
  const LinMap& mu = alg.mu_;
  const LinMap& id = alg.id1_;

  LinMap assoc = compose(mu, tensor(mu, id)) - compose(mu, tensor(id, mu));
  for (std::size_t col = 0; col < assoc.cols(); ++col) {
    for (std::size_t row = 0; row < assoc.rows(); ++row) {
      if (!assoc.at(row, col).is_zero()) {
        throw Error(ErrorCode::NotAssociative, "(ab)c != a(bc) for (a, b, c) = " + name_triple(pres, col));
      }
    }
  }
  if (!(compose(mu, tensor(alg.eta_, id)) == id) || !(compose(mu, tensor(id, alg.eta_)) == id)) {
    throw Error(ErrorCode::UnitLawFails, "unit vector is not a two-sided unit");
  }

  auto ginv = inverse(gram_matrix(pres));
  if (!ginv) {
    throw Error(ErrorCode::DegeneratePairing, "Gram matrix ε(e_a e_b) is singular; the form is not Frobenius");
  }
  // γ(1) = Σ (B^{-1})_{ab} e_a⊗e_b makes both cancelation identities hold
  // for nonsymmetric B as well.
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) alg.gamma_.set(a * d + b, 0, (*ginv)(a, b));
  }
  alg.delta_ = compose(tensor(mu, id), tensor(id, alg.gamma_));

  LinMap hgamma = compose(mu, alg.gamma_);
  alg.handle_.handle_element = hgamma.matrix().column(0);
  alg.handle_.delta0 = compose(alg.beta_, alg.gamma_).at(0, 0);
  {
    // δ_h is a scalar multiple of the unit iff it is proportional to it.
    const Vector& h = alg.handle_.handle_element;
    std::optional<Scalar> ratio;
    bool proportional = true;
    for (std::size_t i = 0; i < d && proportional; ++i) {
      const Scalar& u = pres.unit_vector[i];
      if (u.is_zero()) {
        proportional = h[i].is_zero();
      } else if (!ratio) {
        ratio = h[i] / u;
      } else {
        proportional = h[i] == *ratio * u;
      }
    }
    if (proportional && ratio) alg.handle_.scalar_handle = ratio;
  }
  alg.symmetric_ = compose(alg.beta_, alg.tau_) == alg.beta_;
  alg.commutative_ = compose(mu, alg.tau_) == mu;

  for (const auto& check : verify_axioms(alg)) {
    if (!check.holds) throw Error(ErrorCode::VerificationFailed, "derived identity fails: " + check.name);
  }
  return alg;
}

std::vector<AxiomCheck> verify_axioms(const FrobeniusAlgebra& alg) {
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  const LinMap& id = alg.id1();
  const LinMap& eta = alg.eta();
  const LinMap& eps = alg.epsilon();
  const LinMap& beta = alg.beta();
  const LinMap& gamma = alg.gamma();
  std::vector<AxiomCheck> out;
  auto add = [&](std::string name, bool holds) { out.push_back({std::move(name), holds}); };

  add("associativity", compose(mu, tensor(mu, id)) == compose(mu, tensor(id, mu)));
  add("unit", compose(mu, tensor(eta, id)) == id && compose(mu, tensor(id, eta)) == id);
  add("pairing_definition", beta == compose(eps, mu));
  {
    Matrix g(alg.field(), alg.dim(), alg.dim());
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      for (std::size_t b = 0; b < alg.dim(); ++b) g(a, b) = beta.at(0, a * alg.dim() + b);
    }
    add("nondegeneracy", rank(g) == alg.dim());
  }
  add("pairing_associativity", compose(beta, tensor(mu, id)) == compose(beta, tensor(id, mu)));
  add("cancelation_left", compose(tensor(beta, id), tensor(id, gamma)) == id);
  add("cancelation_right", compose(tensor(id, beta), tensor(gamma, id)) == id);
  add("comultiplication_forms",
      delta == compose(tensor(mu, id), tensor(id, gamma)) && delta == compose(tensor(id, mu), tensor(gamma, id)));
  const LinMap dm = compose(delta, mu);
  add("compatibility_n", dm == compose(tensor(mu, id), tensor(id, delta)));
  add("compatibility_mirror", dm == compose(tensor(id, mu), tensor(delta, id)));
  add("coassociativity", compose(tensor(delta, id), delta) == compose(tensor(id, delta), delta));
  add("counit", compose(tensor(eps, id), delta) == id && compose(tensor(id, eps), delta) == id);
  add("copairing_is_delta_eta", compose(delta, eta) == gamma);
  const Vector& h = alg.handle_element();
  add("handle_operator", compose(mu, delta) == alg.left_multiplication(h));
  {
    bool central = true;
    for (std::size_t i = 0; i < alg.dim() && central; ++i) {
      Vector x = alg.basis_vector(i);
      central = alg.multiply(h, x) == alg.multiply(x, h);
    }
    add("handle_central", central);
  }
  const bool cocommutative = compose(alg.tau(), delta) == delta;
  add("commutative_iff_cocommutative", alg.commutative() == cocommutative);
  if (alg.scalar_handle()) {
    add("delta0_equals_delta1_eps1", alg.delta0() == *alg.scalar_handle() * compose(eps, eta).at(0, 0));
  }
  return out;
}

// ---------------------------------------------------------------- formatting

namespace {

std::string format_terms(std::span<const Scalar> v, const std::function<std::string(std::size_t)>& name) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i].is_one()) {
      out += name(i);
    } else {
      out += to_string(v[i]) + " * " + name(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_element(const AlgebraPresentation& pres, std::span<const Scalar> v) {
  return format_terms(v, [&](std::size_t i) { return pres.basis_names[i]; });
}

std::string format_tensor2(const AlgebraPresentation& pres, std::span<const Scalar> v) {
  const std::size_t d = pres.dim();
  return format_terms(v, [&](std::size_t i) { return pres.basis_names[i / d] + "⊗" + pres.basis_names[i % d]; });
}

// ---------------------------------------------------------------- builders

AlgebraPresentation build_complex() {
  const FieldSpec q = FieldSpec::rationals();
  auto p = AlgebraPresentation::empty("complex", q, {"1", "i"});
  p.lambda(0, 0, 0) = Scalar::one(q);
  p.lambda(0, 1, 1) = Scalar::one(q);
  p.lambda(1, 0, 1) = Scalar::one(q);
  p.lambda(1, 1, 0) = Scalar::from_int(q, -1);
  p.unit_vector[0] = Scalar::one(q);
  p.counit_vector[0] = Scalar::one(q);
  return p;
}

AlgebraPresentation build_poly(int n, FieldSpec field) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "poly:n needs n >= 2");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  auto p = AlgebraPresentation::empty("poly:" + std::to_string(n), field, std::move(names));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; a + b < n; ++b) p.lambda(a, b, a + b) = Scalar::one(field);
  }
  p.unit_vector[0] = Scalar::one(field);
  p.counit_vector[n - 1] = Scalar::one(field);
  return p;
}

AlgebraPresentation build_group(const std::vector<std::vector<std::size_t>>& table, FieldSpec field,
                                std::vector<std::string> names, std::string id) {
  const std::size_t n = table.size();
  if (n == 0 || names.size() != n) throw Error(ErrorCode::NotAGroup, "table and name list sizes differ or are empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "multiplication table is not square");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::NotAGroup, "table entry out of range");
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[c][a] == a && table[a][c] == a;
    if (ok) e = c;
  }
  if (!e) throw Error(ErrorCode::NotAGroup, "no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::NotAGroup, "table is not associative at (" + names[a] + ", " + names[b] + ", " +
                                                names[c] + ")");
        }
      }
    }
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = table[a][b] == *e && table[b][a] == *e;
    if (!has_inverse) throw Error(ErrorCode::NotAGroup, "element " + names[a] + " has no inverse");
  }
  auto p = AlgebraPresentation::empty(std::move(id), field, std::move(names));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) p.lambda(a, b, table[a][b]) = Scalar::one(field);
  }
  p.unit_vector[*e] = Scalar::one(field);
  p.counit_vector[*e] = Scalar::one(field);
  return p;
}

AlgebraPresentation build_cyclic_group(int n, FieldSpec field) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "group:Zn needs n >= 1");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = static_cast<std::size_t>((a + b) % n);
  }
  std::vector<std::string> names;
  if (n == 2) {
    names = {"1", "x"};
  } else {
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  std::string id = n == 2 ? "group:Z2" : "group:Zn:" + std::to_string(n);
  return build_group(table, field, std::move(names), std::move(id));
}

std::vector<std::vector<std::size_t>> s3_table() {
  using Perm = std::array<int, 3>;
  auto mul = [](const Perm& p, const Perm& q) {  // (pq)(i) = p(q(i))
    return Perm{p[q[0]], p[q[1]], p[q[2]]};
  };
  const Perm e{0, 1, 2};
  const Perm x{1, 0, 2};
  const Perm y{0, 2, 1};
  const std::array<Perm, 6> elems{e, x, y, mul(x, y), mul(y, x), mul(mul(x, y), x)};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm prod = mul(elems[a], elems[b]);
      for (std::size_t c = 0; c < 6; ++c) {
        if (elems[c] == prod) table[a][b] = c;
      }
    }
  }
  return table;
}

AlgebraPresentation build_s3(FieldSpec field) {
  return build_group(s3_table(), field, {"e", "x", "y", "xy", "yx", "xyx"}, "group:S3");
}

AlgebraPresentation build_s3_alt() {
  auto p = build_s3(FieldSpec::rationals());
  p.id = "s3alt";
  const FieldSpec q = p.field;
  p.counit_vector.assign(6, Scalar::zero(q));
  p.counit_vector[5] = Scalar::one(q);
  return p;
}

AlgebraPresentation build_qpoly(const Scalar& a) {
  const FieldSpec qi = FieldSpec::gaussian();
  if (!(a.field() == qi)) throw Error(ErrorCode::FieldMismatch, "qpoly parameter must lie in Q(i)");
  if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "qpoly parameter A must be invertible");
  const Scalar q = -(a * a).inverse();
  auto p = AlgebraPresentation::empty("qpoly:" + to_string(a), qi, {"1", "x", "y", "xy"});
  const Scalar one = Scalar::one(qi);
  for (std::size_t b = 0; b < 4; ++b) {
    p.lambda(0, b, b) = one;
    p.lambda(b, 0, b) = one;
  }
  p.lambda(1, 2, 3) = one;  // x·y = xy
  p.lambda(2, 1, 3) = q;    // y·x = q xy
  p.unit_vector[0] = one;
  p.counit_vector[3] = Scalar::imaginary_unit(qi) * a;
  return p;
}

AlgebraPresentation trace_form(const AlgebraPresentation& pres) {
  check_shape(pres);
  AlgebraPresentation out = pres;
  out.id = pres.id + "+trace";
  const std::size_t d = pres.dim();
  for (std::size_t a = 0; a < d; ++a) {
    Scalar t = Scalar::zero(pres.field);
    for (std::size_t b = 0; b < d; ++b) t += pres.lambda(a, b, b);
    out.counit_vector[a] = t;
  }
  if (!inverse(gram_matrix(out))) {
    throw Error(ErrorCode::DegeneratePairing, "trace form is degenerate (algebra is not semisimple)");
  }
  return out;
}

}  // namespace frobcoh
