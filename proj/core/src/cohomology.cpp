#include "frobcoh/cohomology.hpp"

#include <algorithm>

namespace frobcoh {

std::size_t cochain_dimension(std::size_t d, unsigned degree) { return degree * ipow(d, degree + 1); }

Variant parse_variant(int v) {
  if (v == 1) return Variant::N;
  if (v == 2) return Variant::Mirror;
  throw Error(ErrorCode::InvalidArgument, "variant must be 1 or 2");
}

Cochain Cochain::zero(const FrobeniusAlgebra& alg, unsigned degree) {
  Cochain c;
  c.degree = degree;
  for (unsigned i = 1; i <= degree; ++i) c.components.emplace_back(alg.field(), alg.dim(), degree + 1 - i, i);
  return c;
}

Cochain Cochain::from_coordinates(const FrobeniusAlgebra& alg, unsigned degree, std::span<const Scalar> coords) {
  if (coords.size() != cochain_dimension(alg.dim(), degree)) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector does not match dim C^" + std::to_string(degree));
  }
  Cochain c = zero(alg, degree);
  std::size_t k = 0;
  for (auto& comp : c.components) {
    for (std::size_t r = 0; r < comp.rows(); ++r) {
      for (std::size_t col = 0; col < comp.cols(); ++col) comp.set(r, col, coords[k++]);
    }
  }
  return c;
}

Vector Cochain::coordinates() const {
  Vector out;
  for (const auto& comp : components) {
    auto data = comp.matrix().data();
    out.insert(out.end(), data.begin(), data.end());
  }
  return out;
}

bool Cochain::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const LinMap& m) { return m.is_zero(); });
}

namespace {

void require_degree(const Cochain& c, unsigned degree) {
  if (c.degree != degree || c.components.size() != degree) {
    throw Error(ErrorCode::DegreeMismatch,
                "expected a degree-" + std::to_string(degree) + " cochain, got degree " + std::to_string(c.degree));
  }
  for (unsigned i = 1; i <= degree; ++i) {
    const LinMap& m = c.components[i - 1];
    if (m.dom_arity() != degree + 1 - i || m.cod_arity() != i) {
      throw Error(ErrorCode::DegreeMismatch, "component " + std::to_string(i) + " has the wrong arity");
    }
  }
}

void require_arity(const LinMap& m, unsigned dom, unsigned cod, const char* what) {
  if (m.dom_arity() != dom || m.cod_arity() != cod) {
    throw Error(ErrorCode::ArityMismatch, std::string(what) + " must map A^{⊗" + std::to_string(dom) + "} to A^{⊗" +
                                              std::to_string(cod) + "}");
  }
}

}  // namespace

// ---------------------------------------------------------------- degree 1

LinMap d11(const FrobeniusAlgebra& alg, const LinMap& h) {
  require_arity(h, 1, 1, "h");
  const LinMap& mu = alg.mu();
  return compose_layers({{mu}, {h, 0, 1}}) + compose_layers({{mu}, {h, 1, 0}}) - compose_layers({{h}, {mu}});
}

LinMap d12(const FrobeniusAlgebra& alg, const LinMap& h) {
  require_arity(h, 1, 1, "h");
  const LinMap& delta = alg.delta();
  return compose_layers({{h, 0, 1}, {delta}}) + compose_layers({{h, 1, 0}, {delta}}) -
         compose_layers({{delta}, {h}});
}

// ---------------------------------------------------------------- degree 2

LinMap d21(const FrobeniusAlgebra& alg, const LinMap& phi1) {
  require_arity(phi1, 2, 1, "phi1");
  const LinMap& mu = alg.mu();
  return compose_layers({{mu}, {phi1, 0, 1}}) + compose_layers({{phi1}, {mu, 0, 1}}) -
         compose_layers({{mu}, {phi1, 1, 0}}) - compose_layers({{phi1}, {mu, 1, 0}});
}

LinMap d22(const FrobeniusAlgebra& alg, const LinMap& phi1, const LinMap& phi2, Variant variant) {
  require_arity(phi1, 2, 1, "phi1");
  require_arity(phi2, 1, 2, "phi2");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  LinMap out = compose_layers({{delta}, {phi1}}) + compose_layers({{phi2}, {mu}});
  if (variant == Variant::N) {
    out -= compose_layers({{phi1, 0, 1}, {delta, 1, 0}});
    out -= compose_layers({{mu, 0, 1}, {phi2, 1, 0}});
  } else {
    out -= compose_layers({{phi1, 1, 0}, {delta, 0, 1}});
    out -= compose_layers({{mu, 1, 0}, {phi2, 0, 1}});
  }
  return out;
}

LinMap d23(const FrobeniusAlgebra& alg, const LinMap& phi2) {
  require_arity(phi2, 1, 2, "phi2");
  const LinMap& delta = alg.delta();
  return compose_layers({{phi2, 0, 1}, {delta}}) + compose_layers({{delta, 0, 1}, {phi2}}) -
         compose_layers({{phi2, 1, 0}, {delta}}) - compose_layers({{delta, 1, 0}, {phi2}});
}

// ---------------------------------------------------------------- degree 3

LinMap d31(const FrobeniusAlgebra& alg, const LinMap& xi1) {
  require_arity(xi1, 3, 1, "xi1");
  const LinMap& mu = alg.mu();
  return compose_layers({{mu}, {xi1, 0, 1}}) + compose_layers({{xi1}, {mu, 1, 1}}) +
         compose_layers({{mu}, {xi1, 1, 0}}) - compose_layers({{xi1}, {mu, 0, 2}}) -
         compose_layers({{xi1}, {mu, 2, 0}});
}

LinMap d32(const FrobeniusAlgebra& alg, const LinMap& xi1, const LinMap& xi2) {
  require_arity(xi1, 3, 1, "xi1");
  require_arity(xi2, 2, 2, "xi2");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{delta}, {xi1}}) + compose_layers({{xi2}, {mu, 1, 0}}) +
         compose_layers({{mu, 0, 1}, {xi2, 1, 0}}) - compose_layers({{xi2}, {mu, 0, 1}}) -
         compose_layers({{xi1, 0, 1}, {delta, 2, 0}});
}

LinMap d33(const FrobeniusAlgebra& alg, const LinMap& xi2, const LinMap& xi3) {
  require_arity(xi2, 2, 2, "xi2");
  require_arity(xi3, 1, 3, "xi3");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{xi3}, {mu}}) + compose_layers({{delta, 1, 0}, {xi2}}) -
         compose_layers({{xi2, 0, 1}, {delta, 1, 0}}) - compose_layers({{delta, 0, 1}, {xi2}}) -
         compose_layers({{mu, 0, 2}, {xi3, 1, 0}});
}

LinMap d33_mirror(const FrobeniusAlgebra& alg, const LinMap& xi2, const LinMap& xi3) {
  require_arity(xi2, 2, 2, "xi2");
  require_arity(xi3, 1, 3, "xi3");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{xi3}, {mu}}) + compose_layers({{delta, 1, 0}, {xi2}}) +
         compose_layers({{xi2, 1, 0}, {delta, 0, 1}}) - compose_layers({{delta, 0, 1}, {xi2}}) -
         compose_layers({{mu, 2, 0}, {xi3, 0, 1}});
}

LinMap d34(const FrobeniusAlgebra& alg, const LinMap& xi3) {
  require_arity(xi3, 1, 3, "xi3");
  const LinMap& delta = alg.delta();
  return compose_layers({{xi3, 0, 1}, {delta}}) + compose_layers({{delta, 1, 1}, {xi3}}) +
         compose_layers({{xi3, 1, 0}, {delta}}) - compose_layers({{delta, 0, 2}, {xi3}}) -
         compose_layers({{delta, 2, 0}, {xi3}});
}

// ---------------------------------------------------------------- degree 4

LinMap d41(const FrobeniusAlgebra& alg, const LinMap& zeta1) {
  require_arity(zeta1, 4, 1, "zeta1");
  const LinMap& mu = alg.mu();
  return compose_layers({{mu}, {zeta1, 0, 1}}) - compose_layers({{mu}, {zeta1, 1, 0}}) +
         compose_layers({{zeta1}, {mu, 0, 3}}) - compose_layers({{zeta1}, {mu, 1, 2}}) +
         compose_layers({{zeta1}, {mu, 2, 1}}) - compose_layers({{zeta1}, {mu, 3, 0}});
}

LinMap d42(const FrobeniusAlgebra& alg, const LinMap& zeta1, const LinMap& zeta2) {
  require_arity(zeta1, 4, 1, "zeta1");
  require_arity(zeta2, 3, 2, "zeta2");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{delta}, {zeta1}}) + compose_layers({{zeta2}, {mu, 2, 0}}) +
         compose_layers({{mu, 0, 1}, {zeta2, 1, 0}}) - compose_layers({{zeta1, 0, 1}, {delta, 3, 0}}) -
         compose_layers({{zeta2}, {mu, 0, 2}}) - compose_layers({{zeta2}, {mu, 1, 1}});
}

LinMap d44(const FrobeniusAlgebra& alg, const LinMap& zeta3, const LinMap& zeta4) {
  require_arity(zeta3, 2, 3, "zeta3");
  require_arity(zeta4, 1, 4, "zeta4");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{zeta4}, {mu}}) + compose_layers({{delta, 2, 0}, {zeta3}}) +
         compose_layers({{zeta3, 1, 0}, {delta, 0, 1}}) - compose_layers({{mu, 3, 0}, {zeta4, 0, 1}}) -
         compose_layers({{delta, 0, 2}, {zeta3}}) - compose_layers({{delta, 1, 1}, {zeta3}});
}

LinMap d42_signed(const FrobeniusAlgebra& alg, const LinMap& zeta1, const LinMap& zeta2) {
  require_arity(zeta1, 4, 1, "zeta1");
  require_arity(zeta2, 3, 2, "zeta2");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{delta}, {zeta1}}) + compose_layers({{zeta2}, {mu, 2, 0}}) -
         compose_layers({{mu, 0, 1}, {zeta2, 1, 0}}) - compose_layers({{zeta1, 0, 1}, {delta, 3, 0}}) +
         compose_layers({{zeta2}, {mu, 0, 2}}) - compose_layers({{zeta2}, {mu, 1, 1}});
}

LinMap d44_signed(const FrobeniusAlgebra& alg, const LinMap& zeta3, const LinMap& zeta4) {
  require_arity(zeta3, 2, 3, "zeta3");
  require_arity(zeta4, 1, 4, "zeta4");
  const LinMap& mu = alg.mu();
  const LinMap& delta = alg.delta();
  return compose_layers({{zeta4}, {mu}}) + compose_layers({{delta, 2, 0}, {zeta3}}) -
         compose_layers({{zeta3, 0, 1}, {delta, 1, 0}}) - compose_layers({{mu, 0, 3}, {zeta4, 1, 0}}) +
         compose_layers({{delta, 0, 2}, {zeta3}}) - compose_layers({{delta, 1, 1}, {zeta3}});
}

LinMap d45(const FrobeniusAlgebra& alg, const LinMap& zeta4) {
  require_arity(zeta4, 1, 4, "zeta4");
  const LinMap& delta = alg.delta();
  return compose_layers({{zeta4, 0, 1}, {delta}}) - compose_layers({{zeta4, 1, 0}, {delta}}) +
         compose_layers({{delta, 0, 3}, {zeta4}}) - compose_layers({{delta, 1, 2}, {zeta4}}) +
         compose_layers({{delta, 2, 1}, {zeta4}}) - compose_layers({{delta, 3, 0}, {zeta4}});
}

// ---------------------------------------------------------------- assembled

Cochain d1(const FrobeniusAlgebra& alg, const Cochain& h) {
  require_degree(h, 1);
  Cochain out;
  out.degree = 2;
  out.components.push_back(d11(alg, h[0]));
  out.components.push_back(-d12(alg, h[0]));
  return out;
}

Cochain d2(const FrobeniusAlgebra& alg, const Cochain& c, Variant variant) {
  require_degree(c, 2);
  Cochain out;
  out.degree = 3;
  out.components.push_back(d21(alg, c[0]));
  out.components.push_back(d22(alg, c[0], c[1], variant));
  out.components.push_back(d23(alg, c[1]));
  return out;
}

Cochain d3(const FrobeniusAlgebra& alg, const Cochain& c) {
  require_degree(c, 3);
  Cochain out;
  out.degree = 4;
  out.components.push_back(d31(alg, c[0]));
  out.components.push_back(d32(alg, c[0], c[1]));
  out.components.push_back(d33(alg, c[1], c[2]));
  out.components.push_back(d34(alg, c[2]));
  return out;
}

PartialDegree5 d4_partial(const FrobeniusAlgebra& alg, const Cochain& c) {
  require_degree(c, 4);
  return PartialDegree5{d41(alg, c[0]), d42(alg, c[0], c[1]), d44(alg, c[2], c[3]), d45(alg, c[3])};
}

Cochain differential(const FrobeniusAlgebra& alg, const Cochain& c, Variant variant) {
  switch (c.degree) {
    case 1: return d1(alg, c);
    case 2: return d2(alg, c, variant);
    case 3: return d3(alg, c);
    default:
      throw Error(ErrorCode::DegreeMismatch, "D_n is only available for n = 1, 2, 3");
  }
}

namespace {

Cochain unit_cochain(const FrobeniusAlgebra& alg, unsigned degree, std::size_t k) {
  Cochain c = Cochain::zero(alg, degree);
  const std::size_t block = ipow(alg.dim(), degree + 1);
  LinMap& comp = c.components[k / block];
  const std::size_t idx = k % block;
  comp.set(idx / comp.cols(), idx % comp.cols(), Scalar::one(alg.field()));
  return c;
}

std::string describe_nonzero(const Cochain& c) {
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const LinMap& m = c.components[i];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        if (!m.at(r, col).is_zero()) {
          return "component " + std::to_string(i + 1) + " entry (" + std::to_string(r) + ", " + std::to_string(col) +
                 ") = " + to_string(m.at(r, col));
        }
      }
    }
  }
  return {};
}

std::string describe_nonzero(const LinMap& m) {
  Cochain c;
  c.components.push_back(m);
  return describe_nonzero(c);
}

}  // namespace

Matrix differential_matrix(const FrobeniusAlgebra& alg, unsigned degree, Variant variant) {
  const std::size_t cols = cochain_dimension(alg.dim(), degree);
  const std::size_t rows = cochain_dimension(alg.dim(), degree + 1);
  Matrix m(alg.field(), rows, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    Cochain image = differential(alg, unit_cochain(alg, degree, k), variant);
    std::size_t r = 0;
    for (const auto& comp : image.components) {
      for (const auto& s : comp.matrix().data()) {
        if (!s.is_zero()) m(r, k) = s;
        ++r;
      }
    }
  }
  return m;
}

std::size_t differential_rank(const FrobeniusAlgebra& alg, unsigned degree, Variant variant) {
  SparseEchelon echelon(alg.field());
  const std::size_t cols = cochain_dimension(alg.dim(), degree);
  for (std::size_t k = 0; k < cols; ++k) {
    Cochain image = differential(alg, unit_cochain(alg, degree, k), variant);
    SparseVector v;
    std::size_t r = 0;
    for (const auto& comp : image.components) {
      for (const auto& s : comp.matrix().data()) {
        if (!s.is_zero()) v.emplace_back(r, s);
        ++r;
      }
    }
    echelon.insert(std::move(v));
  }
  return echelon.rank();
}

ComplexReport cohomology_dims(const FrobeniusAlgebra& alg, unsigned max_degree, Variant variant) {
  if (max_degree < 1 || max_degree > 3) throw Error(ErrorCode::InvalidArgument, "max degree must be 1, 2 or 3");
  ComplexReport report;
  report.algebra_id = alg.id();
  report.variant = variant;
  std::vector<std::size_t> ranks(max_degree + 1, 0);  // ranks[0] = rank D_0 = 0
  for (unsigned n = 1; n <= max_degree; ++n) ranks[n] = differential_rank(alg, n, variant);
  for (unsigned n = 1; n <= max_degree; ++n) {
    const std::size_t z = cochain_dimension(alg.dim(), n) - ranks[n];
    const std::size_t b = ranks[n - 1];
    report.degrees.push_back({n, z, b, static_cast<std::ptrdiff_t>(z) - static_cast<std::ptrdiff_t>(b)});
  }
  for (unsigned n = 1; n < max_degree && n <= 2; ++n) report.chain_checks.push_back(chain_identity(alg, n, variant));
  return report;
}

std::vector<Cochain> cocycle_basis(const FrobeniusAlgebra& alg, unsigned degree, Variant variant) {
  Subspace z = kernel(differential_matrix(alg, degree, variant));
  std::vector<Cochain> out;
  out.reserve(z.dim());
  for (const auto& v : z.basis()) out.push_back(Cochain::from_coordinates(alg, degree, v));
  return out;
}

ChainCheck chain_identity(const FrobeniusAlgebra& alg, unsigned n, Variant variant) {
  if (n < 1 || n > 2) throw Error(ErrorCode::InvalidArgument, "chain identity available for D2D1 and D3D2");
  ChainCheck check;
  check.name = n == 1 ? "D2D1" : "D3D2";
  const std::size_t cols = cochain_dimension(alg.dim(), n);
  for (std::size_t k = 0; k < cols; ++k) {
    Cochain once = differential(alg, unit_cochain(alg, n, k), variant);
    Cochain twice = differential(alg, once, variant);
    ++check.columns_checked;
    if (!twice.is_zero()) {
      ++check.failing_columns;
      if (check.holds) check.witness = "column " + std::to_string(k) + ": " + describe_nonzero(twice);
      check.holds = false;
    }
  }
  return check;
}

std::vector<ChainCheck> degree4_component_checks(const FrobeniusAlgebra& alg) {
  std::vector<ChainCheck> checks;
  for (const char* name : {"d41.d31", "d42.(d31,d32)", "d44.(d33,d34)", "d45.d34", "d42_signed.(d31,d32)",
                           "d44_signed.(d33,d34)"}) {
    checks.emplace_back();
    checks.back().name = name;
  }
  const std::size_t cols = cochain_dimension(alg.dim(), 3);
  for (std::size_t k = 0; k < cols; ++k) {
    Cochain zeta = d3(alg, unit_cochain(alg, 3, k));
    const LinMap results[] = {d41(alg, zeta[0]),        d42(alg, zeta[0], zeta[1]),
                              d44(alg, zeta[2], zeta[3]), d45(alg, zeta[3]),
                              d42_signed(alg, zeta[0], zeta[1]), d44_signed(alg, zeta[2], zeta[3])};
    for (std::size_t i = 0; i < checks.size(); ++i) {
      ++checks[i].columns_checked;
      if (!results[i].is_zero()) {
        ++checks[i].failing_columns;
        if (checks[i].holds) checks[i].witness = "column " + std::to_string(k) + ": " + describe_nonzero(results[i]);
        checks[i].holds = false;
      }
    }
  }
  return checks;
}

}  // namespace frobcoh
