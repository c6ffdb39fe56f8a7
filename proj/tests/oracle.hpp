#pragma once

// Naive reference implementations over Q used to cross-check the library.
// Everything here works on raw structure constants with mpq_class and index
// loops; nothing goes through LinMap, compose_layers or the elimination code.

#include <gmpxx.h>

#include <vector>

#include "frobcoh/frobenius.hpp"

namespace oracle {

using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;

inline Q q(const frobcoh::Scalar& s) { return s.as_rational()->to_mpq(); }

inline QMatrix to_q(const frobcoh::LinMap& f) {
  QMatrix m(f.rows(), std::vector<Q>(f.cols()));
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) m[r][c] = q(f.at(r, c));
  }
  return m;
}

inline std::size_t rank(QMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Q f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline QMatrix inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix m(n, std::vector<Q>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const Q pivot = m[c][c];
    for (auto& x : m[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Q f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  QMatrix inv(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  }
  return inv;
}

/// Structure constants of a presentation over Q.
struct Algebra {
  std::size_t d;
  std::vector<Q> lam;     // lam[(a*d+b)*d+c] = coefficient of e_c in e_a e_b
  std::vector<Q> eps;     // counit
  std::vector<Q> delta;   // delta[(a*d+b)*d+c] = coefficient of e_b⊗e_c in Δ(e_a)

  explicit Algebra(const frobcoh::AlgebraPresentation& p) : d(p.dim()) {
    for (const auto& s : p.mul_constants) lam.push_back(q(s));
    for (const auto& s : p.counit_vector) eps.push_back(q(s));
    // Gram matrix G_ab = ε(e_a e_b); γ(1) = Σ (G^{-1})_ab e_a⊗e_b; Δ(x) = Σ γ_ab (x e_a)⊗e_b.
    QMatrix gram(d, std::vector<Q>(d));
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) gram[a][b] += l(a, b, c) * eps[c];
      }
    }
    const QMatrix g = inverse(gram);
    delta.assign(d * d * d, 0);
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t c = 0; c < d; ++c) delta[(x * d + c) * d + b] += g[a][b] * l(x, a, c);
        }
      }
    }
  }

  const Q& l(std::size_t a, std::size_t b, std::size_t c) const { return lam[(a * d + b) * d + c]; }
  const Q& dl(std::size_t a, std::size_t b, std::size_t c) const { return delta[(a * d + b) * d + c]; }
};

/// Matrix of D1 on Hom(A, A) with coordinates h[r][c] at r*d+c, targeting
/// (φ1, φ2) coordinates φ1[c][a*d+b] then φ2[b*d+c][a], assembled entrywise:
///   (d11 h)(e_a⊗e_b) = h(e_a)e_b + e_a h(e_b) − h(e_a e_b)
///   (d12 h)(e_a)     = (h⊗|)Δe_a + (|⊗h)Δe_a − Δ(h e_a)
///   D1 h = (d11 h, −d12 h)
inline QMatrix d1_matrix(const Algebra& A) {
  const std::size_t d = A.d;
  const std::size_t n1 = d * d * d;
  QMatrix m(2 * n1, std::vector<Q>(d * d));
  for (std::size_t hr = 0; hr < d; ++hr) {
    for (std::size_t hc = 0; hc < d; ++hc) {
      // h = E_{hr,hc}: h(e_hc) = e_hr.
      const std::size_t col = hr * d + hc;
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t c = 0; c < d; ++c) {
            Q v = 0;
            if (a == hc) v += A.l(hr, b, c);
            if (b == hc) v += A.l(a, hr, c);
            if (c == hr) v -= A.l(a, b, hc);
            m[c * d * d + a * d + b][col] += v;
          }
        }
      }
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t c = 0; c < d; ++c) {
            Q v = 0;
            if (b == hr) v += A.dl(a, hc, c);
            if (c == hr) v += A.dl(a, b, hc);
            if (a == hc) v -= A.dl(hr, b, c);
            m[n1 + (b * d + c) * d + a][col] -= v;
          }
        }
      }
    }
  }
  return m;
}

/// Both sides of the YBE for R given as r[(i*d+j)*d*d + k*d+l] = coefficient of
/// e_i⊗e_j in R(e_k⊗e_l), compared entry by entry with explicit sums.
inline bool ybe_brute_force(const QMatrix& r, std::size_t d) {
  auto R = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const Q& {
    return r[i * d + j][k * d + l];
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
              // Output e_x⊗e_y⊗e_z from input e_a⊗e_b⊗e_c.
              Q lhs = 0, rhs = 0;
              // (R⊗|)(|⊗R)(R⊗|)
              for (std::size_t p = 0; p < d; ++p)
                for (std::size_t s = 0; s < d; ++s)
                  for (std::size_t u = 0; u < d; ++u) {
                    if (R(p, s, a, b) == 0) continue;
                    // after first: p s c ; second on (s,c) -> (u,z); third on (p,u) -> (x,y)
                    lhs += R(x, y, p, u) * R(u, z, s, c) * R(p, s, a, b);
                  }
              // (|⊗R)(R⊗|)(|⊗R)
              for (std::size_t p = 0; p < d; ++p)
                for (std::size_t s = 0; s < d; ++s)
                  for (std::size_t u = 0; u < d; ++u) {
                    if (R(p, s, b, c) == 0) continue;
                    // after first: a p s ; second on (a,p) -> (x,u); third on (u,s) -> (y,z)
                    rhs += R(y, z, u, s) * R(x, u, a, p) * R(p, s, b, c);
                  }
              if (lhs != rhs) return false;
            }
  return true;
}

}  // namespace oracle
