#pragma once

// Independent reference implementations used only by tests. Everything here
// is written naively (nested vectors, explicit index arithmetic, fixed sweep
// counts) on purpose, so agreement with the library is meaningful.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "triconc/complex_matrix.hpp"
#include "triconc/state.hpp"

namespace oracles {

using triconc::Complex;
using triconc::ComplexMatrix;
using triconc::SystemDims;

using Grid = std::vector<std::vector<Complex>>;

inline Grid to_grid(const ComplexMatrix& m) {
  Grid g(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

// Trace norm via 50 unconditional sweeps of two-sided Jacobi on the Gram
// matrix G = M^dagger M, then sum of sqrt(max(0, eigenvalue)). Accurate to
// roughly sqrt(machine epsilon) near zero singular values, so comparisons
// against it should allow 1e-7 of slack.
inline double gram_trace_norm(const ComplexMatrix& m) {
  const std::size_t n = m.cols();
  Grid g(n, std::vector<Complex>(n, Complex(0.0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m.rows(); ++k)
        g[i][j] += std::conj(m(k, i)) * m(k, j);

  for (int sweep = 0; sweep < 50; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex gamma = g[p][q];
        const double ga = std::abs(gamma);
        if (ga < 1e-300) continue;
        const Complex phase = gamma / ga;
        const double tau = (g[q][q].real() - g[p][p].real()) / (2.0 * ga);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex kp = g[k][p];
          const Complex kq = g[k][q];
          g[k][p] = c * kp - s * std::conj(phase) * kq;
          g[k][q] = s * phase * kp + c * kq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex pk = g[p][k];
          const Complex qk = g[q][k];
          g[p][k] = c * pk - s * phase * qk;
          g[q][k] = s * std::conj(phase) * pk + c * qk;
        }
      }
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += std::sqrt(std::max(0.0, g[i][i].real()));
  return sum;
}

// Partial transpose of one subsystem by direct entry swaps.
inline ComplexMatrix direct_partial_transpose(const ComplexMatrix& rho,
                                              const SystemDims& d,
                                              triconc::Subsystem which) {
  const std::size_t total = d.total();
  ComplexMatrix out(total, total);
  for (std::size_t a = 0; a < d.m; ++a)
    for (std::size_t b = 0; b < d.n; ++b)
      for (std::size_t c = 0; c < d.p; ++c)
        for (std::size_t a2 = 0; a2 < d.m; ++a2)
          for (std::size_t b2 = 0; b2 < d.n; ++b2)
            for (std::size_t c2 = 0; c2 < d.p; ++c2) {
              std::size_t ra = a, rb = b, rc = c, ca = a2, cb = b2, cc = c2;
              switch (which) {
                case triconc::Subsystem::A: std::swap(ra, ca); break;
                case triconc::Subsystem::B: std::swap(rb, cb); break;
                case triconc::Subsystem::C: std::swap(rc, cc); break;
              }
              out(triconc::flat_index(ra, rb, rc, d),
                  triconc::flat_index(ca, cb, cc, d)) =
                  rho(triconc::flat_index(a, b, c, d),
                      triconc::flat_index(a2, b2, c2, d));
            }
  return out;
}

// The three realignments written as explicit index formulas. Row and
// column multi-indices follow the canonical slot order.
//   Y7: out[(i,j,mh),(k,l,nh)] = rho[(i,k,mh),(j,l,nh)]
inline ComplexMatrix realign_y7(const ComplexMatrix& rho,
                                const SystemDims& d) {
  ComplexMatrix out(d.m * d.m * d.p, d.n * d.n * d.p);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t j = 0; j < d.m; ++j)
      for (std::size_t k = 0; k < d.n; ++k)
        for (std::size_t l = 0; l < d.n; ++l)
          for (std::size_t mh = 0; mh < d.p; ++mh)
            for (std::size_t nh = 0; nh < d.p; ++nh)
              out((i * d.m + j) * d.p + mh, (k * d.n + l) * d.p + nh) =
                  rho(triconc::flat_index(i, k, mh, d),
                      triconc::flat_index(j, l, nh, d));
  return out;
}

//   Y8: out[(i,j,k),(l,mh,nh)] = rho[(i,k,mh),(j,l,nh)]
//       rows run over (A_row, A_col, B_row), columns (B_col, C_row, C_col).
inline ComplexMatrix realign_y8(const ComplexMatrix& rho,
                                const SystemDims& d) {
  ComplexMatrix out(d.m * d.m * d.n, d.n * d.p * d.p);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t j = 0; j < d.m; ++j)
      for (std::size_t k = 0; k < d.n; ++k)
        for (std::size_t l = 0; l < d.n; ++l)
          for (std::size_t mh = 0; mh < d.p; ++mh)
            for (std::size_t nh = 0; nh < d.p; ++nh)
              out((i * d.m + j) * d.n + k, (l * d.p + mh) * d.p + nh) =
                  rho(triconc::flat_index(i, k, mh, d),
                      triconc::flat_index(j, l, nh, d));
  return out;
}

//   Y9: out[(i,k,l),(j,mh,nh)] = rho[(i,k,mh),(j,l,nh)]
//       rows run over (A_row, B_row, B_col), columns (A_col, C_row, C_col).
inline ComplexMatrix realign_y9(const ComplexMatrix& rho,
                                const SystemDims& d) {
  ComplexMatrix out(d.m * d.n * d.n, d.m * d.p * d.p);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t j = 0; j < d.m; ++j)
      for (std::size_t k = 0; k < d.n; ++k)
        for (std::size_t l = 0; l < d.n; ++l)
          for (std::size_t mh = 0; mh < d.p; ++mh)
            for (std::size_t nh = 0; nh < d.p; ++nh)
              out((i * d.n + k) * d.n + l, (j * d.p + mh) * d.p + nh) =
                  rho(triconc::flat_index(i, k, mh, d),
                      triconc::flat_index(j, l, nh, d));
  return out;
}

// Reduced density matrix by direct summation.
inline ComplexMatrix direct_partial_trace(const ComplexMatrix& rho,
                                          const SystemDims& d,
                                          triconc::Subsystem keep) {
  const std::size_t dk = d.dim(keep);
  ComplexMatrix out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      Complex sum = 0.0;
      for (std::size_t x = 0; x < d.total(); ++x) {
        const auto xi = triconc::unflatten(x, d);
        auto yi = xi;
        yi[static_cast<std::size_t>(keep)] = j;
        if (xi[static_cast<std::size_t>(keep)] != i) continue;
        sum += rho(x, triconc::flat_index(yi[0], yi[1], yi[2], d));
      }
      out(i, j) = sum;
    }
  return out;
}

// Sorted absolute entries, for multiset-preservation checks.
inline std::vector<double> sorted_abs_entries(const ComplexMatrix& m) {
  std::vector<double> v;
  v.reserve(m.rows() * m.cols());
  for (const Complex& z : m.data()) v.push_back(std::abs(z));
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace oracles
