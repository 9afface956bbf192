#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "complex_matrix.hpp"
#include "tolerances.hpp"

namespace triconc {

namespace detail {

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-13;

struct JacobiRotation {
  double c;      // cosine
  double s;      // sine (non-negative pairing with t's sign)
  Complex phase; // e^{i phi} of the off-diagonal entry
  double t;      // tangent, for diagonal updates
};

// Rotation diagonalising the Hermitian 2x2 block [[alpha, gamma],
// [conj(gamma), beta]]. Caller guarantees |gamma| > 0.
inline JacobiRotation make_rotation(double alpha, double beta, Complex gamma) {
  const double g = std::abs(gamma);
  const Complex phase = gamma / g;
  const double tau = (beta - alpha) / (2.0 * g);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c, phase, t};
}

} // namespace detail

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// returned in ascending order. Iterates sweeps until the off-diagonal
// Frobenius norm falls below 1e-13 times the Frobenius norm of the input,
// and throws std::runtime_error if that has not happened after 100 sweeps.
inline std::vector<double> hermitian_eigenvalues(
    const ComplexMatrix& m, double hermiticity_tol = kTol.hermiticity) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  if (!m.is_finite())
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix has non-finite entries");
  if (hermiticity_defect(m) > hermiticity_tol)
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix is not Hermitian within tolerance");

  const std::size_t n = m.rows();
  // Symmetrise to remove the (tolerated) asymmetry before iterating.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = Complex(m(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  }

  const double scale = a.frobenius_norm();
  std::vector<double> diag(n);
  if (scale == 0.0) return diag;

  for (int sweep = 0; sweep < detail::kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off) <= detail::kJacobiRelTol * scale) {
      for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
      std::sort(diag.begin(), diag.end());
      return diag;
    }

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex gamma = a(p, q);
        if (std::abs(gamma) == 0.0) continue;
        const auto rot = detail::make_rotation(a(p, p).real(),
                                               a(q, q).real(), gamma);
        const double g = std::abs(gamma);
        a(p, p) = Complex(a(p, p).real() - rot.t * g, 0.0);
        a(q, q) = Complex(a(q, q).real() + rot.t * g, 0.0);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex kp = a(k, p);
          const Complex kq = a(k, q);
          a(k, p) = rot.c * kp - rot.s * std::conj(rot.phase) * kq;
          a(k, q) = rot.s * rot.phase * kp + rot.c * kq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
      }
    }
  }
  throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");
}

// Singular values by one-sided (Hestenes) Jacobi, descending. Each rotation
// orthogonalises a pair of columns; the rotation angles are exactly those of
// a cyclic Jacobi diagonalisation of the Gram matrix M^dagger M, but applied
// to M itself so the singular values emerge as final column norms. Working
// on M directly keeps small singular values at full absolute accuracy, which
// squaring into the Gram matrix would destroy.
//
// Rank-deficient inputs need one extra rule beyond the relative pair test.
// Merging two dependent columns leaves a residue column of pure rounding
// noise; residues of successive merges stay almost parallel to each other,
// so their mutual cosine never falls and a purely relative test livelocks,
// shrinking them towards denormals forever. Columns below 1e-13 of the
// largest column norm are therefore treated as spent and excluded from
// further rotations: each contributes at most that much to the trace norm,
// and any merge residue lands straight below the cut (it is eps times the
// merged column's scale). Pairs of retained columns keep the full relative
// criterion, so a near-parallel pair always merges no matter how small,
// which is what keeps small singular values exact.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
  if (!m.is_finite())
    throw std::invalid_argument("singular_values: matrix has non-finite entries");

  // Operate on whichever side has fewer columns; the spectrum is shared.
  ComplexMatrix w = m.cols() <= m.rows() ? m : m.dagger();
  const std::size_t rows = w.rows();
  const std::size_t n = w.cols();

  auto col_dot = [&](std::size_t i, std::size_t j) { // <col_i, col_j>
    Complex s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += std::conj(w(k, i)) * w(k, j);
    return s;
  };
  auto col_sq = [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += std::norm(w(k, j));
    return s;
  };

  double maxsq = 0.0;
  for (std::size_t j = 0; j < n; ++j) maxsq = std::max(maxsq, col_sq(j));
  if (maxsq == 0.0) return std::vector<double>(n, 0.0);

  bool converged = n < 2;
  for (int sweep = 0; sweep < detail::kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    const double spent =
        detail::kJacobiRelTol * detail::kJacobiRelTol * maxsq;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double app = col_sq(p);
        const double aqq = col_sq(q);
        if (app <= spent || aqq <= spent) continue;
        const Complex gamma = col_dot(p, q);
        if (std::abs(gamma) <= detail::kJacobiRelTol * std::sqrt(app * aqq))
          continue;
        converged = false;
        const auto rot = detail::make_rotation(app, aqq, gamma);
        for (std::size_t k = 0; k < rows; ++k) {
          const Complex kp = w(k, p);
          const Complex kq = w(k, q);
          w(k, p) = rot.c * kp - rot.s * std::conj(rot.phase) * kq;
          w(k, q) = rot.s * rot.phase * kp + rot.c * kq;
        }
      }
    }
    maxsq = 0.0;
    for (std::size_t j = 0; j < n; ++j) maxsq = std::max(maxsq, col_sq(j));
  }
  if (!converged)
    throw std::runtime_error("singular_values: Jacobi did not converge");

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(col_sq(j));
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

// Trace norm ||M||_1 = sum of singular values. Summed smallest-first so the
// tiny ones are not swallowed by rounding.
inline double trace_norm(const ComplexMatrix& m) {
  std::vector<double> sv = singular_values(m);
  double sum = 0.0;
  for (auto it = sv.rbegin(); it != sv.rend(); ++it) sum += *it;
  return sum;
}

} // namespace triconc
