#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "eigen.hpp"
#include "tolerances.hpp"

namespace triconc {

enum class Subsystem { A = 0, B = 1, C = 2 };

inline char subsystem_letter(Subsystem s) {
  switch (s) {
    case Subsystem::A: return 'A';
    case Subsystem::B: return 'B';
    case Subsystem::C: return 'C';
  }
  throw std::invalid_argument("subsystem_letter: invalid subsystem");
}

// Local dimensions (m, n, p) of subsystems A, B, C.
struct SystemDims {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t p = 0;

  SystemDims() = default;
  SystemDims(std::size_t m_, std::size_t n_, std::size_t p_)
      : m(m_), n(n_), p(p_) {
    if (m == 0 || n == 0 || p == 0)
      throw std::invalid_argument("SystemDims: dimensions must be positive");
  }

  std::size_t total() const { return m * n * p; }

  std::size_t dim(Subsystem s) const {
    switch (s) {
      case Subsystem::A: return m;
      case Subsystem::B: return n;
      case Subsystem::C: return p;
    }
    throw std::invalid_argument("SystemDims::dim: invalid subsystem");
  }

  bool operator==(const SystemDims&) const = default;
};

// Row-major composite index with A slowest: |a b c> -> (a*n + b)*p + c.
inline std::size_t flat_index(std::size_t a, std::size_t b, std::size_t c,
                              const SystemDims& d) {
  if (a >= d.m || b >= d.n || c >= d.p)
    throw std::out_of_range("flat_index: subsystem index out of range");
  return (a * d.n + b) * d.p + c;
}

inline std::array<std::size_t, 3> unflatten(std::size_t idx,
                                            const SystemDims& d) {
  if (idx >= d.total())
    throw std::out_of_range("unflatten: index out of range");
  return {idx / (d.n * d.p), (idx / d.p) % d.n, idx % d.p};
}

// Normalised pure state on A x B x C. Construction validates length,
// finiteness and unit norm, so instances are valid by construction.
class PureState {
 public:
  PureState(const SystemDims& dims, std::vector<Complex> amplitudes)
      : dims_(dims), amps_(std::move(amplitudes)) {
    if (amps_.size() != dims_.total())
      throw std::invalid_argument(
          "PureState: amplitude count does not match dimensions");
    double norm_sq = 0.0;
    for (const Complex& a : amps_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::invalid_argument("PureState: non-finite amplitude");
      norm_sq += std::norm(a);
    }
    if (std::abs(norm_sq - 1.0) > kTol.state_norm)
      throw std::invalid_argument("PureState: vector is not normalised");
  }

  const SystemDims& dims() const { return dims_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t i) const { return amps_.at(i); }
  Complex amplitude(std::size_t a, std::size_t b, std::size_t c) const {
    return amps_[flat_index(a, b, c, dims_)];
  }

 private:
  SystemDims dims_;
  std::vector<Complex> amps_;
};

// Density matrix on A x B x C. Construction validates shape, hermiticity,
// unit trace and positive semidefiniteness (eigenvalues >= -1e-10).
class TripartiteState {
 public:
  TripartiteState(const SystemDims& dims, ComplexMatrix rho)
      : dims_(dims), rho_(std::move(rho)) {
    const std::size_t d = dims_.total();
    if (rho_.rows() != d || rho_.cols() != d)
      throw std::invalid_argument(
          "TripartiteState: matrix shape does not match dimensions");
    if (!rho_.is_finite())
      throw std::invalid_argument("TripartiteState: non-finite entries");
    if (hermiticity_defect(rho_) > kTol.hermiticity)
      throw std::invalid_argument("TripartiteState: matrix is not Hermitian");
    if (std::abs(rho_.trace().real() - 1.0) > kTol.unit_trace ||
        std::abs(rho_.trace().imag()) > kTol.unit_trace)
      throw std::invalid_argument("TripartiteState: trace is not 1");
    const std::vector<double> eigs = hermitian_eigenvalues(rho_);
    if (eigs.front() < -kTol.psd)
      throw std::invalid_argument(
          "TripartiteState: matrix is not positive semidefinite");
  }

  const SystemDims& dims() const { return dims_; }
  const ComplexMatrix& rho() const { return rho_; }

 private:
  SystemDims dims_;
  ComplexMatrix rho_;
};

inline TripartiteState outer_product(const PureState& v) {
  const std::size_t d = v.dims().total();
  ComplexMatrix rho(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      rho(r, c) = v.amplitude(r) * std::conj(v.amplitude(c));
  return TripartiteState(v.dims(), std::move(rho));
}

// Reduced density matrix of one subsystem, tracing out the other two.
inline ComplexMatrix partial_trace(const TripartiteState& s, Subsystem keep) {
  const SystemDims& d = s.dims();
  const ComplexMatrix& rho = s.rho();
  const std::size_t dk = d.dim(keep);
  ComplexMatrix out(dk, dk);
  for (std::size_t a = 0; a < d.m; ++a)
    for (std::size_t b = 0; b < d.n; ++b)
      for (std::size_t c = 0; c < d.p; ++c) {
        const std::size_t row = flat_index(a, b, c, d);
        for (std::size_t i = 0; i < dk; ++i) {
          std::size_t a2 = a, b2 = b, c2 = c, j = 0;
          switch (keep) {
            case Subsystem::A: a2 = i; j = a; break;
            case Subsystem::B: b2 = i; j = b; break;
            case Subsystem::C: c2 = i; j = c; break;
          }
          out(j, i) += rho(row, flat_index(a2, b2, c2, d));
        }
      }
  return out;
}

// Tr(R^2) of a Hermitian matrix; the imaginary part must vanish.
inline double purity(const ComplexMatrix& r) {
  if (r.rows() != r.cols())
    throw std::invalid_argument("purity: matrix must be square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) t += r(i, j) * r(j, i);
  if (std::abs(t.imag()) > kTol.hermiticity)
    throw std::invalid_argument("purity: Tr(R^2) has an imaginary residue");
  return t.real();
}

} // namespace triconc
