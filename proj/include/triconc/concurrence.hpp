#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "state.hpp"
#include "tolerances.hpp"

namespace triconc {

// Concurrence of a normalised tripartite pure state,
//   C = sqrt(3 - Tr(rho_A^2) - Tr(rho_B^2) - Tr(rho_C^2)),
// evaluated through the honest pipeline (outer product, partial traces,
// purities). The radicand is clamped at zero to absorb rounding on product
// states, where it vanishes identically.
inline double concurrence_pure(const PureState& v) {
  const TripartiteState rho = outer_product(v);
  double radicand = 3.0;
  for (Subsystem k : {Subsystem::A, Subsystem::B, Subsystem::C})
    radicand -= purity(partial_trace(rho, k));
  return std::sqrt(std::max(0.0, radicand));
}

// Three-qubit pure states in Schmidt form,
//   |psi> = l0|000> + l1 e^{i psi}|100> + l2|101> + l3|110> + l4|111>,
// with l_k >= 0, sum of squares 1 and psi in [0, pi]. Every closed-form
// expression below is a polynomial in mu_k = l_k^2 and
// Delta = |l1 l4 e^{i psi} - l2 l3|^2.
class SchmidtParams {
 public:
  SchmidtParams(const std::array<double, 5>& lambda, double psi)
      : lambda_(lambda), psi_(psi) {
    double sum = 0.0;
    for (double l : lambda_) {
      if (!(l >= 0.0) || !std::isfinite(l))
        throw std::invalid_argument(
            "SchmidtParams: coefficients must be non-negative and finite");
      sum += l * l;
    }
    if (std::abs(sum - 1.0) > kTol.state_norm)
      throw std::invalid_argument(
          "SchmidtParams: squared coefficients must sum to 1");
    if (!std::isfinite(psi_) || psi_ < 0.0 || psi_ > kPi)
      throw std::invalid_argument("SchmidtParams: psi must lie in [0, pi]");
  }

  double lambda(std::size_t k) const { return lambda_.at(k); }
  double psi() const { return psi_; }
  double mu(std::size_t k) const { return lambda_.at(k) * lambda_.at(k); }

  // Delta = |l1 l4 e^{i psi} - l2 l3|^2
  double delta() const {
    const double re = lambda_[1] * lambda_[4] * std::cos(psi_) -
                      lambda_[2] * lambda_[3];
    const double im = lambda_[1] * lambda_[4] * std::sin(psi_);
    return re * re + im * im;
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::array<double, 5> lambda_;
  double psi_;
};

// The Schmidt-form state as an explicit amplitude vector. The five nonzero
// amplitudes sit at composite indices 0, 4, 5, 6, 7.
inline PureState schmidt_state(const SchmidtParams& sp) {
  const SystemDims dims(2, 2, 2);
  std::vector<Complex> amps(8, Complex(0.0));
  amps[flat_index(0, 0, 0, dims)] = sp.lambda(0);
  amps[flat_index(1, 0, 0, dims)] =
      sp.lambda(1) * Complex(std::cos(sp.psi()), std::sin(sp.psi()));
  amps[flat_index(1, 0, 1, dims)] = sp.lambda(2);
  amps[flat_index(1, 1, 0, dims)] = sp.lambda(3);
  amps[flat_index(1, 1, 1, dims)] = sp.lambda(4);
  return PureState(dims, std::move(amps));
}

// Single-subsystem purities of a Schmidt-form state.
inline double purity_closed_form(const SchmidtParams& sp, Subsystem k) {
  const double mu0 = sp.mu(0), mu1 = sp.mu(1);
  switch (k) {
    case Subsystem::A:
      return 1.0 - 2.0 * mu0 * (1.0 - mu0 - mu1);
    case Subsystem::B:
      return 1.0 - 2.0 * mu0 * (1.0 - mu0 - mu1 - sp.mu(2)) -
             2.0 * sp.delta();
    case Subsystem::C:
      return 1.0 - 2.0 * mu0 * (1.0 - mu0 - mu1 - sp.mu(3)) -
             2.0 * sp.delta();
  }
  throw std::invalid_argument("purity_closed_form: invalid subsystem");
}

// C^2 = 2 mu0 (3 - 3 mu0 - 3 mu1 - mu2 - mu3) + 4 Delta.
inline double concurrence_closed_form(const SchmidtParams& sp) {
  const double mu0 = sp.mu(0);
  const double radicand =
      2.0 * mu0 * (3.0 - 3.0 * mu0 - 3.0 * sp.mu(1) - sp.mu(2) - sp.mu(3)) +
      4.0 * sp.delta();
  if (radicand < -kTol.radicand_clamp)
    throw std::invalid_argument(
        "concurrence_closed_form: radicand is negative beyond rounding");
  return std::sqrt(std::max(0.0, radicand));
}

// Trace norms of the three single-subsystem partial transposes of a
// Schmidt-form state (which = 1, 2, 3):
//   ||Y1|| = 1 + 2 sqrt(mu0 (mu2 + mu3 + mu4)),
//   ||Y2|| = 1 + 2 sqrt(Delta + mu0 (mu3 + mu4)),
//   ||Y3|| = 1 + 2 sqrt(Delta + mu0 (mu2 + mu4)).
inline double class1_norm_closed_form(const SchmidtParams& sp, int which) {
  const double mu0 = sp.mu(0);
  switch (which) {
    case 1:
      return 1.0 + 2.0 * std::sqrt(mu0 * (sp.mu(2) + sp.mu(3) + sp.mu(4)));
    case 2:
      return 1.0 + 2.0 * std::sqrt(sp.delta() + mu0 * (sp.mu(3) + sp.mu(4)));
    case 3:
      return 1.0 + 2.0 * std::sqrt(sp.delta() + mu0 * (sp.mu(2) + sp.mu(4)));
    default:
      throw std::invalid_argument("class1_norm_closed_form: which must be 1..3");
  }
}

// The gap C^2 - (||Yk|| - 1)^2 in closed form (which = 1, 2, 3):
//   k=1: 2 mu0 mu4 + 4 Delta,
//   k=2: 4 mu0 mu2 + 2 mu0 mu4,
//   k=3: 4 mu0 mu3 + 2 mu0 mu4.
// Each is a sum of non-negative products, which is what makes the class-I
// bounds sound on this family.
inline double class1_gap_closed_form(const SchmidtParams& sp, int which) {
  const double mu0 = sp.mu(0);
  switch (which) {
    case 1:
      return 2.0 * mu0 * sp.mu(4) + 4.0 * sp.delta();
    case 2:
      return 4.0 * mu0 * sp.mu(2) + 2.0 * mu0 * sp.mu(4);
    case 3:
      return 4.0 * mu0 * sp.mu(3) + 2.0 * mu0 * sp.mu(4);
    default:
      throw std::invalid_argument("class1_gap_closed_form: which must be 1..3");
  }
}

// For |Phi> = l0|000> + l4|111> every catalogued norm collapses to the same
// value and the concurrence is elementary.
struct SpecialTypeValues {
  double concurrence;
  double common_norm; // shared by all nine catalogued operations
};

inline SpecialTypeValues special_type_values(double l0, double l4) {
  if (!std::isfinite(l0) || !std::isfinite(l4) || l0 < 0.0 || l4 < 0.0)
    throw std::invalid_argument(
        "special_type_values: coefficients must be non-negative and finite");
  if (std::abs(l0 * l0 + l4 * l4 - 1.0) > kTol.state_norm)
    throw std::invalid_argument(
        "special_type_values: squared coefficients must sum to 1");
  return {std::sqrt(6.0) * l0 * l4, 1.0 + 2.0 * l0 * l4};
}

} // namespace triconc
