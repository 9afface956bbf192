#pragma once

namespace triconc {

// Shared tolerance defaults. Invariant checks across the library refer to
// these constants instead of scattering magic numbers.
struct Tolerances {
  double hermiticity = 1e-10;    // max entry of |M - M^dagger|
  double psd = 1e-10;            // density-matrix eigenvalues may dip to -psd
  double unit_trace = 1e-10;     // |Tr(rho) - 1|
  double state_norm = 1e-9;      // pure-state normalisation slack
  double norm_agreement = 1e-9;  // closed-form vs numeric trace norms, bounds
  double entrywise = 1e-12;      // structural identities (transposes, bases)
  double radicand_clamp = 1e-12; // negative radicands above -clamp are rounding
};

inline constexpr Tolerances kTol{};

} // namespace triconc
