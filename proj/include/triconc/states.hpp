#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "concurrence.hpp"
#include "state.hpp"

namespace triconc {

struct RngSeed {
  std::uint64_t value = 0;
};

namespace detail {

// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

} // namespace detail

// Independent seed for the index-th substream of a base seed. Sampling
// loops draw sample i from substream(seed, i), so results are identical
// however the indices are split across workers.
inline RngSeed substream(RngSeed base, std::uint64_t index) {
  std::uint64_t x = base.value ^ (detail::kGolden * (index + 1));
  return RngSeed{detail::mix64(detail::mix64(x))};
}

// xoshiro256++ with splitmix64 state expansion. Fixed algorithm (not
// std::mt19937) so streams reproduce bit-for-bit across platforms.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(RngSeed seed) {
    std::uint64_t x = seed.value;
    for (auto& word : s_) {
      x += detail::kGolden;
      word = detail::mix64(x);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = detail::rotl64(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl64(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via the Marsaglia polar method, caching the spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  std::array<std::uint64_t, 4> s_{};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// GHZ-like basis member |Psi_j^s> = (|j>_AB|0>_C + s |3-j>_AB|1>_C)/sqrt(2),
// j in 0..3 read as two qubit digits on AB, sign s = +1 or -1.
inline PureState ghz_basis_state(std::size_t j, int sign) {
  if (j > 3) throw std::invalid_argument("ghz_basis_state: j must be in 0..3");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("ghz_basis_state: sign must be +1 or -1");
  const SystemDims dims(2, 2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(8, Complex(0.0));
  amps[flat_index(j / 2, j % 2, 0, dims)] = r;
  const std::size_t jb = 3 - j;
  amps[flat_index(jb / 2, jb % 2, 1, dims)] = sign * r;
  return PureState(dims, std::move(amps));
}

// Mixing weights of a GHZ-diagonal three-qubit state: lambda0^+ and
// lambda0^- weight |Psi_0^+> and |Psi_0^->, lambda_j (j = 1..3) weights the
// pair |Psi_j^+>, |Psi_j^-> equally. They must sum to one:
// lambda0^+ + lambda0^- + 2(lambda_1 + lambda_2 + lambda_3) = 1.
struct DctWeights {
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  std::array<double, 3> lambda = {0.0, 0.0, 0.0};

  DctWeights(double l0p, double l0m, const std::array<double, 3>& l)
      : lambda0_plus(l0p), lambda0_minus(l0m), lambda(l) {
    double sum = l0p + l0m;
    for (double w : lambda) sum += 2.0 * w;
    const bool non_negative =
        l0p >= 0.0 && l0m >= 0.0 && lambda[0] >= 0.0 && lambda[1] >= 0.0 &&
        lambda[2] >= 0.0;
    if (!non_negative || !std::isfinite(sum))
      throw std::invalid_argument("DctWeights: weights must be non-negative");
    if (std::abs(sum - 1.0) > kTol.unit_trace)
      throw std::invalid_argument("DctWeights: weights must sum to 1");
  }
};

inline TripartiteState dct_state(const DctWeights& w) {
  const SystemDims dims(2, 2, 2);
  ComplexMatrix rho(8, 8);
  auto add_projector = [&rho](const PureState& v, double weight) {
    if (weight == 0.0) return;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        rho(r, c) += weight * v.amplitude(r) * std::conj(v.amplitude(c));
  };
  add_projector(ghz_basis_state(0, +1), w.lambda0_plus);
  add_projector(ghz_basis_state(0, -1), w.lambda0_minus);
  for (std::size_t j = 1; j <= 3; ++j) {
    add_projector(ghz_basis_state(j, +1), w.lambda[j - 1]);
    add_projector(ghz_basis_state(j, -1), w.lambda[j - 1]);
  }
  return TripartiteState(dims, std::move(rho));
}

// |Phi> = l0|000> + l4|111>.
inline PureState special_type_state(double l0, double l4) {
  special_type_values(l0, l4); // validates the coefficients
  const SystemDims dims(2, 2, 2);
  std::vector<Complex> amps(8, Complex(0.0));
  amps[0] = l0;
  amps[7] = l4;
  return PureState(dims, std::move(amps));
}

// Convex mixture sum_i w_i |v_i><v_i| of pure states on shared dimensions.
inline TripartiteState mix_pure_states(const std::vector<double>& weights,
                                       const std::vector<PureState>& states) {
  if (weights.size() != states.size() || states.empty())
    throw std::invalid_argument(
        "mix_pure_states: need matching, non-empty weights and states");
  const SystemDims dims = states.front().dims();
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("mix_pure_states: weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kTol.unit_trace)
    throw std::invalid_argument("mix_pure_states: weights must sum to 1");
  const std::size_t d = dims.total();
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!(states[i].dims() == dims))
      throw std::invalid_argument("mix_pure_states: mixed dimensions");
    if (weights[i] == 0.0) continue;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        rho(r, c) += weights[i] * states[i].amplitude(r) *
                     std::conj(states[i].amplitude(c));
  }
  return TripartiteState(dims, std::move(rho));
}

// Random Schmidt parameters: five |N(0,1)| draws normalised to the sphere,
// then psi uniform on [0, pi]. Draw order is part of the contract.
inline SchmidtParams random_schmidt_params(Xoshiro256pp& rng) {
  std::array<double, 5> lambda{};
  double norm_sq = 0.0;
  while (norm_sq == 0.0) {
    norm_sq = 0.0;
    for (double& l : lambda) {
      l = std::abs(rng.normal());
      norm_sq += l * l;
    }
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& l : lambda) l *= inv;
  return SchmidtParams(lambda, rng.uniform(0.0, 3.14159265358979323846));
}

inline SchmidtParams random_schmidt_params(RngSeed seed) {
  Xoshiro256pp rng(seed);
  return random_schmidt_params(rng);
}

// Haar-ish random pure state: d complex N(0,1) amplitudes (real part drawn
// before imaginary, index order), normalised.
inline PureState random_pure_state(const SystemDims& dims, Xoshiro256pp& rng) {
  const std::size_t d = dims.total();
  std::vector<Complex> amps(d);
  double norm_sq = 0.0;
  while (norm_sq == 0.0) {
    norm_sq = 0.0;
    for (Complex& a : amps) {
      const double re = rng.normal();
      const double im = rng.normal();
      a = Complex(re, im);
      norm_sq += std::norm(a);
    }
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Complex& a : amps) a *= inv;
  return PureState(dims, std::move(amps));
}

inline PureState random_pure_state(const SystemDims& dims, RngSeed seed) {
  Xoshiro256pp rng(seed);
  return random_pure_state(dims, rng);
}

// Product state |x>_A |y>_B |z>_C with each factor drawn like
// random_pure_state on its own subsystem (A first, then B, then C).
inline PureState random_product_state(const SystemDims& dims,
                                      Xoshiro256pp& rng) {
  auto factor = [&rng](std::size_t dim) {
    std::vector<Complex> v(dim);
    double norm_sq = 0.0;
    while (norm_sq == 0.0) {
      norm_sq = 0.0;
      for (Complex& a : v) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Complex(re, im);
        norm_sq += std::norm(a);
      }
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : v) a *= inv;
    return v;
  };
  const std::vector<Complex> xa = factor(dims.m);
  const std::vector<Complex> xb = factor(dims.n);
  const std::vector<Complex> xc = factor(dims.p);
  std::vector<Complex> amps(dims.total());
  for (std::size_t a = 0; a < dims.m; ++a)
    for (std::size_t b = 0; b < dims.n; ++b)
      for (std::size_t c = 0; c < dims.p; ++c)
        amps[flat_index(a, b, c, dims)] = xa[a] * xb[b] * xc[c];
  return PureState(dims, std::move(amps));
}

inline PureState random_product_state(const SystemDims& dims, RngSeed seed) {
  Xoshiro256pp rng(seed);
  return random_product_state(dims, rng);
}

// Random rank-limited mixed state: `rank` uniform weights normalised to sum
// one (drawn first), then `rank` random pure states mixed together.
inline TripartiteState random_mixed_state(const SystemDims& dims,
                                          std::size_t rank, RngSeed seed) {
  if (rank == 0 || rank > dims.total())
    throw std::invalid_argument(
        "random_mixed_state: rank must be in 1..total dimension");
  Xoshiro256pp rng(seed);
  std::vector<double> weights(rank);
  double sum = 0.0;
  while (sum == 0.0) {
    sum = 0.0;
    for (double& w : weights) {
      w = rng.uniform01();
      sum += w;
    }
  }
  for (double& w : weights) w /= sum;
  std::vector<PureState> states;
  states.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i)
    states.push_back(random_pure_state(dims, rng));
  return mix_pure_states(weights, states);
}

} // namespace triconc
