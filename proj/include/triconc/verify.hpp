#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "concurrence.hpp"
#include "states.hpp"

namespace triconc {

// Monte-Carlo verification suites. Each suite reduces a sample to a single
// signed residual where positive means "in violation"; a sample counts as a
// violation when its residual exceeds the configured tolerance.
enum class Suite {
  t1_pure,           // theorem-1 bound <= concurrence on Schmidt states
  corollary_numeric, // realignment bound <= concurrence on Schmidt states
  cuts,              // cut inequalities + theorem-2 soundness, mixed dims
  closed_forms,      // closed-form concurrence / norms match numerics
};

inline Suite parse_suite(std::string_view name) {
  if (name == "t1-pure") return Suite::t1_pure;
  if (name == "corollary-numeric") return Suite::corollary_numeric;
  if (name == "cuts") return Suite::cuts;
  if (name == "closed-forms") return Suite::closed_forms;
  throw std::invalid_argument("parse_suite: unknown suite '" +
                              std::string(name) + "'");
}

inline std::string suite_name(Suite s) {
  switch (s) {
    case Suite::t1_pure: return "t1-pure";
    case Suite::corollary_numeric: return "corollary-numeric";
    case Suite::cuts: return "cuts";
    case Suite::closed_forms: return "closed-forms";
  }
  throw std::invalid_argument("suite_name: invalid suite");
}

struct VerifyConfig {
  std::uint64_t samples = 100000;
  RngSeed seed{42};
  double tolerance = 1e-9;
  unsigned threads = 0; // 0 = hardware concurrency
};

struct VerifyResult {
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double worst_residual = 0.0; // largest residual seen (positive = bad)
  double elapsed_seconds = 0.0;
};

namespace detail {

// Runs fn(i) for i in [0, count), split into contiguous chunks across
// workers. Sample i always derives its randomness from substream(seed, i),
// and the per-worker results merge by sum / max, so the outcome does not
// depend on the worker count.
template <typename Fn>
inline void sample_loop(std::uint64_t count, unsigned threads, Fn&& fn,
                        std::uint64_t& violations, double& worst) {
  violations = 0;
  worst = -std::numeric_limits<double>::infinity();
  if (count == 0) {
    worst = 0.0;
    return;
  }
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency()
                                  : threads;
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, count));

  std::vector<std::uint64_t> chunk_violations(workers, 0);
  std::vector<double> chunk_worst(
      workers, -std::numeric_limits<double>::infinity());
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run_chunk = [&](unsigned w) {
    const std::uint64_t lo = count * w / workers;
    const std::uint64_t hi = count * (w + 1) / workers;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) {
        const double residual = fn(i);
        chunk_worst[w] = std::max(chunk_worst[w], residual);
        if (residual > 0.0) ++chunk_violations[w];
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run_chunk, w);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (unsigned w = 0; w < workers; ++w) {
    violations += chunk_violations[w];
    worst = std::max(worst, chunk_worst[w]);
  }
}

} // namespace detail

// The residual of one sample of each suite; `tol` is subtracted already, so
// any positive return is a genuine violation.
namespace detail {

inline double t1_pure_residual(RngSeed seed, std::uint64_t i, double tol) {
  const SchmidtParams sp = random_schmidt_params(substream(seed, i));
  const PureState v = schmidt_state(sp);
  const BoundReport rep = bound_theorem1(outer_product(v));
  return rep.lower_bound - concurrence_pure(v) - tol;
}

inline double corollary_residual(RngSeed seed, std::uint64_t i, double tol) {
  const SchmidtParams sp = random_schmidt_params(substream(seed, i));
  const PureState v = schmidt_state(sp);
  const TripartiteState rho = outer_product(v);
  double best = 0.0;
  for (int k = 7; k <= 9; ++k)
    best = std::max(best, gpt_norm(rho, catalog_op(k)) - 1.0);
  return best - concurrence_pure(v) - tol;
}

inline double closed_forms_residual(RngSeed seed, std::uint64_t i,
                                    double tol) {
  const SchmidtParams sp = random_schmidt_params(substream(seed, i));
  const PureState v = schmidt_state(sp);
  const TripartiteState rho = outer_product(v);
  double worst =
      std::abs(concurrence_closed_form(sp) - concurrence_pure(v));
  for (int k = 1; k <= 3; ++k)
    worst = std::max(worst, std::abs(class1_norm_closed_form(sp, k) -
                                     gpt_norm(rho, catalog_op(k))));
  return worst - tol;
}

inline double cuts_residual(const SystemDims& dims, RngSeed seed,
                            std::uint64_t i, double tol) {
  const PureState v = random_pure_state(dims, substream(seed, i));
  double worst = -std::numeric_limits<double>::infinity();
  for (const CutCheck& check : proof_cut_inequalities(v, tol))
    worst = std::max(worst, -check.residual);
  const BoundReport rep = bound_theorem2(outer_product(v));
  worst = std::max(worst, rep.lower_bound - concurrence_pure(v));
  return worst - tol;
}

} // namespace detail

inline VerifyResult run_suite(Suite suite, const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerifyResult result;
  result.suite = suite_name(suite);

  const RngSeed seed = config.seed;
  const double tol = config.tolerance;
  std::uint64_t violations = 0;
  double worst = 0.0;

  switch (suite) {
    case Suite::t1_pure:
      detail::sample_loop(
          config.samples, config.threads,
          [&](std::uint64_t i) {
            return detail::t1_pure_residual(seed, i, tol);
          },
          violations, worst);
      result.samples = config.samples;
      break;
    case Suite::corollary_numeric:
      detail::sample_loop(
          config.samples, config.threads,
          [&](std::uint64_t i) {
            return detail::corollary_residual(seed, i, tol);
          },
          violations, worst);
      result.samples = config.samples;
      break;
    case Suite::closed_forms:
      detail::sample_loop(
          config.samples, config.threads,
          [&](std::uint64_t i) {
            return detail::closed_forms_residual(seed, i, tol);
          },
          violations, worst);
      result.samples = config.samples;
      break;
    case Suite::cuts: {
      // Bulk of the samples on three qubits, one tenth on (2,3,2) to
      // exercise an unequal-dimension cut. Distinct substream ranges keep
      // the two phases independent.
      const std::uint64_t extra = config.samples / 10;
      std::uint64_t v2 = 0;
      double w2 = 0.0;
      detail::sample_loop(
          config.samples, config.threads,
          [&](std::uint64_t i) {
            return detail::cuts_residual(SystemDims(2, 2, 2), seed, i, tol);
          },
          violations, worst);
      detail::sample_loop(
          extra, config.threads,
          [&](std::uint64_t i) {
            return detail::cuts_residual(SystemDims(2, 3, 2), seed,
                                         config.samples + i, tol);
          },
          v2, w2);
      violations += v2;
      worst = std::max(worst, w2);
      result.samples = config.samples + extra;
      break;
    }
  }

  result.violations = violations;
  // Report the residual with the tolerance added back, so the number
  // printed is the raw margin (<= tolerance means pass).
  result.worst_residual = worst + tol;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

// Checks the identity C^2 - (||Y_k|| - 1)^2 = gap_k for k = 1..3 on random
// Schmidt states, along two routes: purely closed-form, and with C and the
// norms recomputed numerically. Also confirms each gap is non-negative.
// Not a CLI suite; the acceptance checks drive it directly.
inline VerifyResult run_class1_gap_identities(const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerifyResult result;
  result.suite = "class1-gap-identities";
  result.samples = config.samples;

  const RngSeed seed = config.seed;
  const double tol = config.tolerance;
  std::uint64_t violations = 0;
  double worst = 0.0;
  detail::sample_loop(
      config.samples, config.threads,
      [&](std::uint64_t i) {
        const SchmidtParams sp = random_schmidt_params(substream(seed, i));
        const PureState v = schmidt_state(sp);
        const TripartiteState rho = outer_product(v);
        const double c_closed = concurrence_closed_form(sp);
        const double c_numeric = concurrence_pure(v);
        double res = -std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 3; ++k) {
          const double gap = class1_gap_closed_form(sp, k);
          res = std::max(res, -gap);
          const double n_closed = class1_norm_closed_form(sp, k) - 1.0;
          const double n_numeric = gpt_norm(rho, catalog_op(k)) - 1.0;
          res = std::max(
              res, std::abs(c_closed * c_closed - n_closed * n_closed - gap));
          res = std::max(res, std::abs(c_numeric * c_numeric -
                                       n_numeric * n_numeric - gap));
        }
        return res - tol;
      },
      violations, worst);

  result.violations = violations;
  result.worst_residual = worst + tol;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

} // namespace triconc
