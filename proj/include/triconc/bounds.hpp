#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpt.hpp"
#include "state.hpp"
#include "tolerances.hpp"

namespace triconc {

// One evaluated lower bound on the concurrence. `bound_terms` holds each
// candidate coefficient * (norm - 1); `lower_bound` is their maximum,
// floored at zero (the concurrence is never negative). `conditional` marks
// bounds whose validity rests on a hypothesis about the state that the
// caller asserts rather than the library checks.
struct BoundReport {
  std::string theorem;
  bool conditional = false;
  std::map<std::string, double> norms;
  std::map<std::string, double> coefficients;
  std::map<std::string, double> bound_terms;
  std::vector<std::string> omitted;
  double lower_bound = 0.0;
};

namespace detail {

inline void add_term(BoundReport& rep, int k, double coefficient,
                     const TripartiteState& s) {
  const std::string label = "Y" + std::to_string(k);
  const double norm = gpt_norm(s, catalog_op(k));
  rep.norms[label] = norm;
  rep.coefficients[label] = coefficient;
  rep.bound_terms[label] = coefficient * (norm - 1.0);
}

inline void finalize(BoundReport& rep) {
  double best = 0.0;
  for (const auto& [label, term] : rep.bound_terms) best = std::max(best, term);
  rep.lower_bound = best;
}

} // namespace detail

// Three-qubit bound: C >= max over the class-I norms of (||Y_k|| - 1) and
// the class-II norms of (||Y_k|| - 1)/sqrt(2).
inline BoundReport bound_theorem1(const TripartiteState& s) {
  if (!(s.dims() == SystemDims(2, 2, 2)))
    throw std::invalid_argument(
        "bound_theorem1: requires dimensions (2,2,2); use bound_theorem2 for "
        "higher-dimensional systems");
  BoundReport rep;
  rep.theorem = "T1";
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= 3; ++k) detail::add_term(rep, k, 1.0, s);
  for (int k = 4; k <= 6; ++k) detail::add_term(rep, k, inv_sqrt2, s);
  detail::finalize(rep);
  return rep;
}

// General-dimension bound for dims (m, n, p) with m <= n and m <= p:
//   C >= sqrt(1/(m(m-1)))  (||Y_k|| - 1)  for k = 1, 4,
//   C >= sqrt(1/(q(q-1)))  (||Y_k|| - 1)  for k = 2, 6 with q = min(n, mp),
//   C >= sqrt(1/(r(r-1)))  (||Y_k|| - 1)  for k = 3, 5 with r = min(p, mn).
// Terms whose cut dimension is 1 carry no information and are omitted.
inline BoundReport bound_theorem2(const TripartiteState& s) {
  const SystemDims& d = s.dims();
  if (d.m > d.n || d.m > d.p) {
    std::array<Subsystem, 3> order = {Subsystem::A, Subsystem::B,
                                      Subsystem::C};
    std::stable_sort(order.begin(), order.end(),
                     [&d](Subsystem x, Subsystem y) {
                       return d.dim(x) < d.dim(y);
                     });
    std::string wanted;
    for (Subsystem k : order) wanted += subsystem_letter(k);
    throw std::invalid_argument(
        "bound_theorem2: requires m <= n and m <= p; permute the subsystems "
        "to order (" + wanted + ") first");
  }
  BoundReport rep;
  rep.theorem = "T2";
  const std::size_t q = std::min(d.n, d.m * d.p);
  const std::size_t r = std::min(d.p, d.m * d.n);
  auto coefficient = [](std::size_t dim) {
    return std::sqrt(1.0 / (static_cast<double>(dim) *
                            static_cast<double>(dim - 1)));
  };
  auto add_pair = [&](int k1, int k2, std::size_t dim) {
    if (dim < 2) {
      rep.omitted.push_back("Y" + std::to_string(k1));
      rep.omitted.push_back("Y" + std::to_string(k2));
      return;
    }
    detail::add_term(rep, k1, coefficient(dim), s);
    detail::add_term(rep, k2, coefficient(dim), s);
  };
  add_pair(1, 4, d.m);
  add_pair(2, 6, q);
  add_pair(3, 5, r);
  detail::finalize(rep);
  return rep;
}

// Three-qubit bound C >= max over all nine catalogued norms of
// (||Y_k|| - 1). Valid when the mixture admits an optimal pure-state
// decomposition within the Schmidt family; the caller asserts that
// hypothesis, hence conditional = true.
inline BoundReport bound_corollary(const TripartiteState& s) {
  if (!(s.dims() == SystemDims(2, 2, 2)))
    throw std::invalid_argument("bound_corollary: requires dimensions (2,2,2)");
  BoundReport rep;
  rep.theorem = "Corollary";
  rep.conditional = true;
  for (int k = 1; k <= 9; ++k) detail::add_term(rep, k, 1.0, s);
  detail::finalize(rep);
  return rep;
}

// One single-subsystem cut of a pure state: the linear-entropy deficit
// 1 - Tr(rho_k^2) must dominate coefficient * (||image|| - 1)^2, where the
// image operation moves that subsystem's column slot together with the row
// slots of the other two. Cuts with unit minimal dimension are degenerate
// (both sides vanish).
struct CutCheck {
  Subsystem cut = Subsystem::A;
  std::string op;
  double purity_deficit = 0.0;
  double coefficient = 0.0;
  double norm = 1.0;
  double residual = 0.0; // deficit - coefficient * (norm - 1)^2
  bool degenerate = false;
  bool holds = false;
};

inline std::array<CutCheck, 3> proof_cut_inequalities(
    const PureState& v, double tol = kTol.norm_agreement) {
  const SystemDims& d = v.dims();
  const TripartiteState rho = outer_product(v);
  const std::array<std::pair<Subsystem, int>, 3> plan = {
      std::pair<Subsystem, int>{Subsystem::A, 4},
      std::pair<Subsystem, int>{Subsystem::B, 6},
      std::pair<Subsystem, int>{Subsystem::C, 5}};
  std::array<CutCheck, 3> out;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto [k, op_index] = plan[i];
    CutCheck& check = out[i];
    check.cut = k;
    check.op = "Y" + std::to_string(op_index);
    check.purity_deficit = 1.0 - purity(partial_trace(rho, k));
    const std::size_t dim =
        std::min(d.dim(k), d.total() / d.dim(k));
    check.degenerate = dim < 2;
    if (check.degenerate) {
      check.coefficient = 0.0;
      check.residual = check.purity_deficit;
    } else {
      check.coefficient = 1.0 / (static_cast<double>(dim) *
                                 static_cast<double>(dim - 1));
      check.norm = gpt_norm(rho, catalog_op(op_index));
      const double gap = check.norm - 1.0;
      check.residual = check.purity_deficit - check.coefficient * gap * gap;
    }
    check.holds = check.residual >= -tol;
  }
  return out;
}

// Relabel the subsystems: the k-th subsystem of the result is subsystem
// order[k] of the input. Used to bring states into the dimension ordering
// bound_theorem2 expects.
inline TripartiteState permute_subsystems(const TripartiteState& s,
                                          const std::array<Subsystem, 3>& order) {
  bool seen[3] = {false, false, false};
  for (Subsystem k : order) seen[static_cast<int>(k)] = true;
  if (!(seen[0] && seen[1] && seen[2]))
    throw std::invalid_argument(
        "permute_subsystems: order must name each subsystem once");

  const SystemDims& d = s.dims();
  const SystemDims nd(d.dim(order[0]), d.dim(order[1]), d.dim(order[2]));
  const std::size_t total = d.total();
  ComplexMatrix rho(total, total);
  for (std::size_t row = 0; row < total; ++row) {
    const std::array<std::size_t, 3> nr = unflatten(row, nd);
    std::array<std::size_t, 3> old_row{};
    for (std::size_t k = 0; k < 3; ++k)
      old_row[static_cast<std::size_t>(order[k])] = nr[k];
    for (std::size_t col = 0; col < total; ++col) {
      const std::array<std::size_t, 3> ncn = unflatten(col, nd);
      std::array<std::size_t, 3> old_col{};
      for (std::size_t k = 0; k < 3; ++k)
        old_col[static_cast<std::size_t>(order[k])] = ncn[k];
      rho(row, col) =
          s.rho()(flat_index(old_row[0], old_row[1], old_row[2], d),
                  flat_index(old_col[0], old_col[1], old_col[2], d));
    }
  }
  return TripartiteState(nd, std::move(rho));
}

} // namespace triconc
