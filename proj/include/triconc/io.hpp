#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "state.hpp"
#include "verify.hpp"

namespace triconc::io {

using json = nlohmann::json;

// A state file holds {"dims": [m,n,p], "kind": "pure"|"mixed", "data": ...}
// where data is a length-d list of [re, im] amplitudes for pure states, or a
// d x d nested list of [re, im] entries for mixed ones.
using LoadedState = std::variant<PureState, TripartiteState>;

namespace detail {

inline Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(
        "state file: complex entries must be [re, im] number pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json dump_complex(Complex z) {
  return json::array({z.real(), z.imag()});
}

inline SystemDims parse_dims(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("state file: dims must be a list [m, n, p]");
  std::size_t d[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<std::uint64_t>() == 0)
      throw std::invalid_argument(
          "state file: dims entries must be positive integers");
    d[i] = j[i].get<std::size_t>();
  }
  return SystemDims(d[0], d[1], d[2]);
}

} // namespace detail

inline LoadedState state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("kind") ||
      !j.contains("data"))
    throw std::invalid_argument(
        "state file: expected an object with dims, kind and data");
  const SystemDims dims = detail::parse_dims(j["dims"]);
  const std::string kind = j["kind"].get<std::string>();
  const json& data = j["data"];
  const std::size_t d = dims.total();

  if (kind == "pure") {
    if (!data.is_array() || data.size() != d)
      throw std::invalid_argument(
          "state file: pure data must list one amplitude per basis vector");
    std::vector<Complex> amps(d);
    for (std::size_t i = 0; i < d; ++i)
      amps[i] = detail::parse_complex(data[i]);
    return PureState(dims, std::move(amps));
  }
  if (kind == "mixed") {
    if (!data.is_array() || data.size() != d)
      throw std::invalid_argument("state file: mixed data must be d x d");
    ComplexMatrix rho(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      if (!data[r].is_array() || data[r].size() != d)
        throw std::invalid_argument("state file: mixed data must be d x d");
      for (std::size_t c = 0; c < d; ++c)
        rho(r, c) = detail::parse_complex(data[r][c]);
    }
    return TripartiteState(dims, std::move(rho));
  }
  throw std::invalid_argument("state file: kind must be 'pure' or 'mixed'");
}

inline json to_json(const PureState& v) {
  json data = json::array();
  for (const Complex& a : v.amplitudes())
    data.push_back(detail::dump_complex(a));
  return json{{"dims", {v.dims().m, v.dims().n, v.dims().p}},
              {"kind", "pure"},
              {"data", std::move(data)}};
}

inline json to_json(const TripartiteState& s) {
  const std::size_t d = s.dims().total();
  json data = json::array();
  for (std::size_t r = 0; r < d; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < d; ++c)
      row.push_back(detail::dump_complex(s.rho()(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"dims", {s.dims().m, s.dims().n, s.dims().p}},
              {"kind", "mixed"},
              {"data", std::move(data)}};
}

inline LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open state file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("state file '" + path +
                                "' is not valid JSON: " + e.what());
  }
  return state_from_json(j);
}

inline SystemDims dims_of(const LoadedState& s) {
  return std::visit([](const auto& v) { return v.dims(); }, s);
}

inline TripartiteState as_density(const LoadedState& s) {
  if (std::holds_alternative<PureState>(s))
    return outer_product(std::get<PureState>(s));
  return std::get<TripartiteState>(s);
}

inline json to_json(const BoundReport& rep, const SystemDims& dims) {
  return json{{"dims", {dims.m, dims.n, dims.p}},
              {"norms", rep.norms},
              {"coefficients", rep.coefficients},
              {"bound_terms", rep.bound_terms},
              {"omitted", rep.omitted},
              {"lower_bound", rep.lower_bound},
              {"theorem", rep.theorem},
              {"conditional", rep.conditional}};
}

inline json to_json(const VerifyResult& r) {
  return json{{"suite", r.suite},
              {"samples", r.samples},
              {"violations", r.violations},
              {"worst_residual", r.worst_residual},
              {"elapsed_seconds", r.elapsed_seconds}};
}

} // namespace triconc::io
