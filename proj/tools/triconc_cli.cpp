// Command-line front end: trace norms under generalized partial
// transpositions, concurrence lower bounds, Monte-Carlo verification
// suites, and random state generation.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triconc/triconc.hpp"

namespace {

using triconc::io::json;

std::string fmt6(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

void print_kv(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(16) << key << value << "\n";
}

triconc::SystemDims parse_dims_flag(const std::string& text) {
  std::size_t d[3];
  char comma1, comma2;
  std::istringstream is(text);
  long long v[3];
  if (!(is >> v[0] >> comma1 >> v[1] >> comma2 >> v[2]) || comma1 != ',' ||
      comma2 != ',' || !(is >> std::ws).eof() || v[0] < 1 || v[1] < 1 ||
      v[2] < 1)
    throw std::invalid_argument("--dims expects m,n,p with positive integers");
  for (int i = 0; i < 3; ++i) d[i] = static_cast<std::size_t>(v[i]);
  return triconc::SystemDims(d[0], d[1], d[2]);
}

// An --ops token is an operation name (Y1..Y9, identity, or a slot list).
// Comma-joined Y-names like "Y1,Y7" are accepted too: the whole-string
// reading as one slot list wins when both parse.
std::vector<std::pair<std::string, triconc::GptOperation>> parse_ops_flag(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, triconc::GptOperation>> ops;
  auto add = [&ops](const std::string& name) {
    const triconc::GptOperation op = triconc::parse_operation(name);
    ops.emplace_back(triconc::operation_label(op), op);
  };
  for (const std::string& token : tokens) {
    try {
      add(token);
      continue;
    } catch (const std::invalid_argument&) {
      if (token.find(',') == std::string::npos) throw;
    }
    std::istringstream is(token);
    std::string part;
    while (std::getline(is, part, ',')) add(part);
  }
  if (ops.empty()) throw std::invalid_argument("--ops produced no operations");
  return ops;
}

void emit(const json& j, const std::string& format,
          const std::function<void()>& table) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    table();
}

int run_norms(const std::string& state_path,
              const std::vector<std::string>& ops_flag, double tolerance,
              const std::string& format) {
  const triconc::io::LoadedState loaded =
      triconc::io::load_state_file(state_path);
  const triconc::TripartiteState rho = triconc::io::as_density(loaded);

  std::vector<std::pair<std::string, triconc::GptOperation>> ops;
  if (ops_flag.empty())
    for (int k = 1; k <= 9; ++k)
      ops.emplace_back("Y" + std::to_string(k), triconc::catalog_op(k));
  else
    ops = parse_ops_flag(ops_flag);

  json norms = json::object();
  json violations = json::array();
  std::vector<std::pair<std::string, double>> rows;
  for (const auto& [name, op] : ops) {
    const double norm = triconc::gpt_norm(rho, op);
    norms[name] = norm;
    rows.emplace_back(name, norm);
    if (norm > 1.0 + tolerance) violations.push_back(name);
  }

  const triconc::SystemDims dims = rho.dims();
  json out{{"dims", {dims.m, dims.n, dims.p}},
           {"norms", std::move(norms)},
           {"violations", violations}};
  emit(out, format, [&] {
    print_kv("dims", std::to_string(dims.m) + " x " + std::to_string(dims.n) +
                         " x " + std::to_string(dims.p));
    std::cout << std::left << std::setw(12) << "op" << std::setw(14) << "norm"
              << "> 1\n";
    for (const auto& [name, norm] : rows)
      std::cout << std::left << std::setw(12) << name << std::setw(14)
                << fmt6(norm) << (norm > 1.0 + tolerance ? "yes" : "no")
                << "\n";
    print_kv("entangled", violations.empty() ? "not detected" : "yes");
  });
  return 0;
}

int run_bound(const std::string& state_path, const std::string& theorem,
              const std::string& format) {
  const triconc::io::LoadedState loaded =
      triconc::io::load_state_file(state_path);
  const triconc::TripartiteState rho = triconc::io::as_density(loaded);

  triconc::BoundReport rep;
  if (theorem == "t1")
    rep = triconc::bound_theorem1(rho);
  else if (theorem == "t2")
    rep = triconc::bound_theorem2(rho);
  else if (theorem == "corollary")
    rep = triconc::bound_corollary(rho);
  else
    throw std::invalid_argument("--theorem must be t1, t2 or corollary");

  const triconc::SystemDims dims = rho.dims();
  emit(triconc::io::to_json(rep, dims), format, [&] {
    print_kv("dims", std::to_string(dims.m) + " x " + std::to_string(dims.n) +
                         " x " + std::to_string(dims.p));
    print_kv("theorem", rep.theorem +
                            (rep.conditional ? "  (conditional)" : ""));
    std::cout << std::left << std::setw(12) << "op" << std::setw(14) << "norm"
              << std::setw(14) << "coefficient" << "term\n";
    for (const auto& [name, norm] : rep.norms)
      std::cout << std::left << std::setw(12) << name << std::setw(14)
                << fmt6(norm) << std::setw(14)
                << fmt6(rep.coefficients.at(name))
                << fmt6(rep.bound_terms.at(name)) << "\n";
    for (const std::string& name : rep.omitted)
      std::cout << std::left << std::setw(12) << name
                << "omitted (degenerate cut)\n";
    print_kv("lower bound", fmt6(rep.lower_bound));
  });
  return 0;
}

int run_verify(const std::string& suite_flag, std::uint64_t samples,
               std::uint64_t seed, double tolerance, unsigned threads,
               const std::string& format) {
  triconc::VerifyConfig config;
  config.samples = samples;
  config.seed = triconc::RngSeed{seed};
  config.tolerance = tolerance;
  config.threads = threads;
  const triconc::VerifyResult result =
      triconc::run_suite(triconc::parse_suite(suite_flag), config);

  emit(triconc::io::to_json(result), format, [&] {
    print_kv("suite", result.suite);
    print_kv("samples", std::to_string(result.samples));
    print_kv("violations", std::to_string(result.violations));
    print_kv("worst residual", fmt6(result.worst_residual));
    print_kv("elapsed", fmt6(result.elapsed_seconds) + " s");
    print_kv("verdict", result.violations == 0 ? "PASS" : "FAIL");
  });
  return result.violations == 0 ? 0 : 1;
}

int run_demo_dct(const std::string& format) {
  // GHZ-diagonal example: lambda0+ = 1/3, lambda1 = lambda3 = 1/6, rest 0.
  // Only the A-side partial transpose flags it; its trace norm is 4/3 and
  // the three-qubit bound gives C >= 1/3.
  const triconc::DctWeights weights(1.0 / 3.0, 0.0,
                                    {1.0 / 6.0, 0.0, 1.0 / 6.0});
  const triconc::TripartiteState rho = triconc::dct_state(weights);
  const triconc::BoundReport rep = triconc::bound_theorem1(rho);
  const triconc::EntanglementScan scan = triconc::is_gpt_entangled(rho);

  json norms = json::object();
  for (std::size_t k = 0; k < 9; ++k)
    norms["Y" + std::to_string(k + 1)] = scan.norms[k];
  json violations = json::array();
  for (const auto& v : scan.violations) violations.push_back(v.op);
  json out = triconc::io::to_json(rep, rho.dims());
  out["norms"] = std::move(norms);
  out["violations"] = std::move(violations);

  emit(out, format, [&] {
    print_kv("state", "GHZ-diagonal demo (weights 1/3, 0; 1/6, 0, 1/6)");
    std::cout << std::left << std::setw(12) << "op" << std::setw(14) << "norm"
              << "> 1\n";
    for (std::size_t k = 0; k < 9; ++k) {
      const double norm = scan.norms[k];
      std::cout << std::left << std::setw(12) << "Y" + std::to_string(k + 1)
                << std::setw(14) << fmt6(norm)
                << (norm > 1.0 + triconc::kTol.norm_agreement ? "yes" : "no")
                << "\n";
    }
    print_kv("entangled", scan.entangled ? "yes" : "not detected");
    print_kv("lower bound", fmt6(rep.lower_bound) + "  (theorem T1)");
  });
  return 0;
}

int run_random(const std::string& dims_flag, const std::string& kind,
               std::size_t rank, std::uint64_t seed,
               const std::string& out_path) {
  const triconc::SystemDims dims = parse_dims_flag(dims_flag);
  const triconc::RngSeed rng_seed{seed};
  json j;
  if (kind == "pure") {
    j = triconc::io::to_json(triconc::random_pure_state(dims, rng_seed));
  } else if (kind == "mixed") {
    const std::size_t effective_rank = rank == 0 ? dims.total() : rank;
    j = triconc::io::to_json(
        triconc::random_mixed_state(dims, effective_rank, rng_seed));
  } else {
    throw std::invalid_argument("--kind must be pure or mixed");
  }
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw std::invalid_argument("cannot open output file '" + out_path +
                                  "'");
    out << j.dump(2) << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Concurrence lower bounds for tripartite states from trace norms "
      "of generalized partial transpositions"};
  app.require_subcommand(1);

  std::string state_path, format = "table", theorem = "t1";
  std::string suite = "t1-pure", dims_flag, kind = "pure", out_path;
  std::vector<std::string> ops_flag;
  std::uint64_t samples = 100000, seed = 42;
  double tolerance = 1e-9;
  unsigned threads = 0;
  std::size_t rank = 0;

  CLI::App* norms = app.add_subcommand(
      "norms", "Trace norms of a state under catalogued or custom operations");
  norms->add_option("--state", state_path, "state file (JSON)")->required();
  norms->add_option("--ops", ops_flag,
                    "operations (Y1..Y9, identity, or slot lists like cA,rB); "
                    "default all nine");
  norms->add_option("--tolerance", tolerance, "slack above 1 before flagging");
  norms->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* bound = app.add_subcommand(
      "bound", "Concurrence lower bound for a state");
  bound->add_option("--state", state_path, "state file (JSON)")->required();
  bound->add_option("--theorem", theorem, "t1, t2 or corollary")
      ->check(CLI::IsMember({"t1", "t2", "corollary"}));
  bound->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Monte-Carlo verification suites");
  verify->add_option("--suite", suite,
                     "t1-pure, corollary-numeric, cuts or closed-forms")
      ->required();
  verify->add_option("--samples", samples, "sample count");
  verify->add_option("--seed", seed, "base RNG seed");
  verify->add_option("--tolerance", tolerance, "violation tolerance");
  verify->add_option("--threads", threads, "worker count (0 = auto)");
  verify->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* demo = app.add_subcommand(
      "demo-dct", "Worked GHZ-diagonal example with norms and bound");
  demo->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* random = app.add_subcommand(
      "random", "Write a random state file");
  random->add_option("--dims", dims_flag, "dimensions m,n,p")->required();
  random->add_option("--kind", kind, "pure or mixed")
      ->check(CLI::IsMember({"pure", "mixed"}));
  random->add_option("--rank", rank, "mixture rank (mixed only; 0 = full)");
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--out", out_path, "output path (default stdout)");

  int rc = 0;
  norms->callback(
      [&] { rc = run_norms(state_path, ops_flag, tolerance, format); });
  bound->callback([&] { rc = run_bound(state_path, theorem, format); });
  verify->callback([&] {
    rc = run_verify(suite, samples, seed, tolerance, threads, format);
  });
  demo->callback([&] { rc = run_demo_dct(format); });
  random->callback(
      [&] { rc = run_random(dims_flag, kind, rank, seed, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
