#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "triconc/io.hpp"
#include "triconc/states.hpp"

using Catch::Approx;
using triconc::io::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TRICONC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("demo-dct prints the worked example", "[cli]") {
  const CliResult table = run_cli("demo-dct");
  REQUIRE(table.exit_code == 0);
  REQUIRE(table.out.find("Y1") != std::string::npos);
  REQUIRE(table.out.find("lower bound") != std::string::npos);

  const CliResult r = run_cli("demo-dct --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["theorem"] == "T1");
  REQUIRE(j["lower_bound"].get<double>() == Approx(1.0 / 3.0).margin(1e-9));
  REQUIRE(j["norms"]["Y1"].get<double>() == Approx(4.0 / 3.0).margin(1e-9));
  REQUIRE(j["norms"]["Y5"].get<double>() ==
          Approx(0.8727).margin(5e-4));
  bool has_y1 = false;
  for (const auto& v : j["violations"]) has_y1 = has_y1 || v == "Y1";
  REQUIRE(has_y1);
}

TEST_CASE("random states are reproducible and feed the other commands",
          "[cli]") {
  const CliResult a = run_cli("random --dims 2,3,2 --kind pure --seed 7");
  const CliResult b = run_cli("random --dims 2,3,2 --kind pure --seed 7");
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
  const json state = json::parse(a.out);
  REQUIRE(state["dims"] == json({2, 3, 2}));
  REQUIRE(state["kind"] == "pure");

  TempFile file("triconc_cli_random.json");
  const CliResult written = run_cli(
      "random --dims 2,2,2 --kind mixed --rank 2 --seed 5 --out " +
      file.path.string());
  REQUIRE(written.exit_code == 0);
  REQUIRE(std::filesystem::exists(file.path));

  const CliResult norms =
      run_cli("norms --state " + file.path.string() + " --format json");
  REQUIRE(norms.exit_code == 0);
  const json nj = json::parse(norms.out);
  REQUIRE(nj["norms"].size() == 9);

  const CliResult bound = run_cli("bound --state " + file.path.string() +
                                  " --theorem t1 --format json");
  REQUIRE(bound.exit_code == 0);
  const json bj = json::parse(bound.out);
  REQUIRE(bj["lower_bound"].get<double>() >= 0.0);
  REQUIRE(bj["conditional"] == false);

  const CliResult corollary = run_cli(
      "bound --state " + file.path.string() + " --theorem corollary "
      "--format json");
  REQUIRE(corollary.exit_code == 0);
  REQUIRE(json::parse(corollary.out)["conditional"] == true);
}

TEST_CASE("norms subcommand honours --ops", "[cli]") {
  TempFile file("triconc_cli_ops.json");
  {
    std::ofstream out(file.path);
    out << triconc::io::to_json(triconc::random_pure_state(
               triconc::SystemDims(2, 2, 2), triconc::RngSeed{71}))
               .dump();
  }

  const CliResult named =
      run_cli("norms --state " + file.path.string() + " --ops Y1,Y7 "
              "--format json");
  REQUIRE(named.exit_code == 0);
  const json nj = json::parse(named.out);
  REQUIRE(nj["norms"].size() == 2);
  REQUIRE(nj["norms"].contains("Y1"));
  REQUIRE(nj["norms"].contains("Y7"));

  // A slot list naming Y7's slots reports under the catalogue label.
  const CliResult slots =
      run_cli("norms --state " + file.path.string() + " --ops cA,rB "
              "--format json");
  REQUIRE(slots.exit_code == 0);
  const json sj = json::parse(slots.out);
  REQUIRE(sj["norms"].size() == 1);
  REQUIRE(sj["norms"].contains("Y7"));
  REQUIRE(sj["norms"]["Y7"] == nj["norms"]["Y7"]);
}

TEST_CASE("verify subcommand reports and exits by violation count",
          "[cli]") {
  const CliResult pass = run_cli(
      "verify --suite closed-forms --samples 100 --seed 3 --format json");
  REQUIRE(pass.exit_code == 0);
  const json pj = json::parse(pass.out);
  REQUIRE(pj["suite"] == "closed-forms");
  REQUIRE(pj["violations"] == 0);
  REQUIRE(pj["samples"] == 100);

  const CliResult table = run_cli("verify --suite t1-pure --samples 50");
  REQUIRE(table.exit_code == 0);
  REQUIRE(table.out.find("PASS") != std::string::npos);

  // A negative tolerance turns every sample into a violation; the exit
  // code must follow.
  const CliResult fail = run_cli(
      "verify --suite closed-forms --samples 10 --tolerance -1");
  REQUIRE(fail.exit_code == 1);
  REQUIRE(fail.out.find("FAIL") != std::string::npos);
}

TEST_CASE("input errors exit with code 2", "[cli]") {
  REQUIRE(run_cli("norms --state /nonexistent.json").exit_code == 2);
  REQUIRE(run_cli("verify --suite bogus").exit_code == 2);
  REQUIRE(run_cli("bogus-subcommand").exit_code == 2);
  REQUIRE(run_cli("").exit_code == 2);
  REQUIRE(run_cli("demo-dct --format yaml").exit_code == 2);
  REQUIRE(run_cli("random --dims 2,2").exit_code == 2);
  REQUIRE(run_cli("random --dims 2,2,2 --kind mixed --rank 99").exit_code ==
          2);

  TempFile file("triconc_cli_t2.json");
  {
    std::ofstream out(file.path);
    out << triconc::io::to_json(triconc::random_mixed_state(
               triconc::SystemDims(3, 2, 2), 2, triconc::RngSeed{72}))
               .dump();
  }
  const CliResult t2 = run_cli("bound --state " + file.path.string() +
                               " --theorem t2");
  REQUIRE(t2.exit_code == 2);
  REQUIRE(t2.out.find("permute") != std::string::npos);

  // Unnormalised state files are rejected during load.
  TempFile bad("triconc_cli_bad.json");
  {
    std::ofstream out(bad.path);
    out << R"({"dims": [2, 2, 2], "kind": "pure", "data": )"
        << R"([[0.1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})";
  }
  REQUIRE(run_cli("norms --state " + bad.path.string()).exit_code == 2);
}
