#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "triconc/concurrence.hpp"
#include "triconc/gpt.hpp"
#include "triconc/states.hpp"

using namespace triconc;
using Catch::Approx;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("concurrence of known pure states", "[concurrence]") {
  const SystemDims d(2, 2, 2);

  // GHZ: all three reduced purities are 1/2, so C = sqrt(3/2).
  std::vector<Complex> ghz(8, Complex(0.0));
  ghz[0] = kInvSqrt2;
  ghz[7] = kInvSqrt2;
  REQUIRE(concurrence_pure(PureState(d, ghz)) ==
          Approx(std::sqrt(1.5)).margin(1e-12));

  // (|000> + |101>)/sqrt(2): B stays pure, A and C are maximally mixed,
  // giving C = sqrt(3 - 1/2 - 1 - 1/2) = 1.
  std::vector<Complex> bell_ac(8, Complex(0.0));
  bell_ac[0] = kInvSqrt2;
  bell_ac[5] = kInvSqrt2;
  REQUIRE(concurrence_pure(PureState(d, bell_ac)) ==
          Approx(1.0).margin(1e-12));

  // Product states have zero concurrence (radicand clamps to 0).
  const PureState product = random_product_state(d, RngSeed{41});
  REQUIRE(concurrence_pure(product) == Approx(0.0).margin(1e-6));
  REQUIRE(concurrence_pure(product) >= 0.0);
}

TEST_CASE("SchmidtParams validation and derived quantities",
          "[concurrence]") {
  const SchmidtParams sp({0.5, 0.5, 0.5, 0.5, 0.0}, kPi / 3.0);
  REQUIRE(sp.mu(0) == Approx(0.25).margin(1e-15));
  REQUIRE(sp.psi() == Approx(kPi / 3.0));
  // Delta = |l1 l4 e^{i psi} - l2 l3|^2 with l4 = 0 collapses to (l2 l3)^2.
  REQUIRE(sp.delta() == Approx(0.0625).margin(1e-12));

  const SchmidtParams aligned({0.5, 0.5, 0.5, 0.5, 0.0}, 0.0);
  REQUIRE(aligned.delta() == Approx(0.0625).margin(1e-12));

  REQUIRE_THROWS_AS(SchmidtParams({0.5, 0.5, 0.5, 0.5, 0.5}, 0.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(SchmidtParams({-0.5, 0.5, 0.5, 0.5, 0.0}, 0.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(SchmidtParams({1.0, 0.0, 0.0, 0.0, 0.0}, -0.1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(SchmidtParams({1.0, 0.0, 0.0, 0.0, 0.0}, 3.2),
                    std::invalid_argument);
}

TEST_CASE("schmidt_state places amplitudes on the five-term support",
          "[concurrence]") {
  const SchmidtParams sp({0.4, 0.3, 0.5, 0.4, std::sqrt(0.34)}, 1.0);
  const PureState v = schmidt_state(sp);
  REQUIRE(v.amplitude(0, 0, 0) == Complex(0.4));
  REQUIRE(std::abs(v.amplitude(1, 0, 0) -
                   0.3 * Complex(std::cos(1.0), std::sin(1.0))) < 1e-15);
  REQUIRE(v.amplitude(1, 0, 1) == Complex(0.5));
  REQUIRE(v.amplitude(1, 1, 0) == Complex(0.4));
  REQUIRE(std::abs(v.amplitude(1, 1, 1) - std::sqrt(0.34)) < 1e-15);
  REQUIRE(v.amplitude(0, 0, 1) == Complex(0.0));
  REQUIRE(v.amplitude(0, 1, 0) == Complex(0.0));
  REQUIRE(v.amplitude(0, 1, 1) == Complex(0.0));
}

TEST_CASE("closed forms agree with the numeric pipeline", "[concurrence]") {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const SchmidtParams sp = random_schmidt_params(substream(RngSeed{42}, i));
    const PureState v = schmidt_state(sp);
    const TripartiteState rho = outer_product(v);

    REQUIRE(std::abs(concurrence_closed_form(sp) - concurrence_pure(v)) <
            1e-9);
    for (Subsystem k : {Subsystem::A, Subsystem::B, Subsystem::C})
      REQUIRE(std::abs(purity_closed_form(sp, k) -
                       purity(partial_trace(rho, k))) < 1e-9);
    for (int which = 1; which <= 3; ++which)
      REQUIRE(std::abs(class1_norm_closed_form(sp, which) -
                       gpt_norm(rho, catalog_op(which))) < 1e-9);
  }
}

TEST_CASE("closed-form gap identity", "[concurrence]") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const SchmidtParams sp = random_schmidt_params(substream(RngSeed{43}, i));
    const double c2 = std::pow(concurrence_closed_form(sp), 2);
    for (int which = 1; which <= 3; ++which) {
      const double gap = class1_gap_closed_form(sp, which);
      const double n1 = class1_norm_closed_form(sp, which) - 1.0;
      REQUIRE(std::abs(c2 - n1 * n1 - gap) < 1e-12);
      REQUIRE(gap >= 0.0);
    }
  }
}

TEST_CASE("closed forms at the GHZ corner", "[concurrence]") {
  const SchmidtParams ghz({kInvSqrt2, 0.0, 0.0, 0.0, kInvSqrt2}, 0.0);
  REQUIRE(concurrence_closed_form(ghz) ==
          Approx(std::sqrt(1.5)).margin(1e-12));
  for (int which = 1; which <= 3; ++which)
    REQUIRE(class1_norm_closed_form(ghz, which) ==
            Approx(2.0).margin(1e-12));
  for (Subsystem k : {Subsystem::A, Subsystem::B, Subsystem::C})
    REQUIRE(purity_closed_form(ghz, k) == Approx(0.5).margin(1e-12));
}

TEST_CASE("special_type_values", "[concurrence]") {
  const SpecialTypeValues v = special_type_values(0.6, 0.8);
  REQUIRE(v.concurrence == Approx(std::sqrt(6.0) * 0.48).margin(1e-12));
  REQUIRE(v.common_norm == Approx(1.96).margin(1e-12));

  // Product endpoints: no entanglement, unit norm.
  const SpecialTypeValues edge = special_type_values(1.0, 0.0);
  REQUIRE(edge.concurrence == 0.0);
  REQUIRE(edge.common_norm == 1.0);

  REQUIRE_THROWS_AS(special_type_values(0.5, 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(special_type_values(-0.6, 0.8), std::invalid_argument);
  REQUIRE_THROWS_AS(class1_norm_closed_form(
                        SchmidtParams({1, 0, 0, 0, 0}, 0.0), 4),
                    std::invalid_argument);
}
