#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "dicke/dicke_core.hpp"
#include "test_util.hpp"

using namespace dicke;
using test_util::max_abs;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("ladder coefficients match the collective matrix elements") {
  CHECK(ladder_coeff(2, 1.0, Ladder::Raise) == doctest::Approx(0.0));
  CHECK(ladder_coeff(2, -1.0, Ladder::Raise) == doctest::Approx(std::sqrt(2.0)));
  CHECK(ladder_coeff(3, -1.5, Ladder::Raise) == doctest::Approx(std::sqrt(3.0)));
  // annihilation at both ends of the ladder
  CHECK(ladder_coeff(5, 2.5, Ladder::Raise) == doctest::Approx(0.0));
  CHECK(ladder_coeff(5, -2.5, Ladder::Lower) == doctest::Approx(0.0));
}

TEST_CASE("ladder coefficients reject levels off the J = N/2 ladder") {
  CHECK_THROWS_AS(ladder_coeff(2, 1.5, Ladder::Raise), std::invalid_argument);
  CHECK_THROWS_AS(ladder_coeff(2, 2.0, Ladder::Raise), std::invalid_argument);
  CHECK_THROWS_AS(ladder_coeff(3, -2.5, Ladder::Lower), std::invalid_argument);
  CHECK_THROWS_AS(ladder_coeff(0, 0.0, Ladder::Raise), std::invalid_argument);
}

TEST_CASE("raise coefficient at m equals lower coefficient at m+1") {
  for (int n = 1; n <= 20; ++n) {
    const double j = 0.5 * n;
    for (int k = 0; k < n; ++k) {
      const double m = -j + k;
      CHECK(ladder_coeff(n, m, Ladder::Raise) ==
            doctest::Approx(ladder_coeff(n, m + 1.0, Ladder::Lower)).epsilon(1e-14));
    }
  }
}

TEST_CASE("collective matrices for one dot reduce to a single spin-1/2") {
  const CollectiveOps ops = build_collective_matrices(1);
  Eigen::MatrixXcd jz(2, 2);
  jz << -0.5, 0.0, 0.0, 0.5;
  CHECK(max_abs(ops.jz - jz) == 0.0);
  CHECK(ops.jplus(1, 0) == Complex(1.0, 0.0));
  CHECK(ops.jplus(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("explicit matrix products: [J+,J-] = 2Jz (N=2) and [Jz,J+] = J+ (N=4)") {
  {
    const CollectiveOps ops = build_collective_matrices(2);
    const Eigen::MatrixXcd comm = ops.jplus * ops.jminus - ops.jminus * ops.jplus;
    CHECK(max_abs(comm - 2.0 * ops.jz) <= 1e-14);
  }
  {
    const CollectiveOps ops = build_collective_matrices(4);
    const Eigen::MatrixXcd comm = ops.jz * ops.jplus - ops.jplus * ops.jz;
    CHECK(max_abs(comm - ops.jplus) <= 1e-14);
  }
}

TEST_CASE("angular-momentum algebra holds for every N up to 20") {
  for (int n = 1; n <= 20; ++n) {
    const CollectiveOps ops = build_collective_matrices(n);
    const double j = 0.5 * n;
    const int dim = n + 1;

    CHECK(max_abs(ops.jminus - ops.jplus.adjoint()) == 0.0);
    CHECK(max_abs(ops.jz * ops.jplus - ops.jplus * ops.jz - ops.jplus) <= 1e-12);
    CHECK(max_abs(ops.jz * ops.jminus - ops.jminus * ops.jz + ops.jminus) <= 1e-12);
    CHECK(max_abs(ops.jplus * ops.jminus - ops.jminus * ops.jplus - 2.0 * ops.jz) <=
          1e-12);

    const Eigen::MatrixXcd casimir =
        ops.jminus * ops.jplus + ops.jz * ops.jz + ops.jz;
    CHECK(max_abs(casimir - j * (j + 1.0) * Eigen::MatrixXcd::Identity(dim, dim)) <=
          1e-12);
  }
}

TEST_CASE("fidelity is the squared overlap") {
  std::mt19937 rng(404);
  const DickeState psi = test_util::random_state(rng, 5);
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(fidelity(DickeState::basis(4, 0), DickeState::basis(4, 1)) == 0.0);

  Eigen::VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(fidelity(DickeState(1, plus), DickeState::basis(1, 0)) ==
        doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(fidelity(DickeState::ground(2), DickeState::ground(3)),
                  std::invalid_argument);
}

TEST_CASE("fidelity ignores global phases") {
  std::mt19937 rng(405);
  for (int trial = 0; trial < 20; ++trial) {
    const DickeState psi = test_util::random_state(rng, 6);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);
    const Complex factor = std::exp(Complex(0.0, uniform(rng)));
    const DickeState rotated(6, psi.amplitudes() * factor);
    CHECK(fidelity(psi, rotated) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("canonicalize_global_phase makes the leading amplitude real positive") {
  {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(3);
    amps(0) = Complex(0.0, 1.0);  // i |J,-J>
    const DickeState out = canonicalize_global_phase(DickeState(2, amps));
    CHECK(std::abs(out.amplitude(0) - Complex(1.0, 0.0)) <= 1e-14);
  }
  {
    Eigen::VectorXcd amps(2);
    amps << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    amps *= std::exp(Complex(0.0, kPi / 3.0));
    const DickeState out = canonicalize_global_phase(DickeState(1, amps));
    CHECK(std::abs(out.amplitude(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) <= 1e-14);
    CHECK(std::abs(out.amplitude(1) - Complex(1.0 / std::sqrt(2.0), 0.0)) <= 1e-14);
  }
  {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(3);
    amps(1) = -1.0;  // sign flip on |J,-J+1>
    const DickeState out = canonicalize_global_phase(DickeState(2, amps));
    CHECK(std::abs(out.amplitude(1) - Complex(1.0, 0.0)) <= 1e-14);
  }
}

TEST_CASE("canonicalization is idempotent and fidelity-preserving") {
  std::mt19937 rng(406);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + int(rng() % 10);
    const DickeState psi = test_util::random_state(rng, n);
    const DickeState once = canonicalize_global_phase(psi);
    const DickeState twice = canonicalize_global_phase(once);
    CHECK(fidelity(psi, once) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((once.amplitudes() - twice.amplitudes()).norm() <= 1e-12);
    CHECK(global_phase_of(once) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("DickeState construction enforces length and normalization") {
  CHECK_THROWS_AS(DickeState(2, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(DickeState(2, Eigen::VectorXcd::Zero(3)), std::invalid_argument);

  // deviations up to 1e-6 are renormalized
  Eigen::VectorXcd near = Eigen::VectorXcd::Zero(3);
  near(0) = 1.0 + 5e-7;
  const DickeState ok(2, near);
  CHECK(std::abs(ok.amplitudes().norm() - 1.0) <= 1e-9);

  Eigen::VectorXcd far = Eigen::VectorXcd::Zero(3);
  far(0) = 1.0 + 5e-6;
  CHECK_THROWS_AS(DickeState(2, far), std::invalid_argument);

  CHECK_THROWS_AS(DickeState::basis(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(DickeState::basis(0, 0), std::invalid_argument);
}

TEST_CASE("SystemParams validates inputs and exposes the coupling ratio") {
  const SystemParams params(4, 100.0, 1.0);
  CHECK(params.j() == doctest::Approx(2.0));
  CHECK(params.rwa_ratio() == doctest::Approx(50.0));

  CHECK_THROWS_AS(SystemParams(0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemParams(2, 1.0, -0.5), std::invalid_argument);
}

TEST_CASE("PulseSpec wraps phases and rejects negative durations") {
  const PulseSpec pulse(0, 1.0, -kPi, 1.0);
  CHECK(pulse.phase == doctest::Approx(kPi));
  CHECK_THROWS_AS(PulseSpec(0, -1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PulseSpec(-1, 1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("PulseSequence enforces ordering, range and the principal branch") {
  const SystemParams params(3, 100.0, 1.0);
  std::vector<PulseSpec> good;
  good.emplace_back(0, 0.1, 0.0, 1.0);
  good.emplace_back(2, 0.1, 0.0, 1.0);
  CHECK_NOTHROW(PulseSequence(params, good));

  std::vector<PulseSpec> unordered;
  unordered.emplace_back(1, 0.1, 0.0, 1.0);
  unordered.emplace_back(0, 0.1, 0.0, 1.0);
  CHECK_THROWS_AS(PulseSequence(params, unordered), std::invalid_argument);

  std::vector<PulseSpec> out_of_range;
  out_of_range.emplace_back(3, 0.1, 0.0, 1.0);
  CHECK_THROWS_AS(PulseSequence(params, out_of_range), std::invalid_argument);

  std::vector<PulseSpec> too_long;
  too_long.emplace_back(0, 10.0, 0.0, 1.0);  // angle far beyond pi/2
  CHECK_THROWS_AS(PulseSequence(params, too_long), std::invalid_argument);
}
