#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "qd/shor.hpp"

using namespace qd::shor;
using cd = std::complex<double>;

namespace {

// Oracle: sum_x |x>|11^x mod 15>, measure the function register, apply the
// exact inverse QFT to the exponent register, read y directly.
Distribution oracle_distribution(int f_value) {
  Eigen::Vector4cd x = Eigen::Vector4cd::Zero();
  int count = 0;
  int power = 1;
  for (int e = 0; e < 4; ++e) {
    if (power == f_value) {
      x(e) = 1.0;
      ++count;
    }
    power = power * kBase % kModulus;
  }
  x /= std::sqrt(static_cast<double>(count));
  const Eigen::Vector4cd y = inverse_qft() * x;
  Distribution d{};
  for (int k = 0; k < 4; ++k) d[static_cast<std::size_t>(k)] = std::norm(y(k));
  return d;
}

// Ideal exponent-register part of the circuit as a 4x4 matrix in the y-labelled readout basis.
Mat4 circuit_exponent_unitary() {
  Mat4 u;
  for (int x = 0; x < 4; ++x) {
    StateVector s;
    // Prepare |x>|00> from |0000> with X gates.
    Mat2 flip;
    flip << 0, 1, 1, 0;
    if (x & 1) s.apply(flip, x0);
    if (x & 2) s.apply(flip, x1);
    s.apply(hadamard(), x1);
    s.apply(controlled_phase(-std::numbers::pi / 2), x1, x0);
    s.apply(hadamard(), x0);
    for (int out = 0; out < 4; ++out) {
      const int y = ((out & 1) << 1) | (out >> 1);
      u(y, x) = s.amplitudes()(out << 2);
    }
  }
  return u;
}

}  // namespace

TEST_CASE("circuit shape") {
  const auto c = build_circuit();
  CHECK(c.size() == 10);
  CHECK(c == build_circuit());
  CHECK(c[2].label() == "CNOT x0 t0");
}

TEST_CASE("inverse QFT with bit-reversed readout equals the exact matrix") {
  CHECK((circuit_exponent_unitary() - inverse_qft()).norm() < 1e-12);
}

TEST_CASE("noiseless circuit matches the classical oracle for both target outcomes") {
  bool seen[2] = {false, false};
  for (std::uint64_t i = 0; i < 32; ++i) {
    const ShotResult r = run_once(0.0, 1, i);
    const int f_value = r.target_outcome == 0 ? 1 : 11;
    REQUIRE((r.target_outcome == 0 || r.target_outcome == 3));
    seen[r.target_outcome == 3] = true;
    const Distribution o = oracle_distribution(f_value);
    for (std::size_t y = 0; y < 4; ++y) CHECK(r.probabilities[y] == doctest::Approx(o[y]).epsilon(1e-12));
  }
  CHECK(seen[0]);
  CHECK(seen[1]);
}

TEST_CASE("noise generators form an orthonormal traceless Hermitian basis") {
  const auto& g = noise_generators();
  for (std::size_t a = 0; a < g.size(); ++a) {
    CHECK(std::abs(g[a].trace()) < 1e-15);
    CHECK((g[a] - g[a].adjoint()).norm() < 1e-15);
    for (std::size_t b = 0; b < g.size(); ++b)
      CHECK(std::abs((g[a].adjoint() * g[b]).trace() - (a == b ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("noise unitaries") {
  std::array<double, 15> zero{};
  CHECK((noise_unitary(zero) - Mat4::Identity()).norm() < 1e-15);
  RealizationStream rng(5, 0);
  std::array<double, 15> theta{};
  for (double& t : theta) t = 0.7 * rng.normal();
  const Mat4 u = noise_unitary(theta);
  CHECK((u.adjoint() * u - Mat4::Identity()).norm() < 1e-12);
  // One generator alone: exp(i t Z(x)Z / 2) is diagonal with phases +-t/2.
  std::array<double, 15> single{};
  single[14] = 0.3;
  const Mat4 zz = noise_unitary(single);
  CHECK(std::abs(zz(0, 0) - std::polar(1.0, 0.15)) < 1e-12);
  CHECK(std::abs(zz(1, 1) - std::polar(1.0, -0.15)) < 1e-12);
}

TEST_CASE("mean gate fidelity falls off quadratically in nu") {
  // To second order |tr U / 4|^2 = 1 - sum theta^2 / 4, so the coefficient is 15/4.
  const double nu = 0.02;
  const int samples = 10000;
  double loss = 0.0;
  for (int n = 0; n < samples; ++n) {
    RealizationStream rng(99, static_cast<std::uint64_t>(n));
    std::array<double, 15> theta{};
    for (double& t : theta) t = nu * rng.normal();
    loss += 1.0 - std::norm(noise_unitary(theta).trace() / 4.0);
  }
  const double c = loss / samples / (nu * nu);
  CHECK(c > 0.0);
  CHECK(c == doctest::Approx(15.0 / 4.0).epsilon(0.05));
}

TEST_CASE("norm is preserved through every shot") {
  for (double nu : {0.0, 0.3, 1.0})
    for (std::uint64_t i = 0; i < 20; ++i) {
      const ShotResult r = run_once(nu, 11, i);
      double total = 0.0;
      for (double p : r.probabilities) total += p;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ensemble statistics") {
  NoiseConfig cfg;
  cfg.seed = 7;
  const EnsembleReport r = run_ensemble(cfg);
  CHECK(r.kept == 1000);
  CHECK(r.discarded == 0);
  CHECK(r.stderr_defined);
  for (std::size_t y = 0; y < 4; ++y) {
    CHECK(std::abs(r.mean[y] - kIdealDistribution[y]) < 1e-9);
    CHECK(r.stderr_[y] < 1e-9);
  }

  cfg.realizations = 1;
  const EnsembleReport one = run_ensemble(cfg);
  CHECK_FALSE(one.stderr_defined);
  for (double s : one.stderr_) CHECK(s == 0.0);

  NoiseConfig bad;
  bad.nu = -1.0;
  CHECK_THROWS_AS(run_ensemble(bad), std::invalid_argument);
  bad.nu = 0.0;
  bad.realizations = 0;
  CHECK_THROWS_AS(run_ensemble(bad), std::invalid_argument);
}

TEST_CASE("ensembles are deterministic and independent of the thread count") {
  NoiseConfig cfg;
  cfg.nu = 0.5;
  cfg.seed = 42;
  cfg.realizations = 300;
  cfg.threads = 1;
  const EnsembleReport a = run_ensemble(cfg);
  cfg.threads = 5;
  const EnsembleReport b = run_ensemble(cfg);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  cfg.seed = 43;
  CHECK(run_ensemble(cfg).mean != a.mean);
}

TEST_CASE("braided backend agrees with the ideal one") {
  for (std::uint64_t i = 0; i < 8; ++i) {
    const ShotResult ideal = run_once(0.2, 3, i, Backend::ideal);
    const ShotResult braided = run_once(0.2, 3, i, Backend::braided);
    CHECK(braided.leakage.size() == 2);
    for (double l : braided.leakage) CHECK(l == doctest::Approx(7.0 / 8.0));
    for (std::size_t y = 0; y < 4; ++y) CHECK(braided.probabilities[y] == doctest::Approx(ideal.probabilities[y]).epsilon(1e-12));
  }
}

TEST_CASE("classical postprocessing") {
  const FactorResult two = postprocess(2);
  CHECK(two.tag == "success");
  CHECK(two.period == 2);
  REQUIRE(two.factors);
  CHECK(two.factors->first == 3);
  CHECK(two.factors->second == 5);
  CHECK(postprocess(0).tag == "trivial");
  CHECK_FALSE(postprocess(0).period);
  CHECK(postprocess(1).period == 4);
  CHECK(postprocess(1).tag == "trivial_factors");
  CHECK(postprocess(3).tag == "trivial_factors");
  CHECK(std::gcd(12, 15) == 3);
  CHECK(std::gcd(10, 15) == 5);
  CHECK_THROWS(postprocess(4));
}
