#include <complex>
#include <random>

#include "doctest.h"
#include "qd/exact.hpp"

using qd::ExactMatrix;
using qd::ExactScalar;

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-6, 6);
  std::uniform_int_distribution<int> k(0, 4);
  return ExactScalar({c(rng), c(rng), c(rng), c(rng)}, k(rng));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("zeta powers and square roots") {
  CHECK(ExactScalar::zeta(8) == ExactScalar(1));
  CHECK(ExactScalar::zeta(4) == ExactScalar(-1));
  CHECK(ExactScalar::zeta(-1) == ExactScalar::zeta(7));
  CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == ExactScalar(2));
  CHECK(ExactScalar::sqrt2() * ExactScalar::inv_sqrt2() == ExactScalar(1));
  CHECK(ExactScalar::inv_sqrt2(2) == ExactScalar::inv_sqrt2() * ExactScalar::inv_sqrt2());
  CHECK(ExactScalar::imag_unit() * ExactScalar::imag_unit() == ExactScalar(-1));
  CHECK(close(ExactScalar::zeta(1).to_complex(), std::polar(1.0, M_PI / 4)));
}

TEST_CASE("ring operations agree with complex arithmetic") {
  std::mt19937 rng(12345);
  for (int n = 0; n < 500; ++n) {
    const ExactScalar a = random_scalar(rng);
    const ExactScalar b = random_scalar(rng);
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
    CHECK(close((a - b).to_complex(), a.to_complex() - b.to_complex()));
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
    CHECK(a * b == b * a);
    CHECK((a + b) * b == a * b + b * b);
  }
}

TEST_CASE("canonical form makes equality structural") {
  const ExactScalar half_via_sqrt = ExactScalar::inv_sqrt2() * ExactScalar::inv_sqrt2();
  CHECK(half_via_sqrt == ExactScalar(1) * ExactScalar::inv_sqrt2(2));
  CHECK(half_via_sqrt.sqrt2_power() == 2);
  const auto r = half_via_sqrt.as_rational();
  REQUIRE(r);
  CHECK(r->first == 1);
  CHECK(r->second == 2);
  CHECK_FALSE(ExactScalar::inv_sqrt2().as_rational());
}

TEST_CASE("roots of unity and inverses") {
  for (int n = 0; n < 8; ++n) {
    CHECK(ExactScalar::zeta(n).root_of_unity_exponent() == n);
    CHECK(ExactScalar::zeta(n).is_unit_modulus());
  }
  CHECK_FALSE(ExactScalar(2).root_of_unity_exponent());
  const ExactScalar x = (ExactScalar(1) - ExactScalar::imag_unit()) * ExactScalar::inv_sqrt2(2);
  const auto inv = x.inverse();
  REQUIRE(inv);
  CHECK(x * *inv == ExactScalar(1));
  CHECK_FALSE(ExactScalar(3).inverse());
}

TEST_CASE("matrix helpers") {
  const ExactScalar h = ExactScalar::inv_sqrt2();
  const ExactMatrix had(2, 2, {h, h, h, -h});
  CHECK(had.is_unitary());
  CHECK((had * had).is_identity());
  CHECK(had.inverse() == had);

  const ExactMatrix singular(2, 2, {1, 1, 1, 1});
  CHECK_FALSE(singular.inverse());

  const ExactMatrix k = qd::kron(had, ExactMatrix::identity(2));
  CHECK(k.rows() == 4);
  CHECK(k(2, 0) == h);
  CHECK(k(3, 1) == h);
  CHECK(k(2, 2) == -h);

  const ExactMatrix scaled = had.scaled(ExactScalar::zeta(3));
  const auto c = scaled.proportionality_to(had);
  REQUIRE(c);
  CHECK(*c == ExactScalar::zeta(3));
  CHECK_FALSE(ExactMatrix::identity(2).proportionality_to(had));
}
