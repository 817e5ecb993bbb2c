#include <complex>

#include "doctest.h"
#include "qd/braid.hpp"
#include "qd/recoupling.hpp"

using namespace qd;
using cd = std::complex<double>;

namespace {

const RecouplingData& data() {
  static const RecouplingData d;
  return d;
}

int idx(const char* name) { return charge_index(charge_from_name(name)); }

}  // namespace

TEST_CASE("double algebra multiplication") {
  const auto basis = double_basis();
  CHECK(basis.size() == 64);
  const DoubleElement a{GroupElement::i, GroupElement::j};
  const DoubleElement b{GroupElement::i, GroupElement::k};
  // j i j^-1 = -i, so P_i j * P_i k vanishes while P_-i j * P_i k survives.
  CHECK_FALSE(multiply(a, b));
  const auto c = multiply({GroupElement::ib, GroupElement::j}, b);
  REQUIRE(c);
  CHECK(c->flux == GroupElement::ib);
  CHECK(c->gauge == multiply(GroupElement::j, GroupElement::k));
}

TEST_CASE("charge representations respect the algebra") {
  const auto basis = double_basis();
  for (const auto& q : spectrum()) {
    const ChargeRep rep(q, Section::first);
    CHECK(rep.dimension() == static_cast<int>(conjugacy_class(q.flux).members.size()) *
                                  Irrep(q.flux, q.irrep).dimension());
    Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(rep.dimension(), rep.dimension());
    for (GroupElement h : kAllElements) unit += rep.action({h, GroupElement::e});
    CHECK((unit - Eigen::MatrixXcd::Identity(rep.dimension(), rep.dimension())).norm() < 1e-12);
    for (const auto& x : basis)
      for (const auto& y : basis) {
        const auto xy = multiply(x, y);
        const Eigen::MatrixXcd lhs = rep.action(x) * rep.action(y);
        const Eigen::MatrixXcd rhs =
            xy ? rep.action(*xy) : Eigen::MatrixXcd::Zero(rep.dimension(), rep.dimension());
        CHECK((lhs - rhs).norm() < 1e-12);
      }
  }
}

TEST_CASE("flux projectors select the flux") {
  const ChargeRep rep(charge_from_name("Sigma_i"), Section::first);
  const Eigen::MatrixXcd p = rep.action({GroupElement::i, GroupElement::e});
  CHECK(std::abs(p.trace() - cd(1.0)) < 1e-12);
  CHECK(rep.action({GroupElement::j, GroupElement::e}).norm() < 1e-12);
}

TEST_CASE("Clebsch-Gordan tensors") {
  CHECK(data().max_cg_isometry_error() < 1e-9);
  CHECK(data().max_cg_intertwiner_error() < 1e-9);
  const Eigen::MatrixXcd u = data().cg_unitary(idx("Phi_i"), idx("Sigma_j"));
  CHECK(u.rows() == 4);
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-9);
}

TEST_CASE("F and R are unitary") {
  CHECK(data().max_f_unitarity_error() < 1e-9);
  CHECK(data().max_r_unitarity_error() < 1e-9);
  CHECK(std::abs(data().f_symbol(idx("Phi_i"), idx("Phi_j"), idx("Sigma_i"), idx("Sigma_j"), idx("1"), idx("1"))) ==
        doctest::Approx(0.0));
}

TEST_CASE("ribbon relation between R and topological spins") {
  const ModularData md;
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b)
      for (int c : data().fusion().channels(a, b)) {
        const cd monodromy = data().r_symbol(b, a, c) * data().r_symbol(a, b, c);
        const cd spins = md.t_entry(c).to_complex() / (md.t_entry(a).to_complex() * md.t_entry(b).to_complex());
        CHECK(std::abs(monodromy - spins) < 1e-9);
      }
}

TEST_CASE("gauge invariant data does not depend on the section") {
  const RecouplingData other(Section::last);
  for (int a = 0; a < kNumCharges; ++a)
    for (int c : data().fusion().channels(a, a))
      CHECK(std::abs(data().r_symbol(a, a, c) - other.r_symbol(a, a, c)) < 1e-9);
}

TEST_CASE("hexagon equations") {
  const ScanReport r = data().hexagon_scan(0);
  CHECK(r.cases > 0);
  CHECK(r.max_residual < 1e-8);
}

TEST_CASE("pentagon equations") {
  const ScanReport r = data().pentagon_scan(0);
  CHECK(r.cases > 0);
  CHECK(r.max_residual < 1e-8);
}

TEST_CASE("derived single-qubit generators") {
  for (Pairing p : kSingleQubitPairings) {
    const DerivedSigmas d = derive_sigmas(data(), p);
    CHECK(d.channels.size() == 2);
    CHECK_FALSE(d.branches.empty());
    for (const auto& b : d.branches) {
      CHECK(b.braid_residual < 1e-9);
      CHECK((b.sigma1.adjoint() * b.sigma1 - Eigen::Matrix2cd::Identity()).norm() < 1e-9);
      CHECK((b.sigma2.adjoint() * b.sigma2 - Eigen::Matrix2cd::Identity()).norm() < 1e-9);
    }
  }
}

TEST_CASE("derived generators reproduce the PhiPhi templates up to gauge") {
  const DerivedSigmas d = derive_sigmas(data(), kPhiPhi);
  const GaugeMatch m = match_printed(d, sigma_1q(kPhiPhi, 1).to_complex(), sigma_1q(kPhiPhi, 2).to_complex());
  CHECK(m.matched);
  CHECK(m.residual < 1e-8);
  CHECK(std::abs(std::abs(m.phase) - 1.0) < 1e-12);
}

TEST_CASE("SigmaSigma templates cannot be matched by a unitary derivation") {
  // The template sigma2 is not unitary, so no gauge transform of a unitary branch reaches it.
  CHECK_FALSE(sigma_1q(kSigmaSigma, 2).is_unitary());
  const DerivedSigmas d = derive_sigmas(data(), kSigmaSigma);
  CHECK_FALSE(match_printed(d, sigma_1q(kSigmaSigma, 1).to_complex(), sigma_1q(kSigmaSigma, 2).to_complex()).matched);
}
