#include <random>
#include <set>

#include "doctest.h"
#include "qd/compiler.hpp"

using namespace qd;
using cd = std::complex<double>;

namespace {

// Floating-point oracle for the embedding search: proportionality checked numerically.
bool numerically_proportional(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& target) {
  Eigen::Index r = 0, c = 0;
  target.cwiseAbs().maxCoeff(&r, &c);
  const cd scale = m(r, c) / target(r, c);
  return std::abs(scale) > 1e-9 && (m - scale * target).norm() < 1e-9;
}

std::set<std::array<int, 4>> oracle_embeddings(const char* gate) {
  const GeneratorSet g(2, kPhiPhi);
  const GateIdentity& id = gate_identity(gate);
  const Eigen::MatrixXcd target = id.target.to_complex();
  std::set<std::array<int, 4>> out;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 8; ++d) {
          const std::set<int> s{a, b, c, d};
          if (s.size() != 4) continue;
          Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(8, 8);
          for (int q : s) p(q, q) = 1.0;
          Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(8, 8);
          for (const auto& t : id.word.tokens())
            w = w * (t.kind == BraidToken::Kind::projection ? p : g.power(t.index, t.power).to_complex());
          Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(8, 4);
          e(a, 0) = e(b, 1) = e(c, 2) = e(d, 3) = 1.0;
          if (numerically_proportional(e.adjoint() * w * e, target)) out.insert({a, b, c, d});
        }
  return out;
}

}  // namespace

TEST_CASE("single-qubit identities on PhiPhi") {
  for (const char* name : {"S", "H", "H_alt", "X", "Y", "Z"}) {
    const CompiledGate g = compile(name, kPhiPhi);
    CHECK_MESSAGE(g.holds, name);
    CHECK(g.unit_phase);
    CHECK_FALSE(g.uses_projection);
  }
  CHECK(compile("S", kPhiPhi).scalar == ExactScalar(-1));
  CHECK(compile("H", kPhiPhi).scalar == ExactScalar::zeta(3));
}

TEST_CASE("embedding search agrees with a floating-point brute force") {
  const EmbeddingSearch s = computational_embedding(kPhiPhi);
  CHECK(s.candidates == 1680);
  std::set<std::array<int, 4>> cnot, cz;
  for (const auto& e : s.cnot) cnot.insert(e.slots);
  for (const auto& e : s.cz) cz.insert(e.slots);
  CHECK(cnot == oracle_embeddings("CNOT"));
  CHECK(cz == oracle_embeddings("CZ"));
  CHECK(s.cnot.size() == 16);
  CHECK(s.cz.size() == 96);
  CHECK(s.both.size() == 8);
  REQUIRE(s.chosen);
  CHECK(s.chosen->slots == std::array<int, 4>{0, 1, 2, 3});
}

TEST_CASE("two-qubit words on the chosen embedding") {
  const SubspaceEmbedding e{{0, 1, 2, 3}};
  const CompiledGate cx = compile("CNOT", kPhiPhi, e);
  REQUIRE(cx.holds);
  CHECK(cx.uses_projection);
  CHECK(*cx.scalar == -ExactScalar::inv_sqrt2(3));
  const CompiledGate cz = compile("CZ", kPhiPhi, e);
  REQUIRE(cz.holds);
  CHECK(*cz.scalar == -ExactScalar::inv_sqrt2());
  CHECK_FALSE(compile("CNOT", kPhiPhi).holds);
}

TEST_CASE("other pairings cannot evaluate the CNOT word") {
  for (Pairing p : {kPhiSigma, kSigmaPhi, kSigmaSigma}) {
    const EmbeddingSearch s = computational_embedding(p);
    CHECK(s.cnot.empty());
    CHECK_FALSE(s.cnot_failure.empty());
    CHECK(s.cz.size() == 96);
    CHECK_FALSE(s.chosen);
  }
}

TEST_CASE("projector algebra") {
  const SubspaceEmbedding e{{5, 0, 7, 2}};
  const ExactMatrix p = e.projector();
  CHECK(p * p == p);
  CHECK(p.trace() == ExactScalar(4));
  CHECK((e.isometry().adjoint() * e.isometry()).is_identity());
}

TEST_CASE("leakage accounting") {
  const GeneratorSet g(2, kPhiPhi);
  const SubspaceEmbedding e{{0, 1, 2, 3}};
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(8);
  s(0) = 1.0;

  const auto none = apply_with_projection(BraidWord::parse("s1 s5"), g, e, s);
  CHECK(none.leakage.empty());
  CHECK(none.state.norm() == doctest::Approx(1.0));

  const auto idle = apply_with_projection(BraidWord::parse("P"), g, e, s);
  REQUIRE(idle.leakage.size() == 1);
  CHECK(idle.leakage[0].leaked == doctest::Approx(0.0));
  CHECK((idle.state - s).norm() < 1e-15);

  const auto split = apply_with_projection(BraidWord::parse("P s3"), g, e, s);
  REQUIRE(split.leakage.size() == 1);
  CHECK(split.leakage[0].leaked == doctest::Approx(0.5));
  CHECK(split.leakage[0].step == 1);
  CHECK(split.state.norm() == doctest::Approx(1.0));

  const auto twice = apply_with_projection(BraidWord::parse("P P s3"), g, e, s);
  CHECK(twice.leakage[1].leaked == doctest::Approx(0.0));
  CHECK((twice.state - split.state).norm() < 1e-15);

  Eigen::VectorXcd outside = Eigen::VectorXcd::Zero(8);
  outside(6) = 1.0;
  CHECK_THROWS_AS(apply_with_projection(BraidWord::parse("P"), g, e, outside), TotalLeakage);
}

TEST_CASE("compiled single-qubit words preserve the norm") {
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  for (const char* name : {"S", "H", "X", "Y", "Z"}) {
    const Eigen::MatrixXcd m = compile(name, kPhiPhi).realized->to_complex();
    for (int k = 0; k < 20; ++k) {
      Eigen::Vector2cd v(cd(n(rng), n(rng)), cd(n(rng), n(rng)));
      v.normalize();
      CHECK((m * v).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
