#include <complex>

#include "doctest.h"
#include "qd/quantum_double.hpp"

using namespace qd;
using cd = std::complex<double>;

namespace {

// Independent character tables: Q8 irreps for the central classes, i^(a p) on
// the cyclic centralizer {e, x, -1, -x} for the others.
cd oracle_character(const AnyonCharge& a, GroupElement g) {
  const int gi = index_of(g);
  if (a.flux == ClassLabel::e || a.flux == ClassLabel::eb) {
    if (a.irrep == 0) return 1.0;
    if (a.irrep == 4) return g == GroupElement::e ? 2.0 : g == GroupElement::eb ? -2.0 : 0.0;
    return (gi / 2 == 0 || gi / 2 == a.irrep) ? 1.0 : -1.0;
  }
  const int axis = a.flux == ClassLabel::i ? 1 : a.flux == ClassLabel::j ? 2 : 3;
  int p = -1;
  if (g == GroupElement::e) p = 0;
  if (g == GroupElement::eb) p = 2;
  if (gi / 2 == axis) p = gi % 2 == 0 ? 1 : 3;
  REQUIRE(p >= 0);
  return std::pow(cd(0, 1), a.irrep * p);
}

GroupElement any_section(GroupElement rep, GroupElement h) {
  for (GroupElement g : kAllElements)
    if (conjugate(g, rep) == h) return g;
  FAIL("no section element");
  return GroupElement::e;
}

cd oracle_s(const AnyonCharge& a, const AnyonCharge& b) {
  const auto ca = conjugacy_class(a.flux);
  const auto cb = conjugacy_class(b.flux);
  cd sum = 0.0;
  for (GroupElement g : ca.members)
    for (GroupElement h : cb.members) {
      if (multiply(g, h) != multiply(h, g)) continue;
      const GroupElement xg = any_section(ca.representative, g);
      const GroupElement xh = any_section(cb.representative, h);
      sum += std::conj(oracle_character(a, multiply(inverse(xg), multiply(h, xg)))) *
             std::conj(oracle_character(b, multiply(inverse(xh), multiply(g, xh))));
    }
  return sum / 8.0;
}

AnyonCharge C(const char* name) { return charge_from_name(name); }

}  // namespace

TEST_CASE("spectrum") {
  CHECK(spectrum().size() == 22);
  CHECK(spectrum().front() == vacuum());
  int total = 0;
  for (const auto& a : spectrum()) total += a.quantum_dimension() * a.quantum_dimension();
  CHECK(total == 64);
  for (const auto& a : spectrum()) {
    CHECK(charge_from_name(a.name()) == a);
    CHECK(charge_from_name(a.display()) == a);
  }
}

TEST_CASE("S matrix matches an independent character-sum oracle") {
  for (Section s : {Section::first, Section::last}) {
    const ModularData md(s);
    for (int a = 0; a < kNumCharges; ++a)
      for (int b = 0; b < kNumCharges; ++b)
        CHECK(std::abs(md.s_exact(a, b).to_complex() - oracle_s(spectrum()[a], spectrum()[b])) < 1e-12);
  }
}

TEST_CASE("S is section independent, symmetric, unitary and rational") {
  const ModularData first(Section::first);
  const ModularData last(Section::last);
  CHECK(first.s_matrix() == last.s_matrix());
  CHECK(first.s_symmetric());
  CHECK(first.s_unitary());
  for (int a = 0; a < kNumCharges; ++a) {
    CHECK(first.s_exact(0, a) == ExactScalar(spectrum()[a].quantum_dimension()) * ExactScalar::inv_sqrt2(6));
    for (int b = 0; b < kNumCharges; ++b) CHECK(first.s_exact(a, b).is_real());
  }
}

TEST_CASE("modular relations") {
  const ModularData md;
  const ExactMatrix s = md.s_matrix();
  const ExactMatrix t = md.t_matrix();
  CHECK((s * s).is_identity());
  const ExactMatrix st = s * t;
  CHECK((st * st * st).is_identity());
}

TEST_CASE("topological spins") {
  const ModularData md;
  CHECK(md.t_entry(charge_index(vacuum())) == ExactScalar(1));
  CHECK(md.t_entry(charge_index(C("Deltab"))) == ExactScalar(-1));
  CHECK(md.t_entry(charge_index(C("Phi_j"))) == ExactScalar(1));
  CHECK(md.t_entry(charge_index(C("Sigma_k"))) == ExactScalar::imag_unit());
  CHECK(md.t_entry(charge_index(C("Sigmat_i"))) == -ExactScalar::imag_unit());
  for (int a = 0; a < kNumCharges; ++a) {
    const AnyonCharge& q = spectrum()[a];
    const auto rep = conjugacy_class(q.flux).representative;
    const cd expected = oracle_character(q, rep) / oracle_character(q, GroupElement::e);
    CHECK(std::abs(md.t_entry(a).to_complex() - expected) < 1e-12);
  }
}

TEST_CASE("exact S entries") {
  const ModularData md;
  CHECK(md.s_entry(C("Phi_i"), C("Phi_i")) == make_rational(1, 2));
  CHECK(md.s_entry(C("Sigma_i"), C("Sigma_i")) == make_rational(-1, 2));
  CHECK(md.s_entry(C("Phi_i"), C("Phi_j")) == make_rational(0, 1));
  CHECK(md.s_entry(C("Delta"), C("Delta")) == make_rational(1, 2));
  CHECK(md.s_entry(C("Delta"), C("Deltab")) == make_rational(-1, 2));
  CHECK(md.s_entry(C("1"), C("Sigma_k")) == make_rational(1, 4));
}

TEST_CASE("Verlinde fusion invariants") {
  const ModularData md;
  const FusionTable ft(md);
  CHECK(ft.max_residual() < 1e-9);
  CHECK(ft.commutative());
  CHECK(ft.vacuum_neutral());
  CHECK(ft.dimension_consistent());
  CHECK(ft.associative());
  CHECK(ft.multiplicity_free());
}

TEST_CASE("fusion examples") {
  const FusionTable ft{ModularData{}};
  auto names = [&](const char* a, const char* b) {
    std::vector<std::string> out;
    for (int c : ft.channels(charge_index(C(a)), charge_index(C(b)))) out.push_back(spectrum()[c].name());
    return out;
  };
  CHECK(names("Phi_i", "Phi_i") == std::vector<std::string>{"1", "rho_i", "1b", "rhob_i"});
  CHECK(names("Delta", "Delta") == std::vector<std::string>{"1", "rho_i", "rho_j", "rho_k"});
  CHECK(names("Phi_i", "Sigma_i") == std::vector<std::string>{"Delta", "Deltab"});
  CHECK(names("Delta", "Phi_j") == std::vector<std::string>{"Sigma_j", "Sigmat_j"});
  CHECK(names("Phi_i", "Phi_j") == std::vector<std::string>{"Phi_k", "Phit_k"});
  CHECK(names("Sigma_i", "Sigma_i") == std::vector<std::string>{"1", "rho_i", "rhob_j", "rhob_k"});
}

TEST_CASE("printed S table discrepancies are genuine mismatches") {
  const ModularData md;
  const auto d = s_table_discrepancies(md);
  CHECK_FALSE(d.empty());
  for (const auto& x : d) CHECK(x.printed != x.computed);
}
