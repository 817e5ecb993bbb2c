#include <algorithm>
#include <array>
#include <sstream>

#include "qd/quantum_double.hpp"

namespace qd {
namespace {

// Row/column families of the printed S table, in its own order.
enum Family { kOne, kOneBar, kRho, kRhoBar, kDelta, kDeltaBar, kPhi, kPhiT, kSigma, kSigmaT };

enum Dep { kConst, kEps, kDelta_ };

struct Cell {
  int num;
  int den;
  Dep dep;
};

// clang-format off
constexpr Cell C(int n, int d) { return {n, d, kConst}; }
constexpr Cell E(int n, int d) { return {n, d, kEps}; }
constexpr Cell D(int n, int d) { return {n, d, kDelta_}; }

constexpr std::array<std::array<Cell, 10>, 10> kPrintedS = {{
    {C(1,8), C(1,8),  C(1,8),  C(1,8),   C(1,8),  C(1,4),  C(1,4),  C(1,4),  C(1,4),  C(1,4)},
    {C(1,8), C(1,8),  C(1,8),  C(1,8),   C(-1,4), C(-1,4), C(1,4),  C(1,4),  C(-1,4), C(-1,4)},
    {C(1,8), C(1,8),  C(1,8),  C(1,8),   C(1,4),  C(1,4),  E(1,4),  E(1,4),  E(1,4),  E(1,4)},
    {C(1,8), C(1,8),  C(1,8),  C(1,8),   C(-1,4), C(-1,4), E(-1,4), E(-1,4), E(1,4),  E(1,4)},
    {C(1,4), C(-1,4), C(1,4),  C(-1,4),  C(1,2),  C(-1,2), C(0,1),  C(0,1),  C(0,1),  C(0,1)},
    {C(1,4), C(-1,4), C(1,4),  C(-1,4),  C(-1,2), C(1,2),  C(0,1),  C(0,1),  C(0,1),  C(0,1)},
    {C(1,4), C(1,4),  E(1,4),  E(-1,4),  C(0,1),  C(0,1),  D(1,2),  D(-1,2), C(0,1),  C(0,1)},
    {C(1,4), C(1,4),  E(1,4),  E(-1,4),  C(0,1),  C(0,1),  D(-1,4), D(1,4),  C(0,1),  C(0,1)},
    {C(1,4), C(-1,4), E(1,4),  E(1,4),   C(0,1),  C(0,1),  C(0,1),  C(0,1),  D(1,4),  D(-1,4)},
    {C(1,4), C(-1,4), E(1,4),  E(1,4),   C(0,1),  C(0,1),  C(0,1),  C(0,1),  D(-1,4), D(1,4)},
}};
// clang-format on

std::pair<Family, int> family_of(const AnyonCharge& a) {
  switch (a.flux) {
    case ClassLabel::e:
      if (a.irrep == 0) return {kOne, -1};
      if (a.irrep == 4) return {kDelta, -1};
      return {kRho, a.irrep - 1};
    case ClassLabel::eb:
      if (a.irrep == 0) return {kOneBar, -1};
      if (a.irrep == 4) return {kDeltaBar, -1};
      return {kRhoBar, a.irrep - 1};
    default: break;
  }
  int axis = static_cast<int>(a.flux) - static_cast<int>(ClassLabel::i);
  static constexpr std::array<Family, 4> by_irrep = {kPhi, kSigma, kPhiT, kSigmaT};
  return {by_irrep[static_cast<std::size_t>(a.irrep)], axis};
}

struct RawRule {
  const char* source;
  const char* printed;
  const char* a;
  const char* b;
  std::vector<std::string> rhs;
  const char* reading;
};

std::vector<PrintedFusionRule> build_rules() {
  const std::vector<RawRule> raw = {
      {"chargeons", "ρ_x ⊗ ρ_x = 𝟙", "rho_x", "rho_x", {"1"}, ""},
      {"chargeons", "ρ_x ⊗ ρ_y = ρ_z", "rho_x", "rho_y", {"rho_z"}, ""},
      {"chargeons", "ρ_x ⊗ Δ = Δ", "rho_x", "Delta", {"Delta"}, ""},
      {"chargeons", "Δ ⊗ Δ = 𝟙 ⊕ ρ_x ⊕ ρ_y ⊕ ρ_z", "Delta", "Delta", {"1", "rho_x", "rho_y", "rho_z"}, ""},
      {"fluxons", "𝟙̄ ⊗ 𝟙̄ = 𝟙", "1b", "1b", {"1"}, ""},
      {"fluxons", "Φ_x ⊗ Φ_x = 𝟙 ⊕ 𝟙̄ ⊕ ρ_x ⊕ ρ̄_x", "Phi_x", "Phi_x", {"1", "1b", "rho_x", "rhob_x"}, ""},
      {"fluxons", "Φ_x ⊗ Φ_y = Φ_z ⊕ Φ̃_z", "Phi_x", "Phi_y", {"Phi_z", "Phit_z"}, ""},
      {"fluxons", "𝟙̄ ⊗ Φ_x = Φ_x", "1b", "Phi_x", {"Phi_x"}, ""},
      {"dyons", "Φ̃_x ⊗ Φ̃_x = 𝟙 ⊕ 𝟙̄ ⊕ ρ_x ⊕ ρ̄_x", "Phit_x", "Phit_x", {"1", "1b", "rho_x", "rhob_x"}, ""},
      {"dyons", "Φ̃_x ⊗ ρ̄_x = Φ̃_x", "Phit_x", "rhob_x", {"Phit_x"}, ""},
      {"dyons", "Φ̃_x ⊗ ρ̄_y = Φ_x", "Phit_x", "rhob_y", {"Phi_x"}, ""},
      {"dyons", "ρ̄_x ⊗ Δ̄ = Δ̄", "rhob_x", "Deltab", {"Deltab"}, ""},
      {"dyons", "Δ̄ ⊗ Φ̃_x = Σ_x ⊕ Σ̃_x", "Deltab", "Phit_x", {"Sigma_x", "Sigmat_x"}, ""},
      {"dyons", "Δ̄ ⊗ Σ_x = Φ_x ⊕ Φ̃_x", "Deltab", "Sigma_x", {"Phi_x", "Phit_x"}, ""},
      {"dyons", "Σ_x ⊗ Σ_x = 𝟙 ⊕ ρ_x ⊕ ρ̄_y ⊕ ρ̄_z", "Sigma_x", "Sigma_x", {"1", "rho_x", "rhob_y", "rhob_z"}, ""},
      {"dyons", "Σ̄_x ⊗ Σ̃_x = 𝟙̄ ⊕ ρ̄_x ⊕ ρ_y ⊕ ρ_z", "Sigma_x", "Sigmat_x", {"1b", "rhob_x", "rho_y", "rho_z"},
       "undefined label Σ̄_x read as Σ_x"},
      {"dyons", "Σ_x ⊗ Σ_y = Φ_z ⊕ Φ̃_z", "Sigma_x", "Sigma_y", {"Phi_z", "Phit_z"}, ""},
      {"mixed", "ρ_x ⊗ Φ_x = Φ_x", "rho_x", "Phi_x", {"Phi_x"}, ""},
      {"mixed", "ρ_x ⊗ Φ_y = Φ̃_y", "rho_x", "Phi_y", {"Phit_y"}, ""},
      {"mixed", "Δ ⊗ Φ_x = Σ_x ⊕ Σ̃_x", "Delta", "Phi_x", {"Sigma_x", "Sigmat_x"}, ""},
      {"mixed", "Φ̃_x ⊗ 𝟙̄ = Φ̃_x", "Phit_x", "1b", {"Phit_x"}, ""},
      {"mixed", "𝟙̄ ⊗ Σ_x = Σ̃_x", "1b", "Sigma_x", {"Sigmat_x"}, ""},
      {"mixed", "𝟙̄ ⊗ Σ̃_x = Σ_x", "1b", "Sigmat_x", {"Sigma_x"}, ""},
      {"mixed", "ρ_x ⊗ Σ_x = Σ_x", "rho_x", "Sigma_x", {"Sigma_x"}, ""},
      {"mixed", "ρ_y ⊗ Σ_x = Σ̃_x", "rho_y", "Sigma_x", {"Sigmat_x"}, ""},
      {"mixed", "ρ̄_x ⊗ Σ_x = Σ̃_x", "rhob_x", "Sigma_x", {"Sigmat_x"}, ""},
      {"mixed", "Δ ⊗ Σ_x = Φ_x ⊕ Φ̃_x", "Delta", "Sigma_x", {"Phi_x", "Phit_x"}, ""},
      {"mixed", "Δ ⊗ Σ̃_x = Φ_x ⊕ Φ̃_x", "Delta", "Sigmat_x", {"Phi_x", "Phit_x"}, ""},
      {"mixed", "Δ ⊗ 𝟙̄ = Δ̄", "Delta", "1b", {"Deltab"}, ""},
      {"mixed", "Φ_x ⊗ Σ_x = Δ ⊕ Δ̄", "Phi_x", "Sigma_x", {"Delta", "Deltab"}, ""},
      {"mixed", "Φ_x ⊗ Σ_y = Φ_z ⊕ Φ̃_z", "Phi_x", "Sigma_y", {"Phi_z", "Phit_z"}, ""},
      {"mixed", "Φ_x ⊗ Φ_x = 𝟙 ⊕ 𝟙̄ ⊕ ρ_x ⊕ ρ̃_x", "Phi_x", "Phi_x", {"1", "1b", "rho_x", "rhob_x"},
       "undefined label ρ̃_x read as ρ̄_x"},
      {"mixed", "Φ_x ⊗ Φ_y = Φ_z ⊕ Φ̃_z", "Phi_x", "Phi_y", {"Phi_z", "Phit_z"}, ""},
      {"mixed", "Σ_x ⊗ Σ_x = 𝟙 ⊕ ρ_x ⊕ ρ̄_y ⊕ ρ̄_z", "Sigma_x", "Sigma_x", {"1", "rho_x", "rhob_y", "rhob_z"}, ""},
      {"mixed", "Σ_x ⊗ Σ_y = Σ_z ⊕ Σ̃_z", "Sigma_x", "Sigma_y", {"Sigma_z", "Sigmat_z"}, ""},
      {"main", "Φ_x ⊗ Σ_x = Δ ⊕ Δ̄", "Phi_x", "Sigma_x", {"Delta", "Deltab"}, ""},
      {"main", "Φ_x ⊗ Σ_y = Φ_z ⊕ Φ̃_z", "Phi_x", "Sigma_y", {"Phi_z", "Phit_z"}, ""},
      {"main", "Φ_x ⊗ Φ_x = 𝟙 ⊕ 𝟙̄ ⊕ ρ_x ⊕ ρ̄_x", "Phi_x", "Phi_x", {"1", "1b", "rho_x", "rhob_x"}, ""},
      {"main", "Φ_x ⊗ Φ_y = Φ_z ⊕ Φ̃_z", "Phi_x", "Phi_y", {"Phi_z", "Phit_z"}, ""},
      {"main", "Σ_x ⊗ Σ_x = 𝟙 ⊕ ρ_x ⊕ ρ̄_y ⊕ ρ̄_z", "Sigma_x", "Sigma_x", {"1", "rho_x", "rhob_y", "rhob_z"}, ""},
      {"main", "Σ_x ⊗ Σ_y = Σ_z ⊕ Σ̃_z", "Sigma_x", "Sigma_y", {"Sigma_z", "Sigmat_z"}, ""},
  };
  std::vector<PrintedFusionRule> out;
  for (const auto& r : raw) out.push_back({r.source, r.printed, r.a, r.b, r.rhs, r.reading});
  return out;
}

// Replace a trailing _x/_y/_z placeholder by the axis assigned to it.
std::string instantiate(const std::string& pattern, const std::array<int, 3>& axes) {
  static constexpr std::array<char, 3> axis_name = {'i', 'j', 'k'};
  if (pattern.size() >= 2 && pattern[pattern.size() - 2] == '_') {
    char p = pattern.back();
    if (p >= 'x' && p <= 'z') {
      std::string s = pattern;
      s.back() = axis_name[static_cast<std::size_t>(axes[static_cast<std::size_t>(p - 'x')])];
      return s;
    }
  }
  return pattern;
}

std::string render(const std::vector<int>& labels) {
  std::string s = "[";
  for (std::size_t n = 0; n < labels.size(); ++n) {
    if (n) s += ", ";
    s += spectrum()[static_cast<std::size_t>(labels[n])].name();
  }
  return s + "]";
}

}  // namespace

Rational printed_s_entry(const AnyonCharge& a, const AnyonCharge& b) {
  auto [fa, ia] = family_of(a);
  auto [fb, ib] = family_of(b);
  const Cell& cell = kPrintedS[static_cast<std::size_t>(fa)][static_cast<std::size_t>(fb)];
  int sign = 1;
  if (cell.dep == kEps) sign = ia == ib ? 1 : -1;
  if (cell.dep == kDelta_ && ia != ib) return make_rational(0, 1);
  return make_rational(sign * cell.num, cell.den);
}

std::vector<SDiscrepancy> s_table_discrepancies(const ModularData& md) {
  std::vector<SDiscrepancy> out;
  auto flux_block = [](const AnyonCharge& a) {
    auto f = family_of(a).first;
    return f == kPhi || f == kPhiT;
  };
  for (const auto& a : spectrum())
    for (const auto& b : spectrum()) {
      Rational printed = printed_s_entry(a, b);
      Rational computed = md.s_entry(a, b);
      if (!(printed == computed)) out.push_back({a, b, printed, computed, flux_block(a) && flux_block(b)});
    }
  return out;
}

const std::vector<PrintedFusionRule>& printed_fusion_rules() {
  static const std::vector<PrintedFusionRule> rules = build_rules();
  return rules;
}

std::vector<FusionRuleCheck> validate_fusion_table(const FusionTable& table) {
  std::vector<FusionRuleCheck> out;
  std::array<int, 3> axes = {0, 1, 2};
  for (const auto& rule : printed_fusion_rules()) {
    FusionRuleCheck check{rule, true, ""};
    std::sort(axes.begin(), axes.end());
    do {
      int a = charge_index(charge_from_name(instantiate(rule.lhs_a, axes)));
      int b = charge_index(charge_from_name(instantiate(rule.lhs_b, axes)));
      std::vector<int> printed;
      for (const auto& r : rule.rhs) printed.push_back(charge_index(charge_from_name(instantiate(r, axes))));
      std::sort(printed.begin(), printed.end());
      std::vector<int> computed = table.channels(a, b);
      if (printed != computed) {
        check.holds = false;
        std::ostringstream os;
        os << spectrum()[static_cast<std::size_t>(a)].name() << " x " << spectrum()[static_cast<std::size_t>(b)].name()
           << ": printed " << render(printed) << " computed " << render(computed);
        check.mismatch = os.str();
        break;
      }
    } while (std::next_permutation(axes.begin(), axes.end()));
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace qd
