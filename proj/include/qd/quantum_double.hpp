#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qd/exact.hpp"
#include "qd/group.hpp"

namespace qd {

// A particle of D(Q8): conjugacy class (flux) and centralizer irrep (charge).
struct AnyonCharge {
  ClassLabel flux;
  int irrep;

  int quantum_dimension() const;
  std::string name() const;     // ASCII: 1, 1b, rho_i, rhob_i, Delta, Deltab, Phi_i, Phit_i, Sigma_i, Sigmat_i
  std::string display() const;  // Unicode rendering of the same label
  friend bool operator==(const AnyonCharge&, const AnyonCharge&) = default;
};

inline constexpr int kNumCharges = 22;

// All charges, vacuum first, grouped by class in the order e, eb, i, j, k.
const std::vector<AnyonCharge>& spectrum();
int charge_index(const AnyonCharge& a);
AnyonCharge charge_from_name(const std::string& name);  // accepts name() strings
AnyonCharge vacuum();

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

// Modular data computed from the class sums over commuting pairs.
class ModularData {
 public:
  explicit ModularData(Section section = Section::first);

  const ExactScalar& s_exact(int a, int b) const { return s_[idx(a, b)]; }
  Rational s_entry(int a, int b) const;
  Rational s_entry(const AnyonCharge& a, const AnyonCharge& b) const {
    return s_entry(charge_index(a), charge_index(b));
  }
  const ExactScalar& t_entry(int a) const { return t_[static_cast<std::size_t>(a)]; }
  ExactMatrix s_matrix() const;
  ExactMatrix t_matrix() const;

  bool s_symmetric() const;
  bool s_unitary() const;

 private:
  static std::size_t idx(int a, int b) { return static_cast<std::size_t>(a * kNumCharges + b); }
  std::vector<ExactScalar> s_;
  std::vector<ExactScalar> t_;
};

class FusionTable {
 public:
  // Verlinde's formula in floating point; throws FusionDefect on a
  // non-integral or negative multiplicity (tolerance 1e-9).
  explicit FusionTable(const ModularData& md);

  int multiplicity(int a, int b, int c) const { return n_[idx(a, b, c)]; }
  int multiplicity(const AnyonCharge& a, const AnyonCharge& b, const AnyonCharge& c) const {
    return multiplicity(charge_index(a), charge_index(b), charge_index(c));
  }
  std::vector<int> channels(int a, int b) const;
  double max_residual() const { return max_residual_; }

  bool commutative() const;
  bool vacuum_neutral() const;
  bool dimension_consistent() const;
  bool associative() const;
  bool multiplicity_free() const;

 private:
  static std::size_t idx(int a, int b, int c) {
    return static_cast<std::size_t>((a * kNumCharges + b) * kNumCharges + c);
  }
  std::vector<int> n_;
  double max_residual_ = 0.0;
};

struct FusionDefect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- Printed fixtures and comparison reports ----

// S entry as given by the printed reference table.
Rational printed_s_entry(const AnyonCharge& a, const AnyonCharge& b);

struct SDiscrepancy {
  AnyonCharge row;
  AnyonCharge col;
  Rational printed;
  Rational computed;
  bool in_flux_block;  // both labels in {Phi_x, Phit_x}
};

std::vector<SDiscrepancy> s_table_discrepancies(const ModularData& md);

struct PrintedFusionRule {
  std::string source;      // "chargeons", "fluxons", "dyons", "mixed", "main"
  std::string printed;     // the rule as typeset
  std::string lhs_a;       // pattern labels over the placeholders x, y, z
  std::string lhs_b;
  std::vector<std::string> rhs;
  std::string reading;     // empty unless a typographic reading was applied
};

const std::vector<PrintedFusionRule>& printed_fusion_rules();

struct FusionRuleCheck {
  PrintedFusionRule rule;
  bool holds = true;
  // First failing instantiation, rendered as "a x b: printed [...] computed [...]".
  std::string mismatch;
};

std::vector<FusionRuleCheck> validate_fusion_table(const FusionTable& table);

}  // namespace qd
