#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qd/pairing.hpp"
#include "qd/quantum_double.hpp"

namespace qd {

// The basis element P_h g of the quantum double.
struct DoubleElement {
  GroupElement flux;
  GroupElement gauge;
  friend bool operator==(const DoubleElement&, const DoubleElement&) = default;
};

// (P_h g)(P_h' g') = delta(h, g h' g^-1) P_h gg'; nullopt stands for zero.
std::optional<DoubleElement> multiply(const DoubleElement& x, const DoubleElement& y);
std::vector<DoubleElement> double_basis();

// Irreducible representation of D(Q8) on span{|member, component>}.
class ChargeRep {
 public:
  struct BasisState {
    GroupElement member;
    int component;
  };

  ChargeRep(const AnyonCharge& charge, Section section);

  const AnyonCharge& charge() const { return charge_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisState>& basis() const { return basis_; }
  Eigen::MatrixXcd action(const DoubleElement& x) const;
  // Sum over h of action(P_h g).
  Eigen::MatrixXcd gauge_action(GroupElement g) const;

 private:
  AnyonCharge charge_;
  Section section_;
  Irrep irrep_;
  std::vector<GroupElement> members_;
  std::vector<BasisState> basis_;
};

Eigen::MatrixXcd rep_action(const AnyonCharge& charge, const DoubleElement& x, Section section = Section::first);

// Columns are the fused basis vectors |c, m_c> in V_a (x) V_b, row index m_a * d_b + m_b.
struct CGTensor {
  int a = 0;
  int b = 0;
  int c = 0;
  Eigen::MatrixXcd coeffs;
};

struct ScanReport {
  std::size_t cases = 0;
  double max_residual = 0.0;
};

// CG tensors, R-symbols and F-matrices for every admissible label set.
// Everything is computed in the constructor; afterwards the object is
// read-only and safe to share between threads.
class RecouplingData {
 public:
  explicit RecouplingData(Section section = Section::first);

  Section section() const { return section_; }
  const FusionTable& fusion() const { return fusion_; }
  const ChargeRep& rep(int charge) const { return reps_[static_cast<std::size_t>(charge)]; }

  Eigen::MatrixXcd comultiplication(int a, int b, const DoubleElement& x) const;
  // Projector-element E^c_{x,y} on V_a (x) V_b.
  Eigen::MatrixXcd projector_element(int a, int b, int c, int x, int y) const;
  double cg_diagonal(int a, int b, int c, int ma, int mb, int mc) const;
  const CGTensor& cg(int a, int b, int c) const;
  // Stacked CG columns of every channel, in channel order: unitary d_a d_b square.
  Eigen::MatrixXcd cg_unitary(int a, int b) const;

  // Counterclockwise exchange V_a (x) V_b -> V_b (x) V_a from the universal R.
  Eigen::MatrixXcd exchange(int a, int b) const;
  std::complex<double> r_symbol(int a, int b, int c) const;
  // exchange(a, b) in the fused bases; block-diagonal with R^{ab}_c on each channel.
  Eigen::MatrixXcd r_matrix(int a, int b) const;

  std::vector<int> left_channels(int a, int b, int c, int d) const;   // e in a x b with d in e x c
  std::vector<int> right_channels(int a, int b, int c, int d) const;  // f in b x c with d in a x f
  const Eigen::MatrixXcd& f_matrix(int a, int b, int c, int d) const;
  std::complex<double> f_symbol(int a, int b, int c, int d, int e, int f) const;

  double max_cg_isometry_error() const;
  double max_cg_intertwiner_error() const;
  double max_f_unitarity_error() const;
  double max_r_unitarity_error() const;
  ScanReport pentagon_scan(unsigned threads) const;
  ScanReport hexagon_scan(unsigned threads) const;

 private:
  std::size_t pair_index(int a, int b) const { return static_cast<std::size_t>(a * kNumCharges + b); }
  std::size_t quad_index(int a, int b, int c, int d) const {
    return static_cast<std::size_t>(((a * kNumCharges + b) * kNumCharges + c) * kNumCharges + d);
  }
  CGTensor build_cg(int a, int b, int c) const;
  Eigen::MatrixXcd build_f(int a, int b, int c, int d) const;

  Section section_;
  FusionTable fusion_;
  std::vector<ChargeRep> reps_;
  std::vector<std::vector<CGTensor>> cg_;                 // per (a, b): one per channel
  std::vector<std::vector<std::complex<double>>> r_;     // per (a, b): one per channel
  std::vector<Eigen::MatrixXcd> f_;                       // per (a, b, c, d); empty if inadmissible
};

// Three-anyon fusion tree (first, second, spectator) -> total whose 2-dimensional
// space carries the single-qubit braid generators of a pairing.
struct QubitTree {
  int first;
  int second;
  int spectator;
  int total;
};

QubitTree qubit_tree(Pairing pairing);

struct SigmaBranch {
  std::array<int, 4> signs{};  // square-root branches: two for sigma1 channels, two for sigma2
  Eigen::Matrix2cd sigma1;
  Eigen::Matrix2cd sigma2;
  double braid_residual = 0.0;
};

struct DerivedSigmas {
  Pairing pairing;
  QubitTree tree;
  std::vector<int> channels;      // basis: intermediate charge of (first, second)
  Eigen::Matrix2cd f;             // F^{first, second, spectator}_{total}
  std::vector<SigmaBranch> branches;  // only those satisfying the braid relation to 1e-9
};

// sigma1 from square roots of the monodromy on the left channels, sigma2 its
// conjugate by F on the right channels; each square root has a sign ambiguity,
// and every sign choice obeying the braid relation is returned.
DerivedSigmas derive_sigmas(const RecouplingData& data, Pairing pairing);

struct GaugeMatch {
  bool matched = false;
  double residual = 0.0;
  std::size_t branch = 0;
  std::complex<double> phase;  // e^{i theta}
  std::complex<double> gauge;  // u = diag(1, w); this is w
};

// Best fit of u * printed * u^dagger = e^{i theta} * derived over all branches.
GaugeMatch match_printed(const DerivedSigmas& derived, const Eigen::Matrix2cd& printed1,
                         const Eigen::Matrix2cd& printed2, double tolerance = 1e-8);

}  // namespace qd
