#include "qd/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qd {
namespace {

using Mat = Eigen::MatrixXcd;

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// |i>|j> in V_a (x) V_b to |j>|i> in V_b (x) V_a.
Mat swap_operator(int da, int db) {
  Mat s = Mat::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) s(j * da + i, i * db + j) = 1.0;
  return s;
}

int position(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

template <typename Fn>
ScanReport parallel_scan(unsigned threads, Fn&& per_first_label) {
  threads = std::max(1u, std::min<unsigned>(threads, kNumCharges));
  std::vector<ScanReport> partial(kNumCharges);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int a = static_cast<int>(t); a < kNumCharges; a += static_cast<int>(threads))
        partial[static_cast<std::size_t>(a)] = per_first_label(a);
    });
  }
  for (auto& th : pool) th.join();
  ScanReport total;
  for (const auto& p : partial) {
    total.cases += p.cases;
    total.max_residual = std::max(total.max_residual, p.max_residual);
  }
  return total;
}

}  // namespace

std::optional<DoubleElement> multiply(const DoubleElement& x, const DoubleElement& y) {
  if (x.flux != conjugate(x.gauge, y.flux)) return std::nullopt;
  return DoubleElement{x.flux, qd::multiply(x.gauge, y.gauge)};
}

std::vector<DoubleElement> double_basis() {
  std::vector<DoubleElement> out;
  for (GroupElement h : kAllElements)
    for (GroupElement g : kAllElements) out.push_back({h, g});
  return out;
}

ChargeRep::ChargeRep(const AnyonCharge& charge, Section section)
    : charge_(charge), section_(section), irrep_(charge.flux, charge.irrep), members_(conjugacy_class(charge.flux).members) {
  for (GroupElement m : members_)
    for (int v = 0; v < irrep_.dimension(); ++v) basis_.push_back({m, v});
}

Eigen::MatrixXcd ChargeRep::action(const DoubleElement& x) const {
  const int d = dimension();
  const int k = irrep_.dimension();
  const ClassLabel cls = charge_.flux;
  Mat out = Mat::Zero(d, d);
  for (std::size_t alpha = 0; alpha < members_.size(); ++alpha) {
    GroupElement moved = conjugate(x.gauge, members_[alpha]);
    if (moved != x.flux) continue;
    auto beta = static_cast<std::size_t>(std::find(members_.begin(), members_.end(), moved) - members_.begin());
    GroupElement xa = section_element(cls, members_[alpha], section_);
    GroupElement xb = section_element(cls, moved, section_);
    GroupElement n = qd::multiply(qd::multiply(inverse(xb), x.gauge), xa);
    Mat pi = irrep_.image(n).to_complex();
    out.block(static_cast<Eigen::Index>(beta) * k, static_cast<Eigen::Index>(alpha) * k, k, k) = pi;
  }
  return out;
}

Eigen::MatrixXcd ChargeRep::gauge_action(GroupElement g) const {
  Mat out = Mat::Zero(dimension(), dimension());
  for (GroupElement h : kAllElements) out += action({h, g});
  return out;
}

Eigen::MatrixXcd rep_action(const AnyonCharge& charge, const DoubleElement& x, Section section) {
  return ChargeRep(charge, section).action(x);
}

RecouplingData::RecouplingData(Section section) : section_(section), fusion_(ModularData(section)) {
  for (const auto& a : spectrum()) reps_.emplace_back(a, section);

  cg_.resize(static_cast<std::size_t>(kNumCharges * kNumCharges));
  r_.resize(cg_.size());
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b)
      for (int c : fusion_.channels(a, b)) cg_[pair_index(a, b)].push_back(build_cg(a, b, c));

  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b) {
      Mat ex = exchange(a, b);
      for (const auto& t : cg_[pair_index(a, b)]) {
        Mat block = cg(b, a, t.c).coeffs.adjoint() * ex * t.coeffs;
        r_[pair_index(a, b)].push_back(block(0, 0));
      }
    }

  f_.resize(static_cast<std::size_t>(kNumCharges) * kNumCharges * kNumCharges * kNumCharges);
  std::vector<std::thread> pool;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int a = static_cast<int>(t); a < kNumCharges; a += static_cast<int>(threads))
        for (int b = 0; b < kNumCharges; ++b)
          for (int c = 0; c < kNumCharges; ++c)
            for (int d = 0; d < kNumCharges; ++d) f_[quad_index(a, b, c, d)] = build_f(a, b, c, d);
    });
  }
  for (auto& th : pool) th.join();
}

Eigen::MatrixXcd RecouplingData::comultiplication(int a, int b, const DoubleElement& x) const {
  const auto& ra = rep(a);
  const auto& rb = rep(b);
  Mat out = Mat::Zero(ra.dimension() * rb.dimension(), ra.dimension() * rb.dimension());
  for (GroupElement h1 : kAllElements) {
    GroupElement h2 = qd::multiply(inverse(h1), x.flux);
    out += kron(ra.action({h1, x.gauge}), rb.action({h2, x.gauge}));
  }
  return out;
}

Eigen::MatrixXcd RecouplingData::projector_element(int a, int b, int c, int x, int y) const {
  const auto& rc = rep(c);
  const int n = rep(a).dimension() * rep(b).dimension();
  Mat out = Mat::Zero(n, n);
  for (const auto& el : double_basis()) {
    std::complex<double> w = rc.action(el)(x, y);
    if (w != 0.0) out += std::conj(w) * comultiplication(a, b, el);
  }
  return out * (static_cast<double>(rc.dimension()) / kGroupOrder);
}

double RecouplingData::cg_diagonal(int a, int b, int c, int ma, int mb, int mc) const {
  Mat e = projector_element(a, b, c, mc, mc);
  const int n = ma * rep(b).dimension() + mb;
  const double v = e(n, n).real();
  if (v < -1e-9) throw std::runtime_error("negative CG radicand: inconsistent representation data");
  return std::sqrt(std::max(0.0, v));
}

CGTensor RecouplingData::build_cg(int a, int b, int c) const {
  const int da = rep(a).dimension();
  const int db = rep(b).dimension();
  const int dc = rep(c).dimension();
  std::vector<Mat> diag;
  for (int m = 0; m < dc; ++m) diag.push_back(projector_element(a, b, c, m, m));

  // First (m_a, m_b, m_c) in lexicographic order with a nonzero diagonal.
  int anchor_n = -1;
  int anchor_c = -1;
  for (int ma = 0; ma < da && anchor_n < 0; ++ma)
    for (int mb = 0; mb < db && anchor_n < 0; ++mb)
      for (int mc = 0; mc < dc; ++mc) {
        const int n = ma * db + mb;
        if (diag[static_cast<std::size_t>(mc)](n, n).real() > 1e-9) {
          anchor_n = n;
          anchor_c = mc;
          break;
        }
      }
  if (anchor_n < 0) throw std::logic_error("no admissible CG anchor");

  const double norm = std::sqrt(diag[static_cast<std::size_t>(anchor_c)](anchor_n, anchor_n).real());
  CGTensor t{a, b, c, Mat(da * db, dc)};
  for (int y = 0; y < dc; ++y) t.coeffs.col(y) = projector_element(a, b, c, y, anchor_c).col(anchor_n) / norm;
  return t;
}

const CGTensor& RecouplingData::cg(int a, int b, int c) const {
  for (const auto& t : cg_[pair_index(a, b)])
    if (t.c == c) return t;
  throw std::invalid_argument("fusion channel not admissible");
}

Eigen::MatrixXcd RecouplingData::cg_unitary(int a, int b) const {
  const int n = rep(a).dimension() * rep(b).dimension();
  Mat u(n, n);
  Eigen::Index col = 0;
  for (const auto& t : cg_[pair_index(a, b)]) {
    u.middleCols(col, t.coeffs.cols()) = t.coeffs;
    col += t.coeffs.cols();
  }
  return u;
}

Eigen::MatrixXcd RecouplingData::exchange(int a, int b) const {
  const auto& ra = rep(a);
  const auto& rb = rep(b);
  Mat sum = Mat::Zero(ra.dimension() * rb.dimension(), ra.dimension() * rb.dimension());
  for (GroupElement g : kAllElements) sum += kron(ra.action({g, GroupElement::e}), rb.gauge_action(g));
  return swap_operator(ra.dimension(), rb.dimension()) * sum;
}

std::complex<double> RecouplingData::r_symbol(int a, int b, int c) const {
  const auto& ts = cg_[pair_index(a, b)];
  for (std::size_t n = 0; n < ts.size(); ++n)
    if (ts[n].c == c) return r_[pair_index(a, b)][n];
  throw std::invalid_argument("fusion channel not admissible");
}

Eigen::MatrixXcd RecouplingData::r_matrix(int a, int b) const {
  return cg_unitary(b, a).adjoint() * exchange(a, b) * cg_unitary(a, b);
}

std::vector<int> RecouplingData::left_channels(int a, int b, int c, int d) const {
  std::vector<int> out;
  for (int e : fusion_.channels(a, b))
    if (fusion_.multiplicity(e, c, d) > 0) out.push_back(e);
  return out;
}

std::vector<int> RecouplingData::right_channels(int a, int b, int c, int d) const {
  std::vector<int> out;
  for (int f : fusion_.channels(b, c))
    if (fusion_.multiplicity(a, f, d) > 0) out.push_back(f);
  return out;
}

Eigen::MatrixXcd RecouplingData::build_f(int a, int b, int c, int d) const {
  auto left = left_channels(a, b, c, d);
  auto right = right_channels(a, b, c, d);
  if (left.empty()) return {};
  const Mat id_a = Mat::Identity(rep(a).dimension(), rep(a).dimension());
  const Mat id_c = Mat::Identity(rep(c).dimension(), rep(c).dimension());
  Mat lv(rep(a).dimension() * rep(b).dimension() * rep(c).dimension(), static_cast<Eigen::Index>(left.size()));
  Mat rv(lv.rows(), static_cast<Eigen::Index>(right.size()));
  for (std::size_t n = 0; n < left.size(); ++n)
    lv.col(static_cast<Eigen::Index>(n)) = kron(cg(a, b, left[n]).coeffs, id_c) * cg(left[n], c, d).coeffs.col(0);
  for (std::size_t n = 0; n < right.size(); ++n)
    rv.col(static_cast<Eigen::Index>(n)) = kron(id_a, cg(b, c, right[n]).coeffs) * cg(a, right[n], d).coeffs.col(0);
  // Row e, column f: <(a(bc)_f)_d | ((ab)_e c)_d>.
  return (rv.adjoint() * lv).transpose();
}

const Eigen::MatrixXcd& RecouplingData::f_matrix(int a, int b, int c, int d) const {
  return f_[quad_index(a, b, c, d)];
}

std::complex<double> RecouplingData::f_symbol(int a, int b, int c, int d, int e, int f) const {
  if (fusion_.multiplicity(a, b, e) == 0 || fusion_.multiplicity(e, c, d) == 0) return 0.0;
  if (fusion_.multiplicity(b, c, f) == 0 || fusion_.multiplicity(a, f, d) == 0) return 0.0;
  const Mat& m = f_matrix(a, b, c, d);
  return m(position(left_channels(a, b, c, d), e), position(right_channels(a, b, c, d), f));
}

double RecouplingData::max_cg_isometry_error() const {
  double err = 0.0;
  for (const auto& ts : cg_)
    for (const auto& t : ts) {
      Mat g = t.coeffs.adjoint() * t.coeffs;
      err = std::max(err, (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
    }
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b) {
      Mat u = cg_unitary(a, b);
      err = std::max(err, (u * u.adjoint() - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff());
    }
  return err;
}

double RecouplingData::max_cg_intertwiner_error() const {
  double err = 0.0;
  const auto basis = double_basis();
  for (const auto& ts : cg_)
    for (const auto& t : ts)
      for (const auto& x : basis) {
        Mat lhs = comultiplication(t.a, t.b, x) * t.coeffs;
        Mat rhs = t.coeffs * rep(t.c).action(x);
        err = std::max(err, (lhs - rhs).cwiseAbs().maxCoeff());
      }
  return err;
}

double RecouplingData::max_f_unitarity_error() const {
  double err = 0.0;
  for (const auto& m : f_) {
    if (m.size() == 0) continue;
    if (m.rows() != m.cols()) return 1.0;
    err = std::max(err, (m * m.adjoint() - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff());
  }
  return err;
}

double RecouplingData::max_r_unitarity_error() const {
  double err = 0.0;
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b) {
      Mat r = r_matrix(a, b);
      err = std::max(err, (r * r.adjoint() - Mat::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff());
      // Off-channel blocks must vanish.
      Eigen::Index row = 0;
      for (const auto& t : cg_[pair_index(a, b)]) {
        const Eigen::Index d = t.coeffs.cols();
        Mat expected = Mat::Zero(r.rows(), d);
        expected.middleRows(row, d) = r_symbol(a, b, t.c) * Mat::Identity(d, d);
        err = std::max(err, (r.middleCols(row, d) - expected).cwiseAbs().maxCoeff());
        row += d;
      }
    }
  return err;
}

ScanReport RecouplingData::pentagon_scan(unsigned threads) const {
  const int n = kNumCharges;
  return parallel_scan(threads, [&](int a) {
    ScanReport rep;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f : fusion_.channels(a, b))
              for (int g : fusion_.channels(f, c)) {
                if (fusion_.multiplicity(g, d, e) == 0) continue;
                for (int l : fusion_.channels(c, d)) {
                  if (fusion_.multiplicity(f, l, e) == 0) continue;
                  for (int k : fusion_.channels(b, l)) {
                    if (fusion_.multiplicity(a, k, e) == 0) continue;
                    std::complex<double> lhs = 0.0;
                    for (int h : fusion_.channels(b, c))
                      lhs += f_symbol(a, b, c, g, f, h) * f_symbol(a, h, d, e, g, k) * f_symbol(b, c, d, k, h, l);
                    std::complex<double> rhs = f_symbol(f, c, d, e, g, l) * f_symbol(a, b, l, e, f, k);
                    rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
                    ++rep.cases;
                  }
                }
              }
    return rep;
  });
}

ScanReport RecouplingData::hexagon_scan(unsigned threads) const {
  const int n = kNumCharges;
  return parallel_scan(threads, [&](int a) {
    ScanReport rep;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e : left_channels(a, c, b, d))
            for (int g : right_channels(a, c, b, d)) {
              std::complex<double> lhs = r_symbol(c, a, e) * f_symbol(a, c, b, d, e, g) * r_symbol(c, b, g);
              std::complex<double> lhs_inv =
                  std::conj(r_symbol(a, c, e)) * f_symbol(a, c, b, d, e, g) * std::conj(r_symbol(b, c, g));
              std::complex<double> rhs = 0.0;
              std::complex<double> rhs_inv = 0.0;
              for (int f : fusion_.channels(a, b)) {
                if (fusion_.multiplicity(c, f, d) == 0) continue;
                rhs += f_symbol(c, a, b, d, e, f) * r_symbol(c, f, d) * f_symbol(a, b, c, d, f, g);
                rhs_inv += f_symbol(c, a, b, d, e, f) * std::conj(r_symbol(f, c, d)) * f_symbol(a, b, c, d, f, g);
              }
              rep.max_residual = std::max({rep.max_residual, std::abs(lhs - rhs), std::abs(lhs_inv - rhs_inv)});
              rep.cases += 2;
            }
    return rep;
  });
}

QubitTree qubit_tree(Pairing pairing) {
  auto idx = [](const char* name) { return charge_index(charge_from_name(name)); };
  if (pairing == kPhiPhi) return {idx("Phi_i"), idx("Phi_j"), idx("Sigma_i"), idx("Sigma_j")};
  if (pairing == kSigmaSigma) return {idx("Sigma_i"), idx("Sigma_j"), idx("Phi_i"), idx("Phi_j")};
  if (pairing == kSigmaPhi) return {idx("Sigma_i"), idx("Phi_j"), idx("Phi_i"), idx("Sigma_j")};
  throw std::invalid_argument("no single-qubit fusion tree for pairing " + pairing.name());
}

DerivedSigmas derive_sigmas(const RecouplingData& data, Pairing pairing) {
  const QubitTree t = qubit_tree(pairing);
  DerivedSigmas out{pairing, t, data.left_channels(t.first, t.second, t.spectator, t.total), {}, {}};
  const auto right = data.right_channels(t.first, t.second, t.spectator, t.total);
  if (out.channels.size() != 2 || right.size() != 2) throw std::logic_error("qubit fusion tree is not two-dimensional");
  out.f = data.f_matrix(t.first, t.second, t.spectator, t.total);

  std::array<std::complex<double>, 2> left_root;
  std::array<std::complex<double>, 2> right_root;
  for (int n = 0; n < 2; ++n) {
    const int e = out.channels[static_cast<std::size_t>(n)];
    const int f = right[static_cast<std::size_t>(n)];
    left_root[static_cast<std::size_t>(n)] =
        std::sqrt(data.r_symbol(t.second, t.first, e) * data.r_symbol(t.first, t.second, e));
    right_root[static_cast<std::size_t>(n)] =
        std::sqrt(data.r_symbol(t.spectator, t.second, f) * data.r_symbol(t.second, t.spectator, f));
  }

  // Coordinates change as psi_right = F^T psi_left.
  const Eigen::Matrix2cd to_right = out.f.transpose();
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> s;
    for (int bit = 0; bit < 4; ++bit) s[static_cast<std::size_t>(bit)] = (mask >> bit) & 1 ? -1 : 1;
    Eigen::Matrix2cd s1 = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd d2 = Eigen::Matrix2cd::Zero();
    s1(0, 0) = static_cast<double>(s[0]) * left_root[0];
    s1(1, 1) = static_cast<double>(s[1]) * left_root[1];
    d2(0, 0) = static_cast<double>(s[2]) * right_root[0];
    d2(1, 1) = static_cast<double>(s[3]) * right_root[1];
    Eigen::Matrix2cd s2 = to_right.inverse() * d2 * to_right;
    const double residual = (s1 * s2 * s1 - s2 * s1 * s2).cwiseAbs().maxCoeff();
    if (residual < 1e-9) out.branches.push_back({s, s1, s2, residual});
  }
  return out;
}

GaugeMatch match_printed(const DerivedSigmas& derived, const Eigen::Matrix2cd& printed1,
                         const Eigen::Matrix2cd& printed2, double tolerance) {
  GaugeMatch best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < derived.branches.size(); ++n) {
    const auto& br = derived.branches[n];
    std::complex<double> phase = printed1(0, 0) / br.sigma1(0, 0);
    phase /= std::abs(phase);
    // u p u^dagger with u = diag(1, w): off-diagonal (0,1) picks up conj(w).
    std::complex<double> w_conj = phase * br.sigma2(0, 1) / printed2(0, 1);
    std::complex<double> w = std::conj(w_conj / std::abs(w_conj));
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    u(1, 1) = w;
    const double r1 = (printed1 - phase * br.sigma1).cwiseAbs().maxCoeff();
    const double r2 = (u * printed2 * u.adjoint() - phase * br.sigma2).cwiseAbs().maxCoeff();
    const double r = std::max(r1, r2);
    if (r < best.residual) best = {r < tolerance, r, n, phase, w};
  }
  return best;
}

}  // namespace qd
