#include "qd/shor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qd/compiler.hpp"

namespace qd::shor {
namespace {

using cd = std::complex<double>;

int bit(int index, int qubit) { return (index >> qubit) & 1; }

int reverse_exponent_bits(int x) { return ((x & 1) << 1) | ((x >> 1) & 1); }

Mat2 pauli(int a) {
  Mat2 m;
  switch (a) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

std::array<Mat4, 15> build_generators() {
  std::array<Mat4, 15> g;
  std::size_t k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      Mat4 m;
      const Mat2 pa = pauli(a);
      const Mat2 pb = pauli(b);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = 0.5 * pa(r >> 1, c >> 1) * pb(r & 1, c & 1);
      g[k++] = m;
    }
  return g;
}

// Gates realized by braiding on the (Phi_x, Phi_y) pairing.
struct BraidedGates {
  Mat2 hadamard;
  Mat4 cnot;  // restricted to the computational embedding, not normalized
};

const BraidedGates& braided_gates() {
  static const BraidedGates gates = [] {
    const CompiledGate h = compile("H", kPhiPhi);
    if (!h.holds) throw std::runtime_error("braided H does not compile");
    const EmbeddingSearch search = computational_embedding(kPhiPhi);
    if (!search.chosen) throw std::runtime_error("no computational embedding for the braided CNOT");
    const CompiledGate cx = compile("CNOT", kPhiPhi, search.chosen);
    if (!cx.holds) throw std::runtime_error("braided CNOT does not compile");
    return BraidedGates{h.realized->to_complex(), cx.realized->to_complex()};
  }();
  return gates;
}

void apply_compiled(StateVector& psi, const Mat4& m, int high, int low, ShotResult& shot) {
  psi.apply(m, high, low);
  const double kept = psi.norm2();
  shot.leakage.push_back(std::clamp(1.0 - kept, 0.0, 1.0));
  if (kept < kTotalLeakageThreshold) {
    shot.discarded = true;
    return;
  }
  psi.renormalize();
}

}  // namespace

StateVector::StateVector() : amps_(Eigen::Matrix<cd, kDim, 1>::Zero()) { amps_(0) = 1.0; }

void StateVector::apply(const Mat2& u, int qubit) {
  const int stride = 1 << qubit;
  for (int i = 0; i < kDim; ++i) {
    if (bit(i, qubit)) continue;
    const cd a0 = amps_(i);
    const cd a1 = amps_(i | stride);
    amps_(i) = u(0, 0) * a0 + u(0, 1) * a1;
    amps_(i | stride) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void StateVector::apply(const Mat4& u, int high, int low) {
  if (high == low) throw std::invalid_argument("two-qubit gate on a single qubit");
  const int mh = 1 << high;
  const int ml = 1 << low;
  for (int i = 0; i < kDim; ++i) {
    if (bit(i, high) || bit(i, low)) continue;
    const std::array<int, 4> idx{i, i | ml, i | mh, i | mh | ml};
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = amps_(idx[static_cast<std::size_t>(k)]);
    const Eigen::Vector4cd w = u * v;
    for (int k = 0; k < 4; ++k) amps_(idx[static_cast<std::size_t>(k)]) = w(k);
  }
}

double StateVector::renormalize() {
  const double n2 = norm2();
  amps_ /= std::sqrt(n2);
  return n2;
}

int StateVector::measure_targets(double u) {
  std::array<double, 4> p{};
  for (int i = 0; i < kDim; ++i) p[static_cast<std::size_t>(i & 3)] += std::norm(amps_(i));
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  int outcome = 3;
  while (outcome > 0 && p[static_cast<std::size_t>(outcome)] == 0.0) --outcome;
  double acc = 0.0;
  for (int t = 0; t < 4; ++t) {
    acc += p[static_cast<std::size_t>(t)] / total;
    if (u < acc && p[static_cast<std::size_t>(t)] > 0.0) {
      outcome = t;
      break;
    }
  }
  for (int i = 0; i < kDim; ++i)
    if ((i & 3) != outcome) amps_(i) = 0.0;
  renormalize();
  return outcome;
}

Distribution StateVector::readout() const {
  Distribution d{};
  for (int i = 0; i < kDim; ++i) d[static_cast<std::size_t>(reverse_exponent_bits(i >> 2))] += std::norm(amps_(i));
  return d;
}

std::string CircuitOp::label() const {
  auto q = [](int n) {
    switch (n) {
      case t0: return "t0";
      case t1: return "t1";
      case x0: return "x0";
      default: return "x1";
    }
  };
  switch (kind) {
    case OpKind::hadamard: return std::string("H ") + q(first);
    case OpKind::cnot: return std::string("CNOT ") + q(first) + " " + q(second);
    case OpKind::controlled_phase: return std::string("CP(-pi/2) ") + q(first) + " " + q(second);
    case OpKind::noise: return std::string("U(nu) ") + q(first) + " " + q(second);
    case OpKind::measure_targets: return "measure t";
    case OpKind::readout: return "readout x";
  }
  return {};
}

std::vector<CircuitOp> build_circuit() {
  return {
      {OpKind::hadamard, x1},
      {OpKind::hadamard, x0},
      // f(x) = 11^x mod 15 depends only on x0: t = 00 encodes 1, t = 11 encodes 11.
      {OpKind::cnot, x0, t0},
      {OpKind::cnot, x0, t1},
      {OpKind::measure_targets},
      {OpKind::hadamard, x1},
      {OpKind::controlled_phase, x1, x0},
      {OpKind::noise, x1, x0},
      {OpKind::hadamard, x0},
      {OpKind::readout},
  };
}

Mat2 hadamard() {
  Mat2 h;
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

Mat4 cnot() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Mat4 controlled_phase(double angle) {
  Mat4 m = Mat4::Identity();
  m(3, 3) = std::polar(1.0, angle);
  return m;
}

Mat4 inverse_qft() {
  Mat4 m;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) m(y, x) = 0.5 * std::polar(1.0, -2.0 * std::numbers::pi * x * y / 4.0);
  return m;
}

const std::array<Mat4, 15>& noise_generators() {
  static const std::array<Mat4, 15> g = build_generators();
  return g;
}

Mat4 noise_unitary(const std::array<double, 15>& theta) {
  Mat4 h = Mat4::Zero();
  const auto& g = noise_generators();
  for (std::size_t k = 0; k < 15; ++k) h += theta[k] * g[k];
  Eigen::SelfAdjointEigenSolver<Mat4> eig(h);
  const Eigen::Vector4cd phases = (cd(0, 1) * eig.eigenvalues().cast<cd>()).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

RealizationStream::RealizationStream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double RealizationStream::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

double RealizationStream::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

std::string to_string(Backend b) { return b == Backend::ideal ? "ideal" : "braided"; }

Backend parse_backend(const std::string& text) {
  if (text == "ideal") return Backend::ideal;
  if (text == "braided") return Backend::braided;
  throw std::invalid_argument("unknown backend: " + text);
}

ShotResult run_once(double nu, std::uint64_t seed, std::uint64_t index, Backend backend) {
  if (!(nu >= 0.0)) throw std::invalid_argument("nu must be non-negative");
  RealizationStream rng(seed, index);
  const double u = rng.uniform();
  std::array<double, 15> theta{};
  for (double& t : theta) t = nu * rng.normal();

  const BraidedGates* braided = backend == Backend::braided ? &braided_gates() : nullptr;
  const Mat2 h = braided ? braided->hadamard : hadamard();

  ShotResult shot;
  StateVector psi;
  for (const CircuitOp& op : build_circuit()) {
    switch (op.kind) {
      case OpKind::hadamard:
        psi.apply(h, op.first);
        break;
      case OpKind::cnot:
        if (braided)
          apply_compiled(psi, braided->cnot, op.first, op.second, shot);
        else
          psi.apply(cnot(), op.first, op.second);
        break;
      case OpKind::controlled_phase:
        psi.apply(controlled_phase(-std::numbers::pi / 2.0), op.first, op.second);
        break;
      case OpKind::noise:
        if (nu > 0.0) psi.apply(noise_unitary(theta), op.first, op.second);
        break;
      case OpKind::measure_targets:
        shot.target_outcome = psi.measure_targets(u);
        break;
      case OpKind::readout:
        shot.probabilities = psi.readout();
        break;
    }
    if (shot.discarded) return shot;
  }
  return shot;
}

double EnsembleReport::total_variation() const {
  double tv = 0.0;
  for (std::size_t y = 0; y < mean.size(); ++y) tv += std::abs(mean[y] - kIdealDistribution[y]);
  return 0.5 * tv;
}

double EnsembleReport::total_variation_stderr() const {
  return 0.5 * std::accumulate(stderr_.begin(), stderr_.end(), 0.0);
}

EnsembleReport run_ensemble(const NoiseConfig& config) {
  if (config.realizations < 1) throw std::invalid_argument("realizations must be at least 1");
  if (!(config.nu >= 0.0)) throw std::invalid_argument("nu must be non-negative");
  if (config.backend == Backend::braided) braided_gates();  // build once before fanning out

  const std::uint64_t n = config.realizations;
  std::vector<ShotResult> shots(n);
  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t i = w; i < n; i += workers) shots[i] = run_once(config.nu, config.seed, i, config.backend);
      });
  }

  // Welford over shots in index order, so the result does not depend on scheduling.
  EnsembleReport rep;
  rep.config = config;
  Distribution m2{};
  for (const ShotResult& s : shots) {
    if (s.discarded) {
      ++rep.discarded;
      continue;
    }
    ++rep.kept;
    for (std::size_t y = 0; y < kOutcomes; ++y) {
      const double delta = s.probabilities[y] - rep.mean[y];
      rep.mean[y] += delta / static_cast<double>(rep.kept);
      m2[y] += delta * (s.probabilities[y] - rep.mean[y]);
    }
  }
  rep.stderr_defined = rep.kept >= 2;
  if (rep.stderr_defined) {
    const double k = static_cast<double>(rep.kept);
    for (std::size_t y = 0; y < kOutcomes; ++y) rep.stderr_[y] = std::sqrt(m2[y] / (k - 1.0)) / std::sqrt(k);
  }
  return rep;
}

std::vector<EnsembleReport> run_sweep(const std::vector<double>& nus, const NoiseConfig& base) {
  std::vector<EnsembleReport> out;
  for (double nu : nus) {
    NoiseConfig cfg = base;
    cfg.nu = nu;
    out.push_back(run_ensemble(cfg));
  }
  return out;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

std::string sweep_csv(const std::vector<EnsembleReport>& reports) {
  std::string out = "nu,y,mean_prob,stderr,discarded\n";
  for (const EnsembleReport& r : reports)
    for (std::size_t y = 0; y < kOutcomes; ++y)
      out += format_double(r.config.nu) + ',' + std::to_string(y) + ',' + format_double(r.mean[y]) + ',' +
             format_double(r.stderr_[y]) + ',' + std::to_string(r.discarded) + '\n';
  return out;
}

FactorResult postprocess(int y) {
  if (y < 0 || y >= kOutcomes) throw std::invalid_argument("readout out of range");
  FactorResult r;
  r.y = y;
  if (y == 0) {
    r.tag = "trivial";
    return r;
  }
  const int period = kOutcomes / std::gcd(y, kOutcomes);
  r.period = period;
  auto powmod = [](int base, int exp) {
    int acc = 1;
    for (int e = 0; e < exp; ++e) acc = acc * base % kModulus;
    return acc;
  };
  if (period % 2 != 0) {
    r.tag = "odd_period";
    return r;
  }
  if (powmod(kBase, period) != 1) {
    r.tag = "not_a_period";
    return r;
  }
  const int half = powmod(kBase, period / 2);
  const int p = std::gcd(half + 1, kModulus);
  const int q = std::gcd(half + kModulus - 1, kModulus);
  r.factors = std::pair{std::min(p, q), std::max(p, q)};
  r.tag = (p == 1 || q == 1 || p == kModulus || q == kModulus) ? "trivial_factors" : "success";
  return r;
}

}  // namespace qd::shor
