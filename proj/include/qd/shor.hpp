#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qd::shor {

inline constexpr int kModulus = 15;
inline constexpr int kBase = 11;
inline constexpr int kExponentQubits = 2;
inline constexpr int kOutcomes = 1 << kExponentQubits;

// Qubit labels; basis index = (x << 2) | t with x = 2*x1 + x0, t = 2*t1 + t0.
enum Qubit : int { t0 = 0, t1 = 1, x0 = 2, x1 = 3 };

using Distribution = std::array<double, kOutcomes>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

class StateVector {
 public:
  static constexpr int kQubits = 4;
  static constexpr int kDim = 1 << kQubits;

  StateVector();  // |0000>

  const Eigen::Matrix<std::complex<double>, kDim, 1>& amplitudes() const { return amps_; }
  double norm2() const { return amps_.squaredNorm(); }

  void apply(const Mat2& u, int qubit);
  // Basis of u is |high, low>, high being the more significant bit of the 2-bit index.
  void apply(const Mat4& u, int high, int low);
  // Returns the remaining squared norm before renormalizing.
  double renormalize();
  // Collapses the target register onto the outcome sampled from u in [0,1); returns the outcome t.
  int measure_targets(double u);
  // Probability of each readout y, where y is x with its two bits reversed.
  Distribution readout() const;

 private:
  Eigen::Matrix<std::complex<double>, kDim, 1> amps_;
};

enum class OpKind { hadamard, cnot, controlled_phase, noise, measure_targets, readout };

struct CircuitOp {
  OpKind kind;
  int first = -1;   // target of H; control of CNOT and controlled-phase
  int second = -1;  // target of CNOT and controlled-phase
  std::string label() const;
  friend bool operator==(const CircuitOp&, const CircuitOp&) = default;
};

std::vector<CircuitOp> build_circuit();

Mat2 hadamard();
Mat4 cnot();
Mat4 controlled_phase(double angle);
// The exact 4x4 inverse QFT, (1/2) exp(-2 pi i x y / 4), indexed [y][x].
Mat4 inverse_qft();

// Pauli products (s_a (x) s_b)/2 over the 15 pairs (a, b) != (0, 0), in row-major (a, b) order.
const std::array<Mat4, 15>& noise_generators();
// exp(i sum_k theta_k G_k).
Mat4 noise_unitary(const std::array<double, 15>& theta);

// One mt19937_64 per (seed, realization index). Draw order inside a realization:
// one uniform for the target measurement, then 15 standard normals.
class RealizationStream {
 public:
  RealizationStream(std::uint64_t seed, std::uint64_t index);
  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
};

enum class Backend { ideal, braided };
std::string to_string(Backend b);
Backend parse_backend(const std::string& text);

struct ShotResult {
  Distribution probabilities{};
  int target_outcome = 0;
  std::vector<double> leakage;  // braided backend: discarded probability per compiled gate
  bool discarded = false;
};

ShotResult run_once(double nu, std::uint64_t seed, std::uint64_t index = 0, Backend backend = Backend::ideal);

struct NoiseConfig {
  double nu = 0.0;
  std::uint64_t realizations = 1000;
  std::uint64_t seed = 0;
  Backend backend = Backend::ideal;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct EnsembleReport {
  NoiseConfig config;
  Distribution mean{};
  Distribution stderr_{};
  bool stderr_defined = false;  // false when fewer than two shots survive
  std::uint64_t kept = 0;
  std::uint64_t discarded = 0;

  double total_variation() const;  // from the ideal [1/2, 0, 1/2, 0]
  double total_variation_stderr() const;
};

EnsembleReport run_ensemble(const NoiseConfig& config);
// One ensemble per nu, all sharing the remaining fields of base.
std::vector<EnsembleReport> run_sweep(const std::vector<double>& nus, const NoiseConfig& base);

// Shortest round-trip decimal form, independent of the locale.
std::string format_double(double v);
// Header "nu,y,mean_prob,stderr,discarded", then one row per (report, y).
std::string sweep_csv(const std::vector<EnsembleReport>& reports);

inline constexpr Distribution kIdealDistribution{0.5, 0.0, 0.5, 0.0};

struct FactorResult {
  int y = 0;
  std::optional<int> period;
  std::optional<std::pair<int, int>> factors;
  std::string tag;  // "success", "trivial", "odd_period", "not_a_period", "trivial_factors"
};

FactorResult postprocess(int y);

}  // namespace qd::shor
