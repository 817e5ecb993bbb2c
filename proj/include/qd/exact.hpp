#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qd {

// Element of Z[zeta8][1/sqrt2], zeta8 = exp(i*pi/4), stored as
// (c0 + c1*z + c2*z^2 + c3*z^3) / sqrt2^k with k >= 0 minimal.
class ExactScalar {
 public:
  using Coeffs = std::array<std::int64_t, 4>;

  ExactScalar() = default;
  ExactScalar(std::int64_t n) : c_{n, 0, 0, 0} {}  // NOLINT: integers promote implicitly
  ExactScalar(const Coeffs& c, int sqrt2_power);

  static ExactScalar zeta(int power);
  static ExactScalar inv_sqrt2(int power = 1);
  static ExactScalar sqrt2() { return ExactScalar({0, 1, 0, -1}, 0); }
  static ExactScalar imag_unit() { return zeta(2); }

  const Coeffs& coeffs() const { return c_; }
  int sqrt2_power() const { return k_; }

  bool is_zero() const { return c_ == Coeffs{}; }
  ExactScalar conj() const;
  ExactScalar norm2() const { return *this * conj(); }
  bool is_real() const { return conj() == *this; }
  bool is_unit_modulus() const { return norm2() == ExactScalar(1); }

  // n in 0..7 if the value is exactly zeta8^n.
  std::optional<int> root_of_unity_exponent() const;
  // Inverse when |z|^2 is a power of sqrt2 (covers all entries used here).
  std::optional<ExactScalar> inverse() const;
  // p/q when the value is a dyadic rational.
  std::optional<std::pair<std::int64_t, std::int64_t>> as_rational() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

 private:
  void reduce();

  Coeffs c_{};
  int k_ = 0;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  ExactMatrix(int rows, int cols, std::vector<ExactScalar> row_major);

  static ExactMatrix identity(int n);
  static ExactMatrix diagonal(const std::vector<ExactScalar>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ExactScalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const ExactScalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  ExactMatrix adjoint() const;
  ExactMatrix scaled(const ExactScalar& s) const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_unitary() const;
  ExactScalar trace() const;
  // Exact inverse: adjoint for unitaries, adjugate for 2x2 with unit determinant.
  std::optional<ExactMatrix> inverse() const;
  // Nonzero c with *this == c * other, if one exists.
  std::optional<ExactScalar> proportionality_to(const ExactMatrix& other) const;

  Eigen::MatrixXcd to_complex() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ExactScalar> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace qd
