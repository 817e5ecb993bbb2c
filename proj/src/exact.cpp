#include "qd/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qd {
namespace {

using Coeffs = ExactScalar::Coeffs;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ExactScalar coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ExactScalar coefficient overflow");
  return r;
}

// x * sqrt2, with sqrt2 = z - z^3.
Coeffs times_sqrt2(const Coeffs& c) {
  return {checked_add(c[1], -c[3]), checked_add(c[0], c[2]), checked_add(c[1], c[3]), checked_add(c[2], -c[0])};
}

bool divisible_by_sqrt2(const Coeffs& c) { return ((c[1] - c[3]) % 2 == 0) && ((c[0] + c[2]) % 2 == 0); }

Coeffs div_sqrt2(const Coeffs& c) {
  Coeffs t = times_sqrt2(c);
  for (auto& v : t) v /= 2;
  return t;
}

Coeffs ring_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs r{};
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      std::int64_t p = checked_mul(a[m], b[n]);
      int e = m + n;
      if (e >= 4) {
        e -= 4;
        p = -p;
      }
      r[e] = checked_add(r[e], p);
    }
  }
  return r;
}

// j with c == sqrt2^j, if any.
std::optional<int> sqrt2_log(Coeffs c) {
  int j = 0;
  while (c != Coeffs{1, 0, 0, 0}) {
    if (c == Coeffs{} || !divisible_by_sqrt2(c)) return std::nullopt;
    c = div_sqrt2(c);
    ++j;
    if (j > 126) return std::nullopt;
  }
  return j;
}

}  // namespace

ExactScalar::ExactScalar(const Coeffs& c, int sqrt2_power) : c_(c), k_(sqrt2_power) {
  while (k_ < 0) {
    c_ = times_sqrt2(c_);
    ++k_;
  }
  reduce();
}

void ExactScalar::reduce() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && divisible_by_sqrt2(c_)) {
    c_ = div_sqrt2(c_);
    --k_;
  }
}

ExactScalar ExactScalar::zeta(int power) {
  int p = ((power % 8) + 8) % 8;
  Coeffs c{};
  if (p < 4)
    c[p] = 1;
  else
    c[p - 4] = -1;
  return ExactScalar(c, 0);
}

ExactScalar ExactScalar::inv_sqrt2(int power) { return ExactScalar(Coeffs{1, 0, 0, 0}, power); }

ExactScalar ExactScalar::conj() const {
  // z^m -> z^{-m} = -z^{4-m}
  return ExactScalar(Coeffs{c_[0], -c_[3], -c_[2], -c_[1]}, k_);
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(Coeffs{-c_[0], -c_[1], -c_[2], -c_[3]}, k_); }

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  Coeffs x = a.c_;
  Coeffs y = b.c_;
  int k = std::max(a.k_, b.k_);
  for (int s = a.k_; s < k; ++s) x = times_sqrt2(x);
  for (int s = b.k_; s < k; ++s) y = times_sqrt2(y);
  Coeffs r;
  for (int m = 0; m < 4; ++m) r[m] = checked_add(x[m], y[m]);
  return ExactScalar(r, k);
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  return ExactScalar(ring_mul(a.c_, b.c_), a.k_ + b.k_);
}

std::optional<int> ExactScalar::root_of_unity_exponent() const {
  if (k_ != 0) return std::nullopt;
  for (int n = 0; n < 8; ++n)
    if (*this == zeta(n)) return n;
  return std::nullopt;
}

std::optional<ExactScalar> ExactScalar::inverse() const {
  if (is_zero()) return std::nullopt;
  ExactScalar n2 = norm2();
  auto j = sqrt2_log(n2.c_);
  if (!j) return std::nullopt;
  // 1/|z|^2 = sqrt2^(k - j)
  return conj() * ExactScalar(Coeffs{1, 0, 0, 0}, *j - n2.k_);
}

std::optional<std::pair<std::int64_t, std::int64_t>> ExactScalar::as_rational() const {
  if (c_[1] != 0 || c_[2] != 0 || c_[3] != 0 || k_ % 2 != 0) return std::nullopt;
  std::int64_t num = c_[0];
  std::int64_t den = std::int64_t{1} << (k_ / 2);
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  return std::pair{num, den};
}

std::complex<double> ExactScalar::to_complex() const {
  const double h = std::numbers::sqrt2 / 2.0;
  const std::complex<double> z[4] = {{1.0, 0.0}, {h, h}, {0.0, 1.0}, {-h, h}};
  std::complex<double> s = 0.0;
  for (int m = 0; m < 4; ++m) s += static_cast<double>(c_[m]) * z[m];
  return s * std::pow(h, k_);
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (auto n = (*this * ExactScalar(Coeffs{1, 0, 0, 0}, -k_)).root_of_unity_exponent()) {
    os << "e^{i" << *n << "pi/4}";
  } else {
    os << "(" << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3] << ")";
  }
  if (k_ > 0) os << "/sqrt2^" << k_;
  return os.str();
}

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<ExactScalar> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != static_cast<std::size_t>(rows * cols)) throw std::invalid_argument("ExactMatrix: size mismatch");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<ExactScalar>& d) {
  int n = static_cast<int>(d.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const {
  ExactMatrix m = *this;
  for (auto& v : m.data_) v = v * s;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

bool ExactMatrix::is_unitary() const { return rows_ == cols_ && (*this * adjoint()).is_identity(); }

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (is_unitary()) return adjoint();
  if (rows_ != 2) return std::nullopt;
  const auto& m = *this;
  auto det_inv = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).inverse();
  if (!det_inv) return std::nullopt;
  ExactMatrix adj(2, 2, {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)});
  return adj.scaled(*det_inv);
}

std::optional<ExactScalar> ExactMatrix::proportionality_to(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return std::nullopt;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!other.data_[i].is_zero() && other.data_[i].inverse()) {
      pivot = i;
      break;
    }
  }
  if (!pivot) return std::nullopt;
  const ExactScalar& bp = other.data_[*pivot];
  const ExactScalar& ap = data_[*pivot];
  if (ap.is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] * bp == other.data_[i] * ap)) return std::nullopt;
  return ap * *bp.inverse();
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).to_complex();
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
  ExactMatrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const ExactScalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in sum");
  ExactMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + b.scaled(-1); }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

}  // namespace qd
