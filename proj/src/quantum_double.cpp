#include "qd/quantum_double.hpp"

#include <cmath>
#include <complex>
#include <numeric>

namespace qd {
namespace {

constexpr std::array<const char*, 3> kAxis = {"i", "j", "k"};

int axis_of(ClassLabel c) {
  switch (c) {
    case ClassLabel::i: return 0;
    case ClassLabel::j: return 1;
    case ClassLabel::k: return 2;
    default: return -1;
  }
}

std::vector<AnyonCharge> build_spectrum() {
  std::vector<AnyonCharge> out;
  for (ClassLabel c : kAllClasses) {
    int n = static_cast<int>(irreps(c).size());
    for (int a = 0; a < n; ++a) out.push_back({c, a});
  }
  return out;
}

}  // namespace

int AnyonCharge::quantum_dimension() const {
  Irrep rep(flux, irrep);
  return static_cast<int>(conjugacy_class(flux).members.size()) * rep.dimension();
}

std::string AnyonCharge::name() const {
  if (flux == ClassLabel::e || flux == ClassLabel::eb) {
    const std::string bar = flux == ClassLabel::eb ? "b" : "";
    if (irrep == 0) return "1" + bar;
    if (irrep == 4) return "Delta" + bar;
    return "rho" + bar + "_" + kAxis[static_cast<std::size_t>(irrep - 1)];
  }
  static const std::array<const char*, 4> stem = {"Phi", "Sigma", "Phit", "Sigmat"};
  return std::string(stem[static_cast<std::size_t>(irrep)]) + "_" + kAxis[static_cast<std::size_t>(axis_of(flux))];
}

std::string AnyonCharge::display() const {
  if (flux == ClassLabel::e || flux == ClassLabel::eb) {
    const bool bar = flux == ClassLabel::eb;
    if (irrep == 0) return bar ? "𝟙̄" : "𝟙";
    if (irrep == 4) return bar ? "Δ̄" : "Δ";
    return std::string(bar ? "ρ̄_" : "ρ_") + kAxis[static_cast<std::size_t>(irrep - 1)];
  }
  static const std::array<const char*, 4> stem = {"Φ_", "Σ_", "Φ̃_", "Σ̃_"};
  return std::string(stem[static_cast<std::size_t>(irrep)]) + kAxis[static_cast<std::size_t>(axis_of(flux))];
}

const std::vector<AnyonCharge>& spectrum() {
  static const std::vector<AnyonCharge> s = build_spectrum();
  return s;
}

int charge_index(const AnyonCharge& a) {
  const auto& s = spectrum();
  for (std::size_t n = 0; n < s.size(); ++n)
    if (s[n] == a) return static_cast<int>(n);
  throw std::invalid_argument("charge outside the spectrum");
}

AnyonCharge charge_from_name(const std::string& name) {
  for (const auto& a : spectrum())
    if (a.name() == name || a.display() == name) return a;
  throw std::invalid_argument("unknown charge label: " + name);
}

AnyonCharge vacuum() { return spectrum().front(); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {num, den};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ModularData::ModularData(Section section) {
  const auto& spec = spectrum();
  const int n = kNumCharges;
  s_.assign(static_cast<std::size_t>(n * n), ExactScalar{});
  t_.resize(static_cast<std::size_t>(n));

  std::vector<Irrep> reps;
  for (const auto& a : spec) reps.emplace_back(a.flux, a.irrep);

  const ExactScalar eighth = ExactScalar::inv_sqrt2(6);
  for (int a = 0; a < n; ++a) {
    const auto ca = conjugacy_class(spec[static_cast<std::size_t>(a)].flux);
    for (int b = 0; b < n; ++b) {
      const auto cb = conjugacy_class(spec[static_cast<std::size_t>(b)].flux);
      ExactScalar sum;
      for (GroupElement ha : ca.members) {
        GroupElement ga = section_element(ca.label, ha, section);
        for (GroupElement hb : cb.members) {
          if (multiply(ha, hb) != multiply(hb, ha)) continue;
          GroupElement gb = section_element(cb.label, hb, section);
          GroupElement pulled_b = multiply(multiply(inverse(ga), hb), ga);
          GroupElement pulled_a = multiply(multiply(inverse(gb), ha), gb);
          sum += reps[static_cast<std::size_t>(a)].character(pulled_b).conj() *
                 reps[static_cast<std::size_t>(b)].character(pulled_a).conj();
        }
      }
      s_[idx(a, b)] = sum * eighth;
    }
    const auto& rep = reps[static_cast<std::size_t>(a)];
    ExactScalar dim_inv = rep.dimension() == 2 ? ExactScalar::inv_sqrt2(2) : ExactScalar(1);
    t_[static_cast<std::size_t>(a)] = rep.character(ca.representative) * dim_inv;
  }
}

Rational ModularData::s_entry(int a, int b) const {
  auto r = s_exact(a, b).as_rational();
  if (!r) throw std::logic_error("S entry is not rational: " + s_exact(a, b).to_string());
  return make_rational(r->first, r->second);
}

ExactMatrix ModularData::s_matrix() const { return ExactMatrix(kNumCharges, kNumCharges, s_); }

ExactMatrix ModularData::t_matrix() const { return ExactMatrix::diagonal(t_); }

bool ModularData::s_symmetric() const {
  auto s = s_matrix();
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b)
      if (!(s(a, b) == s(b, a))) return false;
  return true;
}

bool ModularData::s_unitary() const { return s_matrix().is_unitary(); }

FusionTable::FusionTable(const ModularData& md) : n_(static_cast<std::size_t>(kNumCharges * kNumCharges * kNumCharges)) {
  const int n = kNumCharges;
  Eigen::MatrixXcd s = md.s_matrix().to_complex();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::complex<double> v = 0.0;
        for (int d = 0; d < n; ++d) v += s(a, d) * s(b, d) * std::conj(s(c, d)) / s(0, d);
        const double rounded = std::round(v.real());
        const double residual = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
        max_residual_ = std::max(max_residual_, residual);
        if (residual > 1e-9 || rounded < 0) {
          throw FusionDefect("Verlinde multiplicity " + spectrum()[static_cast<std::size_t>(a)].name() + " x " +
                             spectrum()[static_cast<std::size_t>(b)].name() + " -> " +
                             spectrum()[static_cast<std::size_t>(c)].name() + " = " + std::to_string(v.real()) +
                             " is not a non-negative integer");
        }
        n_[idx(a, b, c)] = static_cast<int>(rounded);
      }
}

std::vector<int> FusionTable::channels(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < kNumCharges; ++c)
    for (int m = 0; m < multiplicity(a, b, c); ++m) out.push_back(c);
  return out;
}

bool FusionTable::commutative() const {
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b)
      for (int c = 0; c < kNumCharges; ++c)
        if (multiplicity(a, b, c) != multiplicity(b, a, c)) return false;
  return true;
}

bool FusionTable::vacuum_neutral() const {
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b)
      if (multiplicity(0, a, b) != (a == b ? 1 : 0)) return false;
  return true;
}

bool FusionTable::dimension_consistent() const {
  const auto& s = spectrum();
  for (int a = 0; a < kNumCharges; ++a)
    for (int b = 0; b < kNumCharges; ++b) {
      int total = 0;
      for (int c = 0; c < kNumCharges; ++c) total += multiplicity(a, b, c) * s[static_cast<std::size_t>(c)].quantum_dimension();
      if (total != s[static_cast<std::size_t>(a)].quantum_dimension() * s[static_cast<std::size_t>(b)].quantum_dimension())
        return false;
    }
  return true;
}

bool FusionTable::associative() const {
  const int n = kNumCharges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int left = 0;
          int right = 0;
          for (int e = 0; e < n; ++e) {
            left += multiplicity(a, b, e) * multiplicity(e, c, d);
            right += multiplicity(b, c, e) * multiplicity(a, e, d);
          }
          if (left != right) return false;
        }
  return true;
}

bool FusionTable::multiplicity_free() const {
  for (int v : n_)
    if (v > 1) return false;
  return true;
}

}  // namespace qd
