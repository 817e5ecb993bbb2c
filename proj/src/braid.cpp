#include "qd/braid.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qd {
namespace {

ExactScalar z(int n) { return ExactScalar::zeta(n); }

ExactMatrix scaled_inv_sqrt2(ExactMatrix m) { return m.scaled(ExactScalar::inv_sqrt2()); }

}  // namespace

std::string Pairing::name() const {
  auto part = [](AnyonKind k) { return k == AnyonKind::phi ? "Phi" : "Sigma"; };
  return std::string(part(first)) + part(second);
}

std::string Pairing::display() const {
  auto part = [](AnyonKind k) { return k == AnyonKind::phi ? "Φ" : "Σ"; };
  return std::string(part(first)) + part(second);
}

Pairing parse_pairing(std::string_view text) {
  for (const Pairing& p : kTwoQubitPairings) {
    std::string shortname;
    shortname += p.first == AnyonKind::phi ? 'P' : 'S';
    shortname += p.second == AnyonKind::phi ? 'P' : 'S';
    if (text == p.name() || text == p.display() || text == shortname) return p;
  }
  throw std::invalid_argument("unknown pairing: " + std::string(text));
}

TemplateParameters template_parameters(Pairing p) {
  if (p == kPhiPhi) return {-1, z(2), z(3), z(5), z(3)};
  if (p == kSigmaSigma) return {z(-1), z(-3), -1, 1, 1};
  if (p == kSigmaPhi || p == kPhiSigma) return {-z(-1), z(1), 1, -1, z(2)};
  throw std::invalid_argument("unknown pairing");
}

ExactMatrix sigma_1q(Pairing p, int index) {
  if (index != 1 && index != 2) throw std::invalid_argument("single-qubit generator index must be 1 or 2");
  if (p == kPhiPhi) {
    if (index == 1) return ExactMatrix::diagonal({-1, z(2)});
    return scaled_inv_sqrt2(ExactMatrix(2, 2, {z(3), z(5), z(5), z(3)}));
  }
  if (p == kSigmaSigma) {
    if (index == 1) return ExactMatrix::diagonal({z(-1), z(-3)});
    return scaled_inv_sqrt2(ExactMatrix(2, 2, {-1, 1, 1, -z(2)}));
  }
  if (p == kSigmaPhi) {
    if (index == 1) return ExactMatrix::diagonal({-z(-1), z(1)});
    return scaled_inv_sqrt2(ExactMatrix(2, 2, {1, -1, -1, z(2)}));
  }
  throw std::invalid_argument("no single-qubit generators for pairing " + p.name());
}

ExactMatrix sigma_2q(Pairing p, int index, TemplateVariant variant) {
  const auto [a, b, c, d, e] = template_parameters(p);
  ExactMatrix m(8, 8);
  switch (index) {
    case 1:
      return ExactMatrix::diagonal({a, a, b, b, a, a, b, b});
    case 2:
      for (int blk : {0, 4})
        for (int r = 0; r < 2; ++r) {
          m(blk + r, blk + r) = c;
          m(blk + r + 2, blk + r + 2) = c;
          m(blk + r, blk + r + 2) = d;
          m(blk + r + 2, blk + r) = d;
        }
      return scaled_inv_sqrt2(m);
    case 3: {
      const ExactScalar diag[4] = {a, b, b, a};
      const ExactScalar off[4] = {b, a, a, b};
      for (int r = 0; r < 4; ++r) {
        m(r, r) = diag[r];
        m(r, r + 4) = off[r];
        m(r + 4, r + 4) = diag[r];
        m(r + 4, r) = off[r];
      }
      if (variant == TemplateVariant::as_printed) {
        // Rows 6 and 7 as typeset: b one column to the left.
        m(5, 5) = 0;
        m(5, 4) = b;
        m(6, 6) = 0;
        m(6, 5) = b;
      }
      return scaled_inv_sqrt2(m);
    }
    case 4:
      for (int blk = 0; blk < 8; blk += 2) {
        m(blk, blk) = c;
        m(blk, blk + 1) = d;
        m(blk + 1, blk) = d;
        m(blk + 1, blk + 1) = blk == 0 ? c : e;
      }
      return scaled_inv_sqrt2(m);
    case 5:
      return ExactMatrix::diagonal({a, b, a, b, a, b, a, b});
    default:
      throw std::invalid_argument("two-qubit generator index must be in 1..5");
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<BraidToken> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "P") {
      tokens.push_back({BraidToken::Kind::projection, 0, 0});
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad braid token: " + tok);
    BraidToken t;
    const char* first = tok.data() + 1;
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, t.index);
    if (ec != std::errc{} || t.index < 1) throw std::invalid_argument("bad braid token: " + tok);
    if (p != last) {
      if (*p != '^') throw std::invalid_argument("bad braid token: " + tok);
      auto [q, ec2] = std::from_chars(p + 1, last, t.power);
      if (ec2 != std::errc{} || q != last) throw std::invalid_argument("bad braid token: " + tok);
    }
    tokens.push_back(t);
  }
  return BraidWord(std::move(tokens));
}

bool BraidWord::has_projection() const {
  for (const auto& t : tokens_)
    if (t.kind == BraidToken::Kind::projection) return true;
  return false;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const auto& t : tokens_) {
    if (!s.empty()) s += ' ';
    if (t.kind == BraidToken::Kind::projection) {
      s += 'P';
      continue;
    }
    s += "s" + std::to_string(t.index);
    if (t.power != 1) s += "^" + std::to_string(t.power);
  }
  return s;
}

GeneratorSet::GeneratorSet(int arity, Pairing pairing, TemplateVariant variant) : arity_(arity), pairing_(pairing) {
  if (arity == 1) {
    for (int i = 1; i <= 2; ++i) sigma_.push_back(sigma_1q(pairing, i));
  } else if (arity == 2) {
    for (int i = 1; i <= 5; ++i) sigma_.push_back(sigma_2q(pairing, i, variant));
  } else {
    throw std::invalid_argument("arity must be 1 or 2");
  }
}

const ExactMatrix& GeneratorSet::generator(int index) const {
  if (index < 1 || index > count()) throw std::invalid_argument("generator index out of range");
  return sigma_[static_cast<std::size_t>(index - 1)];
}

ExactMatrix GeneratorSet::power(int index, int exponent) const {
  ExactMatrix base = generator(index);
  if (exponent < 0) {
    auto inv = base.inverse();
    if (!inv) throw NotInvertible("sigma" + std::to_string(index) + " of " + pairing_.name() + " has no exact inverse");
    base = *inv;
    exponent = -exponent;
  }
  ExactMatrix out = ExactMatrix::identity(dimension());
  for (int n = 0; n < exponent; ++n) out = out * base;
  return out;
}

ExactMatrix evaluate(const BraidWord& word, const GeneratorSet& gens) {
  if (word.has_projection()) throw std::invalid_argument("pure evaluation of a word with projection markers");
  return evaluate_projected(word, gens, ExactMatrix::identity(gens.dimension()));
}

ExactMatrix evaluate_projected(const BraidWord& word, const GeneratorSet& gens, const ExactMatrix& projector) {
  ExactMatrix out = ExactMatrix::identity(gens.dimension());
  for (const auto& t : word.tokens())
    out = out * (t.kind == BraidToken::Kind::projection ? projector : gens.power(t.index, t.power));
  return out;
}

bool BraidRelationReport::all_unitary() const {
  for (bool u : unitary)
    if (!u) return false;
  return true;
}

bool BraidRelationReport::all_adjacent() const {
  for (const auto& c : adjacent)
    if (!c.holds) return false;
  return true;
}

bool BraidRelationReport::all_far() const {
  for (const auto& c : far)
    if (!c.holds) return false;
  return true;
}

BraidRelationReport verify_braid_relations(int arity, Pairing pairing, TemplateVariant variant) {
  GeneratorSet gens(arity, pairing, variant);
  BraidRelationReport rep{arity, pairing, {}, {}, {}};
  for (int i = 1; i <= gens.count(); ++i) rep.unitary.push_back(gens.generator(i).is_unitary());
  for (int i = 1; i < gens.count(); ++i) {
    const auto& s = gens.generator(i);
    const auto& t = gens.generator(i + 1);
    rep.adjacent.push_back({i, i + 1, s * t * s == t * s * t});
  }
  for (int i = 1; i <= gens.count(); ++i)
    for (int j = i + 2; j <= gens.count(); ++j) {
      const auto& s = gens.generator(i);
      const auto& t = gens.generator(j);
      rep.far.push_back({i, j, s * t == t * s});
    }
  return rep;
}

bool has_ising_spectrum(const ExactMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2 || !m.is_unitary()) return false;
  ExactScalar tr = m.trace();
  ExactScalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return tr * tr == det * ExactScalar(2);
}

}  // namespace qd
