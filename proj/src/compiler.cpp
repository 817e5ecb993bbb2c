#include "qd/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qd {
namespace {

std::vector<GateIdentity> build_identities() {
  const ExactScalar i = ExactScalar::imag_unit();
  const ExactScalar h = ExactScalar::inv_sqrt2();
  return {
      {"S", 1, BraidWord::parse("s1^-1"), ExactMatrix::diagonal({1, i})},
      {"H", 1, BraidWord::parse("s1 s2 s1"), ExactMatrix(2, 2, {h, h, h, -h})},
      {"H_alt", 1, BraidWord::parse("s2 s1 s2"), ExactMatrix(2, 2, {h, h, h, -h})},
      {"X", 1, BraidWord::parse("s2 s2"), ExactMatrix(2, 2, {0, 1, 1, 0})},
      {"Y", 1, BraidWord::parse("s1 s1 s2^-1 s2^-1"), ExactMatrix(2, 2, {0, -i, i, 0})},
      {"Z", 1, BraidWord::parse("s1 s1"), ExactMatrix::diagonal({1, -1})},
      {"CNOT", 2, BraidWord::parse("P s3^-1 s4^-1 s5^-1 P s3 s4 P s3 s1"),
       ExactMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})},
      {"CZ", 2, BraidWord::parse("s1 P s3^-1 s5"), ExactMatrix::diagonal({1, 1, 1, -1})},
  };
}

// Products of the generator runs between projection markers.
struct Segmented {
  std::vector<ExactMatrix> segments;  // one more than the number of markers
};

Segmented segment(const BraidWord& word, const GeneratorSet& gens) {
  Segmented s;
  s.segments.push_back(ExactMatrix::identity(gens.dimension()));
  for (const auto& t : word.tokens()) {
    if (t.kind == BraidToken::Kind::projection)
      s.segments.push_back(ExactMatrix::identity(gens.dimension()));
    else
      s.segments.back() = s.segments.back() * gens.power(t.index, t.power);
  }
  return s;
}

ExactMatrix restrict_to(const Segmented& s, const SubspaceEmbedding& emb) {
  const ExactMatrix p = emb.projector();
  ExactMatrix w = s.segments.front();
  for (std::size_t n = 1; n < s.segments.size(); ++n) w = w * p * s.segments[n];
  const ExactMatrix e = emb.isometry();
  return e.adjoint() * w * e;
}

bool realizes(const ExactMatrix& realized, const ExactMatrix& target) {
  return realized.proportionality_to(target).has_value();
}

}  // namespace

ExactMatrix SubspaceEmbedding::projector() const {
  std::vector<ExactScalar> d(8, ExactScalar{});
  for (int s : slots) d[static_cast<std::size_t>(s)] = 1;
  return ExactMatrix::diagonal(d);
}

ExactMatrix SubspaceEmbedding::isometry() const {
  ExactMatrix e(8, 4);
  for (int q = 0; q < 4; ++q) e(slots[static_cast<std::size_t>(q)], q) = 1;
  return e;
}

std::string SubspaceEmbedding::to_string() const {
  return "(" + std::to_string(slots[0]) + "," + std::to_string(slots[1]) + "," + std::to_string(slots[2]) + "," +
         std::to_string(slots[3]) + ")";
}

const std::vector<GateIdentity>& gate_identities() {
  static const std::vector<GateIdentity> ids = build_identities();
  return ids;
}

const GateIdentity& gate_identity(std::string_view name) {
  for (const auto& g : gate_identities())
    if (g.name == name) return g;
  throw std::invalid_argument("unknown gate: " + std::string(name));
}

CompiledGate compile(std::string_view name, Pairing pairing, std::optional<SubspaceEmbedding> embedding,
                     TemplateVariant variant) {
  const GateIdentity& id = gate_identity(name);
  CompiledGate out;
  out.name = id.name;
  out.pairing = pairing;
  out.word = id.word;
  out.target = id.target;
  out.uses_projection = id.word.has_projection();
  try {
    GeneratorSet gens(id.arity, pairing, variant);
    if (id.arity == 1) {
      out.realized = evaluate(id.word, gens);
    } else {
      if (!embedding) throw std::invalid_argument("two-qubit gate requires an embedding");
      out.embedding = embedding;
      out.realized = restrict_to(segment(id.word, gens), *embedding);
    }
  } catch (const std::exception& e) {
    out.failure = e.what();
    return out;
  }
  out.scalar = out.realized->proportionality_to(out.target);
  out.holds = out.scalar.has_value();
  if (out.holds)
    out.unit_phase = out.scalar->is_unit_modulus();
  else
    out.failure = "realized matrix is not proportional to the target";
  return out;
}

EmbeddingSearch computational_embedding(Pairing pairing, TemplateVariant variant) {
  EmbeddingSearch out;
  out.pairing = pairing;
  GeneratorSet gens(2, pairing, variant);
  const auto& cnot = gate_identity("CNOT");
  const auto& cz = gate_identity("CZ");
  std::optional<Segmented> cnot_seg;
  std::optional<Segmented> cz_seg;
  try {
    cnot_seg = segment(cnot.word, gens);
  } catch (const NotInvertible& e) {
    out.cnot_failure = e.what();
  }
  try {
    cz_seg = segment(cz.word, gens);
  } catch (const NotInvertible& e) {
    out.cz_failure = e.what();
  }

  std::array<int, 8> pool;
  std::iota(pool.begin(), pool.end(), 0);
  for (int a : pool)
    for (int b : pool)
      for (int c : pool)
        for (int d : pool) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          SubspaceEmbedding emb{{a, b, c, d}};
          ++out.candidates;
          const bool ok_cnot = cnot_seg && realizes(restrict_to(*cnot_seg, emb), cnot.target);
          const bool ok_cz = cz_seg && realizes(restrict_to(*cz_seg, emb), cz.target);
          if (ok_cnot) out.cnot.push_back(emb);
          if (ok_cz) out.cz.push_back(emb);
          if (ok_cnot && ok_cz) out.both.push_back(emb);
        }
  if (!out.both.empty()) out.chosen = *std::min_element(out.both.begin(), out.both.end());
  return out;
}

ProjectionResult apply_with_projection(const BraidWord& word, const GeneratorSet& gens,
                                       const SubspaceEmbedding& embedding, Eigen::VectorXcd state) {
  if (gens.arity() != 2) throw std::invalid_argument("projection applies to the two-qubit space");
  if (state.size() != 8) throw std::invalid_argument("state must be 8-dimensional");
  std::array<bool, 8> keep{};
  for (int s : embedding.slots) keep[static_cast<std::size_t>(s)] = true;

  ProjectionResult out;
  const auto& tokens = word.tokens();
  std::size_t applied = 0;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it, ++applied) {
    if (it->kind == BraidToken::Kind::generator) {
      state = gens.power(it->index, it->power).to_complex() * state;
      continue;
    }
    double inside = 0.0;
    for (int n = 0; n < 8; ++n) {
      if (keep[static_cast<std::size_t>(n)])
        inside += std::norm(state(n));
      else
        state(n) = 0.0;
    }
    out.leakage.push_back({applied, std::clamp(1.0 - inside, 0.0, 1.0)});
    if (inside < kTotalLeakageThreshold) throw TotalLeakage("projection removed all amplitude");
    state /= std::sqrt(inside);
  }
  out.state = std::move(state);
  return out;
}

}  // namespace qd
