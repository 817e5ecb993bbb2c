#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qd/braid.hpp"

namespace qd {

// Positions of |00>, |01>, |10>, |11> inside the 8-dimensional two-qubit space.
struct SubspaceEmbedding {
  std::array<int, 4> slots{};

  ExactMatrix projector() const;  // 8x8 diagonal, rank 4
  ExactMatrix isometry() const;   // 8x4, column q is the basis vector at slots[q]
  std::string to_string() const;
  friend bool operator==(const SubspaceEmbedding&, const SubspaceEmbedding&) = default;
  friend auto operator<=>(const SubspaceEmbedding&, const SubspaceEmbedding&) = default;
};

struct GateIdentity {
  std::string name;
  int arity;
  BraidWord word;
  ExactMatrix target;
};

// S, H, X, Y, Z, CNOT, CZ, plus H_alt (the sigma2 sigma1 sigma2 form of H).
const std::vector<GateIdentity>& gate_identities();
const GateIdentity& gate_identity(std::string_view name);

struct CompiledGate {
  std::string name;
  Pairing pairing;
  BraidWord word;
  ExactMatrix target;
  bool uses_projection = false;
  std::optional<SubspaceEmbedding> embedding;
  std::optional<ExactMatrix> realized;  // restricted to the computational space for two-qubit words
  std::optional<ExactScalar> scalar;    // realized == scalar * target
  bool holds = false;
  bool unit_phase = false;  // |scalar| == 1
  std::string failure;
};

// Two-qubit gates need an embedding; single-qubit gates ignore it.
CompiledGate compile(std::string_view name, Pairing pairing, std::optional<SubspaceEmbedding> embedding = std::nullopt,
                     TemplateVariant variant = TemplateVariant::corrected);

struct EmbeddingSearch {
  Pairing pairing;
  std::size_t candidates = 0;
  std::vector<SubspaceEmbedding> cnot;
  std::vector<SubspaceEmbedding> cz;
  std::vector<SubspaceEmbedding> both;
  std::optional<SubspaceEmbedding> chosen;  // lexicographically smallest of both
  std::string cnot_failure;                 // set when the CNOT word cannot be evaluated at all
  std::string cz_failure;
};

EmbeddingSearch computational_embedding(Pairing pairing, TemplateVariant variant = TemplateVariant::corrected);

struct LeakageRecord {
  std::size_t step = 0;  // tokens applied before this projection
  double leaked = 0.0;   // probability outside the computational space just before it
};

struct ProjectionResult {
  Eigen::VectorXcd state;
  std::vector<LeakageRecord> leakage;
};

struct TotalLeakage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kTotalLeakageThreshold = 1e-12;

// Applies the word right to left; each marker post-selects onto the embedding and renormalizes.
ProjectionResult apply_with_projection(const BraidWord& word, const GeneratorSet& gens,
                                       const SubspaceEmbedding& embedding, Eigen::VectorXcd state);

}  // namespace qd
