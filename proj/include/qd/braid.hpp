#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qd/exact.hpp"
#include "qd/pairing.hpp"

namespace qd {

// Entries a..e of the two-qubit generator templates for one pairing.
struct TemplateParameters {
  ExactScalar a, b, c, d, e;
};

TemplateParameters template_parameters(Pairing pairing);

// The printed sigma3 template has the b entries of rows 6 and 7 shifted one
// column left of the symmetric (i, i+4) pattern, which makes it non-unitary.
enum class TemplateVariant { corrected, as_printed };

ExactMatrix sigma_1q(Pairing pairing, int index);
ExactMatrix sigma_2q(Pairing pairing, int index, TemplateVariant variant = TemplateVariant::corrected);

struct BraidToken {
  enum class Kind { generator, projection };
  Kind kind = Kind::generator;
  int index = 0;  // 1-based generator index
  int power = 1;
  friend bool operator==(const BraidToken&, const BraidToken&) = default;
};

// Operator product in written order: the rightmost token acts first on a state.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidToken> tokens) : tokens_(std::move(tokens)) {}

  // Whitespace-separated tokens "s<i>", "s<i>^<p>", "P".
  static BraidWord parse(std::string_view text);

  const std::vector<BraidToken>& tokens() const { return tokens_; }
  bool has_projection() const;
  std::string to_string() const;

 private:
  std::vector<BraidToken> tokens_;
};

class GeneratorSet {
 public:
  GeneratorSet(int arity, Pairing pairing, TemplateVariant variant = TemplateVariant::corrected);

  int arity() const { return arity_; }
  int dimension() const { return arity_ == 1 ? 2 : 8; }
  int count() const { return static_cast<int>(sigma_.size()); }
  Pairing pairing() const { return pairing_; }
  const ExactMatrix& generator(int index) const;
  // Throws NotInvertible for negative powers of a generator with no exact inverse.
  ExactMatrix power(int index, int exponent) const;

 private:
  int arity_;
  Pairing pairing_;
  std::vector<ExactMatrix> sigma_;
};

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pure evaluation; throws std::invalid_argument on a projection marker or a bad index.
ExactMatrix evaluate(const BraidWord& word, const GeneratorSet& gens);
// Evaluation with each marker replaced by the given projector.
ExactMatrix evaluate_projected(const BraidWord& word, const GeneratorSet& gens, const ExactMatrix& projector);

struct RelationCheck {
  int i = 0;
  int j = 0;
  bool holds = false;
};

struct BraidRelationReport {
  int arity = 1;
  Pairing pairing;
  std::vector<bool> unitary;  // per generator
  std::vector<RelationCheck> adjacent;
  std::vector<RelationCheck> far;

  bool all_unitary() const;
  bool all_adjacent() const;
  bool all_far() const;
};

BraidRelationReport verify_braid_relations(int arity, Pairing pairing,
                                           TemplateVariant variant = TemplateVariant::corrected);

// Unitary 2x2 whose eigenvalues are {1, i} up to one common phase:
// exactly when trace^2 == 2 det.
bool has_ising_spectrum(const ExactMatrix& m);

}  // namespace qd
