#include "qd/group.hpp"

#include <stdexcept>

namespace qd {
namespace {

using G = GroupElement;

// Row a, column b holds a*b.
constexpr std::array<std::array<G, 8>, 8> kCayley = {{
    {G::e, G::eb, G::i, G::ib, G::j, G::jb, G::k, G::kb},
    {G::eb, G::e, G::ib, G::i, G::jb, G::j, G::kb, G::k},
    {G::i, G::ib, G::eb, G::e, G::k, G::kb, G::jb, G::j},
    {G::ib, G::i, G::e, G::eb, G::kb, G::k, G::j, G::jb},
    {G::j, G::jb, G::kb, G::k, G::eb, G::e, G::i, G::ib},
    {G::jb, G::j, G::k, G::kb, G::e, G::eb, G::ib, G::i},
    {G::k, G::kb, G::j, G::jb, G::ib, G::i, G::eb, G::e},
    {G::kb, G::k, G::jb, G::j, G::i, G::ib, G::e, G::eb},
}};

constexpr std::array<std::string_view, 8> kElementNames = {"e", "eb", "i", "ib", "j", "jb", "k", "kb"};
constexpr std::array<std::string_view, 5> kClassNames = {"C_e", "C_eb", "C_i", "C_j", "C_k"};

G representative(ClassLabel c) {
  switch (c) {
    case ClassLabel::e: return G::e;
    case ClassLabel::eb: return G::eb;
    case ClassLabel::i: return G::i;
    case ClassLabel::j: return G::j;
    case ClassLabel::k: return G::k;
  }
  throw std::logic_error("bad class label");
}

G negate(G g) { return multiply(G::eb, g); }

// Classes whose centralizer is Z4 rather than all of Q8.
bool is_cyclic(ClassLabel c) { return c != ClassLabel::e && c != ClassLabel::eb; }

ExactMatrix scalar1(const ExactScalar& s) { return ExactMatrix(1, 1, {s}); }

}  // namespace

GroupElement multiply(GroupElement a, GroupElement b) {
  return kCayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

GroupElement inverse(GroupElement g) {
  for (G h : kAllElements)
    if (multiply(g, h) == G::e) return h;
  throw std::logic_error("element without inverse");
}

GroupElement conjugate(GroupElement g, GroupElement h) { return multiply(multiply(g, h), inverse(g)); }

std::string_view name(GroupElement g) { return kElementNames[static_cast<std::size_t>(g)]; }
std::string_view name(ClassLabel c) { return kClassNames[static_cast<std::size_t>(c)]; }

ConjugacyClass conjugacy_class(ClassLabel c) {
  G r = representative(c);
  ConjugacyClass cls{c, r, {r}};
  for (G g : kAllElements) {
    G h = conjugate(g, r);
    bool seen = false;
    for (G m : cls.members) seen = seen || m == h;
    if (!seen) cls.members.push_back(h);
  }
  return cls;
}

ConjugacyClass conjugacy_class_of(GroupElement g) {
  for (ClassLabel c : kAllClasses) {
    auto cls = conjugacy_class(c);
    for (G m : cls.members)
      if (m == g) return cls;
  }
  throw std::logic_error("element outside every class");
}

std::vector<GroupElement> centralizer(ClassLabel c) {
  G r = representative(c);
  std::vector<G> out;
  for (G g : kAllElements)
    if (multiply(g, r) == multiply(r, g)) out.push_back(g);
  return out;
}

GroupElement section_element(ClassLabel c, GroupElement member, Section s) {
  G r = representative(c);
  std::vector<G> hits;
  for (G g : kAllElements)
    if (conjugate(g, r) == member) hits.push_back(g);
  if (hits.empty()) throw std::invalid_argument("element is not a member of the class");
  return s == Section::first ? hits.front() : hits.back();
}

Irrep::Irrep(ClassLabel owner, int index) : owner_(owner), index_(index) {
  if (!is_cyclic(owner)) {
    domain_ = IrrepDomain::quaternion;
    if (index < 0 || index > 4) throw std::invalid_argument("Q8 irrep index out of range");
    dimension_ = index == 4 ? 2 : 1;
    if (index == 0) {
      for (G g : kAllElements) images_[static_cast<std::size_t>(g)] = scalar1(1);
    } else if (index <= 3) {
      // Trivial on {±1, ±x}, sign elsewhere; x = i, j, k for index 1, 2, 3.
      G x = std::array{G::i, G::j, G::k}[static_cast<std::size_t>(index - 1)];
      for (G g : kAllElements) {
        bool kernel = g == G::e || g == G::eb || g == x || g == negate(x);
        images_[static_cast<std::size_t>(g)] = scalar1(kernel ? 1 : -1);
      }
    } else {
      const ExactScalar im = ExactScalar::imag_unit();
      ExactMatrix one = ExactMatrix::identity(2);
      ExactMatrix qi(2, 2, {im, 0, 0, -im});
      ExactMatrix qj(2, 2, {0, 1, -1, 0});
      ExactMatrix qk = qi * qj;
      const std::array<std::pair<G, ExactMatrix>, 4> base = {{{G::e, one}, {G::i, qi}, {G::j, qj}, {G::k, qk}}};
      for (const auto& [g, m] : base) {
        images_[static_cast<std::size_t>(g)] = m;
        images_[static_cast<std::size_t>(negate(g))] = m.scaled(-1);
      }
    }
  } else {
    domain_ = IrrepDomain::cyclic4;
    if (index < 0 || index > 3) throw std::invalid_argument("Z4 irrep index out of range");
    dimension_ = 1;
    G x = representative(owner);
    G power = G::e;
    for (int p = 0; p < 4; ++p) {
      images_[static_cast<std::size_t>(power)] = scalar1(ExactScalar::zeta(2 * index * p));
      power = multiply(power, x);
    }
  }
}

bool Irrep::defined_on(GroupElement g) const {
  if (domain_ == IrrepDomain::quaternion) return true;
  for (G h : centralizer(owner_))
    if (h == g) return true;
  return false;
}

const ExactMatrix& Irrep::image(GroupElement g) const {
  if (!defined_on(g)) throw std::invalid_argument("irrep evaluated outside its centralizer");
  return images_[static_cast<std::size_t>(g)];
}

std::vector<Irrep> irreps(ClassLabel c) {
  std::vector<Irrep> out;
  int n = is_cyclic(c) ? 4 : 5;
  for (int a = 0; a < n; ++a) out.emplace_back(c, a);
  return out;
}

}  // namespace qd
