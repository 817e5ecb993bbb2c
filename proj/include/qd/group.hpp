#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qd/exact.hpp"

namespace qd {

// Quaternion units; the "b" suffix is the negated element (e.g. ib = -i).
enum class GroupElement : std::uint8_t { e, eb, i, ib, j, jb, k, kb };

inline constexpr int kGroupOrder = 8;
inline constexpr std::array<GroupElement, 8> kAllElements = {
    GroupElement::e, GroupElement::eb, GroupElement::i, GroupElement::ib,
    GroupElement::j, GroupElement::jb, GroupElement::k, GroupElement::kb};

constexpr int index_of(GroupElement g) { return static_cast<int>(g); }

GroupElement multiply(GroupElement a, GroupElement b);
GroupElement inverse(GroupElement g);
GroupElement conjugate(GroupElement g, GroupElement h);  // g h g^-1
std::string_view name(GroupElement g);

enum class ClassLabel : std::uint8_t { e, eb, i, j, k };
inline constexpr std::array<ClassLabel, 5> kAllClasses = {ClassLabel::e, ClassLabel::eb, ClassLabel::i,
                                                          ClassLabel::j, ClassLabel::k};

struct ConjugacyClass {
  ClassLabel label;
  GroupElement representative;
  std::vector<GroupElement> members;  // representative first
};

ConjugacyClass conjugacy_class(ClassLabel c);
ConjugacyClass conjugacy_class_of(GroupElement g);
std::vector<GroupElement> centralizer(ClassLabel c);
std::string_view name(ClassLabel c);

// How to pick g with g r g^-1 = h among the valid candidates.
enum class Section : std::uint8_t { first, last };

// The coset representative x_h with x_h * rep * x_h^-1 = h.
GroupElement section_element(ClassLabel c, GroupElement member, Section s);

enum class IrrepDomain : std::uint8_t { quaternion, cyclic4 };

// An irrep of Q8 (index 0..4) or of a Z4 centralizer (index 0..3), with
// exact image matrices. For cyclic4, images are defined on the centralizer only.
class Irrep {
 public:
  Irrep(ClassLabel owner, int index);

  ClassLabel owner() const { return owner_; }
  IrrepDomain domain() const { return domain_; }
  int index() const { return index_; }
  int dimension() const { return dimension_; }
  bool defined_on(GroupElement g) const;
  const ExactMatrix& image(GroupElement g) const;
  ExactScalar character(GroupElement g) const { return image(g).trace(); }

 private:
  ClassLabel owner_;
  IrrepDomain domain_;
  int index_;
  int dimension_;
  std::array<ExactMatrix, 8> images_;
};

// Irreps of the centralizer of c, in label order.
std::vector<Irrep> irreps(ClassLabel c);

}  // namespace qd
