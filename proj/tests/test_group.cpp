#include <array>
#include <set>

#include "doctest.h"
#include "qd/group.hpp"

using namespace qd;

namespace {

// Independent oracle: Hamilton product on (w, x, y, z) quaternions.
using Quat = std::array<int, 4>;

Quat hamilton(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat as_quat(GroupElement g) {
  const int s = index_of(g) % 2 == 0 ? 1 : -1;
  Quat q{};
  q[static_cast<std::size_t>(index_of(g) / 2)] = s;
  return q;
}

}  // namespace

TEST_CASE("Cayley table matches quaternion multiplication") {
  for (GroupElement a : kAllElements)
    for (GroupElement b : kAllElements) CHECK(as_quat(multiply(a, b)) == hamilton(as_quat(a), as_quat(b)));
}

TEST_CASE("group axioms") {
  for (GroupElement a : kAllElements) {
    CHECK(multiply(a, inverse(a)) == GroupElement::e);
    CHECK(multiply(GroupElement::e, a) == a);
    for (GroupElement b : kAllElements)
      for (GroupElement c : kAllElements) CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("conjugacy classes and centralizers") {
  std::size_t covered = 0;
  for (ClassLabel c : kAllClasses) {
    const auto cls = conjugacy_class(c);
    CHECK(cls.members.front() == cls.representative);
    covered += cls.members.size();
    // Orbit-stabilizer.
    CHECK(cls.members.size() * centralizer(c).size() == 8);
    for (GroupElement m : cls.members) {
      CHECK(conjugacy_class_of(m).label == c);
      for (Section s : {Section::first, Section::last})
        CHECK(conjugate(section_element(c, m, s), cls.representative) == m);
    }
  }
  CHECK(covered == 8);
  CHECK(conjugacy_class(ClassLabel::i).members.size() == 2);
  CHECK(centralizer(ClassLabel::e).size() == 8);
}

TEST_CASE("irreps are homomorphisms with orthogonal characters") {
  for (ClassLabel c : kAllClasses) {
    const auto reps = irreps(c);
    const auto cent = centralizer(c);
    int dim_squares = 0;
    for (const Irrep& r : reps) {
      dim_squares += r.dimension() * r.dimension();
      for (GroupElement g : cent)
        for (GroupElement h : cent) CHECK(r.image(g) * r.image(h) == r.image(multiply(g, h)));
    }
    CHECK(dim_squares == static_cast<int>(cent.size()));
    for (const Irrep& a : reps)
      for (const Irrep& b : reps) {
        ExactScalar sum;
        for (GroupElement g : cent) sum += a.character(g) * b.character(g).conj();
        CHECK(sum == ExactScalar(a.index() == b.index() ? static_cast<std::int64_t>(cent.size()) : 0));
      }
  }
}

TEST_CASE("two-dimensional irrep of Q8") {
  const Irrep delta(ClassLabel::e, 4);
  CHECK(delta.dimension() == 2);
  CHECK(delta.character(GroupElement::eb) == ExactScalar(-2));
  CHECK(delta.character(GroupElement::j) == ExactScalar(0));
  CHECK(delta.image(GroupElement::i).is_unitary());
}
