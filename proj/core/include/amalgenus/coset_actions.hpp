#pragma once

#include <span>
#include <utility>
#include <vector>

#include "amalgenus/group.hpp"

namespace amalgenus {

struct DoubleCoset {
  Element rep;  // minimal element of the class
  ElementSet members;
};

/// Partition of a carrier S into classes A x B.
struct DoubleCosetDecomposition {
  GroupPtr ambient;
  Subgroup left;
  Subgroup right;
  ElementSet carrier;
  std::vector<DoubleCoset> classes;  // sorted by rep
  std::vector<int> class_of;         // ambient element -> class, -1 outside the carrier

  std::size_t count() const { return classes.size(); }
};

/// Throws kCarrierNotClosed if A S B != S.
DoubleCosetDecomposition double_cosets(const GroupPtr& ambient, const Subgroup& left,
                                       const Subgroup& right, const ElementSet& carrier);

DoubleCosetDecomposition double_cosets(const GroupPtr& ambient, const Subgroup& left,
                                       const Subgroup& right);

/// { a x b : a in A, x in X, b in B } as a sorted set.
ElementSet product_set(const FiniteGroup& g, std::span<const Element> a, std::span<const Element> x,
                       std::span<const Element> b);
ElementSet subset_inverse(const FiniteGroup& g, std::span<const Element> x);
/// xi X^-1 xi.
ElementSet twist_inverse(const FiniteGroup& g, Element xi, std::span<const Element> x);
ElementSet set_union(std::span<const Element> a, std::span<const Element> b);

/// The coset action alpha -> xi alpha^-1 xi, lifted to double cosets.
struct TwistedInvolution {
  GroupPtr ambient;
  Element xi;

  Element apply(Element alpha) const { return ambient->mul(ambient->mul(xi, ambient->inv(alpha)), xi); }
};

struct C2Orbits {
  std::size_t count = 0;
  std::vector<int> image;                  // class -> class
  std::vector<int> fixed;                  // classes mapped to themselves
  std::vector<std::pair<int, int>> pairs;  // (smaller, larger) swapped classes
};

/// Throws kActionNotClosed, kActionNotWellDefined or kNotInvolution.
C2Orbits c2_orbits(const DoubleCosetDecomposition& decomp, const TwistedInvolution& tw);

struct OrbitPartition {
  std::vector<int> orbit_of;             // point -> orbit
  std::vector<std::vector<int>> orbits;  // sorted members, orbits ordered by least member

  std::size_t count() const { return orbits.size(); }
};

/// Orbits of the group generated by `actors`, each a permutation of
/// 0..size-1 given as an image list. Throws kNotBijective.
OrbitPartition generic_orbits(std::size_t size, const std::vector<std::vector<int>>& actors);

}  // namespace amalgenus
