#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amalgenus/error.hpp"

namespace amalgenus {

/// Dense index of a group element, 0..order-1.
using Element = std::int32_t;

/// A sorted, duplicate-free set of element indices.
using ElementSet = std::vector<Element>;

/// A permutation of 0..d-1 as its image list: p[i] is the image of i.
using Permutation = std::vector<int>;

/// A finite group stored as its full multiplication table.
///
/// Instances are immutable once built and are shared through `GroupPtr`.
/// Every constructor verifies the group axioms; inverses and the identity
/// are derived from the table rather than trusted.
class FiniteGroup {
 public:
  /// Validates a raw Cayley table. Associativity is checked by the full
  /// triple loop for n <= 128 and by Light's test over a generating set above.
  static std::shared_ptr<const FiniteGroup> from_table(
      const std::vector<std::vector<std::int64_t>>& rows, std::string label = {},
      const Limits& limits = {});

  /// Closure of a set of permutations under composition, (a*b)(i) = a[b[i]].
  /// Elements are indexed in lexicographic order of their image lists, so
  /// the identity permutation is always element 0.
  static std::shared_ptr<const FiniteGroup> from_permutations(
      const std::vector<Permutation>& gens, std::size_t degree = 0,
      std::string label = {}, const Limits& limits = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
  }
  Element inv(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g x g^-1.
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  Element power(Element a, std::int64_t k) const;

  int element_order(Element a) const { return orders_[static_cast<std::size_t>(a)]; }
  int exponent() const;
  bool is_abelian() const { return abelian_; }

  /// A small generating set: greedily picks elements of maximal order that
  /// are not yet in the span of the previous picks.
  std::span<const Element> generators() const { return generators_; }

  const std::string& label() const { return label_; }
  const std::vector<Permutation>& perm_gens() const { return perm_gens_; }
  /// Permutation image of each element when built from permutations.
  const std::vector<Permutation>& perm_elements() const { return perm_elements_; }

  std::vector<std::vector<Element>> table_rows() const;
  bool same_table(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  FiniteGroup() = default;
  void finish(bool check_associativity_fully);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<int> orders_;
  std::vector<Element> generators_;
  Element identity_ = 0;
  bool abelian_ = true;
  std::string label_;
  std::vector<Permutation> perm_gens_;
  std::vector<Permutation> perm_elements_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Builds a group from raw table data; see FiniteGroup::from_table.
GroupPtr validate_group(const std::vector<std::vector<std::int64_t>>& rows,
                        std::string label = {}, const Limits& limits = {});

GroupPtr group_from_permutations(const std::vector<Permutation>& gens,
                                 std::size_t degree = 0, std::string label = {},
                                 const Limits& limits = {});

/// A subgroup of a parent group, stored as its sorted element set.
class Subgroup {
 public:
  /// Validates membership and closure; throws kSubgroupNotInParent or
  /// kInvalidInput.
  static Subgroup from_elements(GroupPtr parent, ElementSet elements);

  /// Unchecked construction for callers that produced a closed set.
  Subgroup(GroupPtr parent, ElementSet sorted_elements);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const ElementSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element x) const { return mask_[static_cast<std::size_t>(x)] != 0; }
  /// Position of `x` inside elements(), or -1.
  int index_of(Element x) const { return position_[static_cast<std::size_t>(x)]; }
  bool is_subset_of(const Subgroup& other) const;

  /// Canonical key order: size, then lexicographic element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b);
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  ElementSet elements_;
  std::vector<std::uint8_t> mask_;
  std::vector<int> position_;
};

struct SubgroupList {
  GroupPtr parent;
  std::vector<Subgroup> subgroups;  // sorted by canonical key, no duplicates

  std::size_t size() const { return subgroups.size(); }
  /// Index of the subgroup with exactly these elements, or -1.
  int find(const ElementSet& elements) const;
};

Subgroup whole_group(const GroupPtr& group);
Subgroup trivial_subgroup(const GroupPtr& group);

/// Smallest subgroup of G containing `seed`.
Subgroup subgroup_generated(const GroupPtr& group, std::span<const Element> seed);

/// {g : g H g^-1 = H}.
Subgroup normalizer(const GroupPtr& group, const Subgroup& h);
/// {g : g h = h g for all h in H}.
Subgroup centralizer(const GroupPtr& group, const Subgroup& h);
Subgroup center(const GroupPtr& group);

/// g S g^-1 as a subgroup.
Subgroup conjugate_subgroup(const Subgroup& s, Element g);

/// H is a direct factor of K iff some C <= K centralizes H, meets it
/// trivially, and |C||H| = |K|. Returns such a C.
std::optional<Subgroup> is_direct_factor(const Subgroup& k, const Subgroup& h,
                                         const Limits& limits = {});

/// True iff some homomorphism G -> H restricts to the identity on H.
bool is_retract(const GroupPtr& group, const Subgroup& h, const Limits& limits = {});

/// All subgroups, by cyclic seeding followed by join closure.
SubgroupList enumerate_subgroups(const GroupPtr& group, const Limits& limits = {});

/// Subgroups of the parent group that lie inside `within`.
SubgroupList enumerate_subgroups_within(const Subgroup& within, const Limits& limits = {});

/// A greedy generating set of `s`, extending `prefix` (which must lie in s).
std::vector<Element> subgroup_generators(const Subgroup& s,
                                         std::span<const Element> prefix = {});

/// The subgroup as a group in its own right. Element i of the result is
/// s.elements()[i] of the parent.
GroupPtr induced_group(const Subgroup& s, std::string label = {});

void throw_if_not_in(const Subgroup& s, const GroupPtr& group, std::string_view what);

}  // namespace amalgenus
