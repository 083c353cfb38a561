#pragma once

#include <functional>
#include <span>
#include <vector>

#include "amalgenus/group.hpp"

namespace amalgenus {

/// Extends generator images to a homomorphism source -> target by walking the
/// right Cayley graph of <gens>. Returns the map on <gens> (entries outside
/// the generated subgroup are -1), or nothing if the images violate a
/// relation.
std::optional<std::vector<Element>> extend_to_hom(const FiniteGroup& source,
                                                  const FiniteGroup& target,
                                                  std::span<const Element> gens,
                                                  std::span<const Element> images);

/// Depth-first search over generator images.
///
/// The search assigns images to `generators` in order. After each assignment
/// the partial map on the subgroup generated so far is extended and checked,
/// so inconsistent prefixes are cut immediately. Every candidate tried counts
/// as one node against the budget; exceeding it throws kBudgetExceeded.
class HomSearch {
 public:
  /// Called with a partial map (-1 = undefined). Returning false prunes.
  using PartialCheck = std::function<bool(std::span<const Element>)>;
  /// Called with each complete homomorphism. Returning false stops the search.
  using Visitor = std::function<bool(std::span<const Element>)>;

  HomSearch(const FiniteGroup& source, const FiniteGroup& target,
            std::vector<Element> generators, std::uint64_t budget);

  /// Restrict the images tried for generator i (default: every target
  /// element whose order divides, or equals when injective).
  void set_candidates(std::size_t i, std::vector<Element> candidates);
  void require_injective(bool on) { injective_ = on; }
  void set_partial_check(PartialCheck check) { partial_check_ = std::move(check); }

  /// Runs the search; returns the number of nodes visited.
  std::uint64_t run(const Visitor& visit);

  std::span<const Element> generators() const { return generators_; }

 private:
  bool descend(std::size_t depth, const Visitor& visit);

  const FiniteGroup& source_;
  const FiniteGroup& target_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<bool> custom_;
  std::vector<Element> images_;
  bool injective_ = false;
  PartialCheck partial_check_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace amalgenus
