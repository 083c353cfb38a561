#pragma once

// Slow, independent reference computations. Nothing here calls the search
// code in amalgenus; only the group tables are shared.

#include <cstddef>
#include <vector>

#include "amalgenus/group.hpp"

namespace brute {

using amalgenus::Element;
using amalgenus::ElementSet;
using amalgenus::FiniteGroup;
using Map = std::vector<Element>;

bool is_hom(const FiniteGroup& src, const FiniteGroup& dst, const Map& m);

/// Every subset containing the identity that is closed under products.
/// Fine up to order 16.
std::vector<ElementSet> subgroups(const FiniteGroup& g);

/// All bijections fixing the identity, filtered by the homomorphism law.
/// Order at most 10.
std::vector<Map> automorphisms(const FiniteGroup& g);

/// All injective maps H -> G checked on the whole table.
std::vector<Map> injections(const FiniteGroup& h, const FiniteGroup& g);

/// Orbits of an explicit group of permutations of 0..n-1 by breadth-first
/// closure from each unseen point.
std::size_t orbit_count(std::size_t n, const std::vector<std::vector<int>>& acting);

/// A \ S / B counted by collecting the set A x B for every x in S.
std::size_t double_coset_count(const FiniteGroup& g, const ElementSet& a, const ElementSet& carrier,
                               const ElementSet& b);

/// Push-out classes by brute force: orbits of the full groups Aut(G1),
/// Aut(G2), Aut(H) (and the swap through `phi` when given) on the explicit
/// set Inj(H,G1) x Inj(H,G2).
std::size_t pushout_orbits(const FiniteGroup& h, const FiniteGroup& g1, const FiniteGroup& g2,
                           const Map* phi);

}  // namespace brute
