#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgenus/group.hpp"

namespace amalgenus {

GroupPtr cyclic_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string label = {});
/// Symmetries of the n-gon, order 2n, generated by (0 1 ... n-1) and i -> 2-i.
GroupPtr dihedral_group(int n, std::string label = {});
/// Order 4m: <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>.
GroupPtr dicyclic_group(int m, std::string label = {});
/// C_m x| C_n with b a b^-1 = a^k; needs k^n = 1 mod m.
GroupPtr semidirect_cyclic(int m, int n, int k, std::string label = {});
GroupPtr symmetric_group(int degree);
GroupPtr alternating_group(int degree);
/// Invertible n x n matrices over F_p, indexed in lexicographic order of
/// their row-major entries. `special` restricts to determinant 1.
GroupPtr general_linear_group(int n, int p, bool special = false, std::string label = {});
/// Same elements, product a.b := b a.
GroupPtr opposite_group(const GroupPtr& g, std::string label = {});

/// Element index of a matrix (row-major entries) in general_linear_group(n, p).
Element matrix_element(int n, int p, const std::vector<int>& entries, bool special = false);
/// Element index of a permutation in a group built from permutations.
Element permutation_element(const FiniteGroup& g, const Permutation& p);

struct CatalogEntry {
  std::string name;
  GroupPtr group;
  std::map<std::string, Subgroup> subgroups;
};

/// The 24 groups of order at most 12, one per isomorphism type.
std::vector<CatalogEntry> small_catalog();

/// A wider list of groups of order at most 24.
std::vector<CatalogEntry> extended_catalog();

/// Names understood by builtin_group, sorted.
std::vector<std::string> builtin_names();

/// Looks up a catalog group by name, including the named example groups
/// D8 (with klein, klein2, c4, center), S3, GL2F2 (borel_upper) and
/// GL2F2op (borel_lower).
std::optional<CatalogEntry> builtin_group(std::string_view name);

}  // namespace amalgenus
