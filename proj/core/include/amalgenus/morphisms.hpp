#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "amalgenus/group.hpp"

namespace amalgenus {

enum class MorphismKind { kHom, kInjection, kAutomorphism };

/// A homomorphism recorded element by element.
struct Morphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> map;
  MorphismKind kind = MorphismKind::kHom;

  /// Validates the full homomorphism table and the kind-specific property.
  static Morphism make(GroupPtr source, GroupPtr target, std::vector<Element> map,
                       MorphismKind kind);

  Element operator()(Element x) const { return map[static_cast<std::size_t>(x)]; }
  ElementSet image() const;
};

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Element> map);

/// outer . inner
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Inverse of a bijective morphism.
Morphism inverse(const Morphism& iso);

/// Every injective homomorphism H -> G, sorted by map table.
std::vector<Morphism> enumerate_injections(const GroupPtr& h, const GroupPtr& g,
                                           const Limits& limits = {});

/// Aut(G) with its composition table and the inner automorphisms.
struct AutGroup {
  GroupPtr base;
  /// Automorphism map tables in lexicographic order; index 0 is not
  /// necessarily the identity map, see `identity_index`.
  std::vector<std::vector<Element>> maps;
  /// group->mul(a, b) is the index of maps[a] . maps[b].
  GroupPtr group;
  Subgroup inn;

  std::size_t order() const { return maps.size(); }
  Element identity_index() const { return group->identity(); }
  /// Index of an automorphism map table, or -1.
  Element find(const std::vector<Element>& map) const;
  /// Index of the inner automorphism x -> g x g^-1.
  Element inner(Element g) const;

  std::map<std::vector<Element>, Element> index;
};

using AutPtr = std::shared_ptr<const AutGroup>;

/// Builds the AutGroup from a complete, composition-closed set of maps.
AutPtr aut_from_maps(const GroupPtr& base, std::vector<std::vector<Element>> maps,
                     const Limits& limits = {});

/// Aut(G) by generator-image search with order matching.
AutPtr compute_aut(const GroupPtr& group, const Limits& limits = {});

/// Out(H) = Aut(H)/Inn(H). Coset representatives are the minimal
/// automorphism index in each coset, i.e. the lexicographically smallest map.
struct OutQuotient {
  AutPtr aut;
  std::vector<Element> coset_reps;  // out index -> aut index
  GroupPtr group;                   // quotient on out indices
  std::vector<Element> projection;  // aut index -> out index

  std::size_t order() const { return coset_reps.size(); }
  Element project(Element aut_index) const {
    return projection[static_cast<std::size_t>(aut_index)];
  }
  const std::vector<Element>& rep_map(Element out_index) const {
    return aut->maps[static_cast<std::size_t>(coset_reps[static_cast<std::size_t>(out_index)])];
  }
  /// Image of a subgroup of Aut(H) in Out(H).
  Subgroup image_of(const Subgroup& in_aut) const;
  /// Out index of an arbitrary automorphism map table; -1 if not an automorphism.
  Element find_map(const std::vector<Element>& map) const;
};

using OutPtr = std::shared_ptr<const OutQuotient>;

OutPtr out_quotient(const AutPtr& aut_h);

/// Restrictions to H of the automorphisms of G preserving H.
///
/// H is given abstractly through an embedding into G; images in Aut(H) are
/// pulled back through that embedding, so two embeddings of the same H into
/// different groups land in the same Aut(H).
struct RestrictionImage {
  GroupPtr ambient;
  Morphism embedding;
  Subgroup subgroup;             // image of the embedding in the ambient group
  std::vector<Element> aut_stab; // indices into Aut(G) preserving the subgroup
  Subgroup bar_image;            // in Aut(H)
  Subgroup tilde_image;          // in Out(H)
  Subgroup bar_normalizer;       // conjugations by N_G(H), restricted
  Subgroup tilde_normalizer;
};

RestrictionImage restriction_image(const GroupPtr& g, const Morphism& embedding,
                                   const AutGroup& aut_g, const OutPtr& out_h);

/// Same, with H identified with the induced group of `h`. `out_h` must be
/// computed for induced_group(h).
RestrictionImage restriction_image(const GroupPtr& g, const Subgroup& h, const AutGroup& aut_g,
                                   const OutPtr& out_h);

/// The inclusion of induced_group(s) into the parent.
Morphism inclusion(const Subgroup& s, const GroupPtr& induced);

/// Some isomorphism gamma: G1 -> G2 with gamma(H1) = H2.
std::optional<Morphism> find_subgroup_preserving_iso(const GroupPtr& g1, const Subgroup& h1,
                                                     const GroupPtr& g2, const Subgroup& h2,
                                                     const Limits& limits = {});

std::optional<Morphism> find_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                                         const Limits& limits = {});

/// The lexicographically smallest isomorphism from `h` onto the subgroup
/// `target` of `g`, as an injection h -> g.
std::optional<Morphism> canonical_embedding_onto(const GroupPtr& h, const GroupPtr& g,
                                                 const Subgroup& target,
                                                 const Limits& limits = {});

}  // namespace amalgenus
