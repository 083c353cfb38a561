#include "amalgenus/morphisms.hpp"

#include <algorithm>
#include <set>

#include "amalgenus/hom_search.hpp"

namespace amalgenus {

namespace {

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> p(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) p[x] = g.element_order(static_cast<Element>(x));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Element> map) {
  if (map.size() != source.order()) return false;
  for (Element v : map)
    if (v < 0 || static_cast<std::size_t>(v) >= target.order()) return false;
  const auto n = static_cast<Element>(source.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map[static_cast<std::size_t>(source.mul(x, y))] !=
          target.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

Morphism Morphism::make(GroupPtr source, GroupPtr target, std::vector<Element> map,
                        MorphismKind kind) {
  if (!source || !target) fail(ErrorKind::kInvalidInput, "morphism needs source and target");
  if (!is_homomorphism(*source, *target, map))
    fail(ErrorKind::kInvalidInput, "map is not a homomorphism");
  if (kind != MorphismKind::kHom) {
    std::vector<std::uint8_t> hit(target->order(), 0);
    for (Element v : map)
      if (hit[static_cast<std::size_t>(v)]++) fail(ErrorKind::kNotBijective, "map is not injective");
  }
  if (kind == MorphismKind::kAutomorphism && source->order() != target->order())
    fail(ErrorKind::kNotBijective, "automorphism must be a bijection");
  return Morphism{std::move(source), std::move(target), std::move(map), kind};
}

ElementSet Morphism::image() const {
  ElementSet out(map.begin(), map.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  check_invariant(inner.target->order() == outer.source->order(), "compose: shape mismatch");
  std::vector<Element> m(inner.map.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = outer(inner.map[x]);
  MorphismKind kind = MorphismKind::kHom;
  if (inner.kind != MorphismKind::kHom && outer.kind != MorphismKind::kHom)
    kind = inner.source == outer.target ? MorphismKind::kAutomorphism : MorphismKind::kInjection;
  return Morphism{inner.source, outer.target, std::move(m), kind};
}

Morphism inverse(const Morphism& iso) {
  check_invariant(iso.source->order() == iso.target->order() && iso.kind != MorphismKind::kHom,
                  "inverse of a non-bijection");
  std::vector<Element> m(iso.map.size(), -1);
  for (std::size_t x = 0; x < m.size(); ++x) m[static_cast<std::size_t>(iso.map[x])] = static_cast<Element>(x);
  return Morphism{iso.target, iso.source, std::move(m), iso.kind};
}

std::vector<Morphism> enumerate_injections(const GroupPtr& h, const GroupPtr& g,
                                           const Limits& limits) {
  std::vector<std::vector<Element>> maps;
  if (h->order() <= g->order()) {
    std::vector<Element> gens(h->generators().begin(), h->generators().end());
    HomSearch search(*h, *g, gens, limits.search_budget);
    search.require_injective(true);
    search.run([&](std::span<const Element> m) {
      maps.emplace_back(m.begin(), m.end());
      return true;
    });
  }
  std::sort(maps.begin(), maps.end());
  std::vector<Morphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(Morphism{h, g, std::move(m), MorphismKind::kInjection});
  return out;
}

Element AutGroup::find(const std::vector<Element>& map) const {
  auto it = index.find(map);
  return it == index.end() ? -1 : it->second;
}

Element AutGroup::inner(Element g) const {
  std::vector<Element> m(base->order());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = base->conjugate(g, static_cast<Element>(x));
  return find(m);
}

AutPtr aut_from_maps(const GroupPtr& base, std::vector<std::vector<Element>> maps,
                     const Limits& limits) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  if (maps.size() > limits.max_order)
    fail(ErrorKind::kSizeExceeded,
         "automorphism group of order " + std::to_string(maps.size()) + " exceeds the bound");
  std::map<std::vector<Element>, Element> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index.emplace(maps[i], static_cast<Element>(i));

  const std::size_t n = maps.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  std::vector<Element> c(base->order());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = maps[a][static_cast<std::size_t>(maps[b][x])];
      auto it = index.find(c);
      if (it == index.end()) fail(ErrorKind::kInvalidInput, "automorphism set is not closed");
      rows[a][b] = it->second;
    }
  }
  auto group = FiniteGroup::from_table(rows, "Aut(" + base->label() + ")", limits);

  ElementSet inn;
  std::vector<Element> m(base->order());
  for (std::size_t g = 0; g < base->order(); ++g) {
    for (std::size_t x = 0; x < m.size(); ++x)
      m[x] = base->conjugate(static_cast<Element>(g), static_cast<Element>(x));
    auto it = index.find(m);
    if (it == index.end()) fail(ErrorKind::kInvalidInput, "automorphism set misses an inner automorphism");
    inn.push_back(it->second);
  }
  std::sort(inn.begin(), inn.end());
  inn.erase(std::unique(inn.begin(), inn.end()), inn.end());

  auto aut = std::make_shared<AutGroup>(AutGroup{base, std::move(maps), group,
                                                 Subgroup(group, std::move(inn)), std::move(index)});
  return aut;
}

AutPtr compute_aut(const GroupPtr& group, const Limits& limits) {
  std::vector<std::vector<Element>> maps;
  std::vector<Element> gens(group->generators().begin(), group->generators().end());
  HomSearch search(*group, *group, gens, limits.search_budget);
  search.require_injective(true);
  search.run([&](std::span<const Element> m) {
    maps.emplace_back(m.begin(), m.end());
    return true;
  });
  return aut_from_maps(group, std::move(maps), limits);
}

Subgroup OutQuotient::image_of(const Subgroup& in_aut) const {
  ElementSet out;
  for (Element a : in_aut.elements()) out.push_back(project(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Subgroup(group, std::move(out));
}

Element OutQuotient::find_map(const std::vector<Element>& map) const {
  Element a = aut->find(map);
  return a < 0 ? -1 : project(a);
}

OutPtr out_quotient(const AutPtr& aut_h) {
  const auto& ag = *aut_h->group;
  const std::size_t n = ag.order();
  std::vector<Element> projection(n, -1);
  std::vector<Element> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (projection[a] >= 0) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(a));
    for (Element i : aut_h->inn.elements()) projection[static_cast<std::size_t>(ag.mul(static_cast<Element>(a), i))] = id;
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<std::int64_t>> rows(q, std::vector<std::int64_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      rows[i][j] = projection[static_cast<std::size_t>(ag.mul(reps[i], reps[j]))];
  auto group = FiniteGroup::from_table(rows, "Out(" + aut_h->base->label() + ")");
  return std::make_shared<OutQuotient>(OutQuotient{aut_h, std::move(reps), group, std::move(projection)});
}

Morphism inclusion(const Subgroup& s, const GroupPtr& induced) {
  check_invariant(induced->order() == s.size(), "inclusion: induced group does not match");
  return Morphism{induced, s.parent_ptr(), s.elements(), MorphismKind::kInjection};
}

RestrictionImage restriction_image(const GroupPtr& g, const Morphism& embedding,
                                   const AutGroup& aut_g, const OutPtr& out_h) {
  if (embedding.target.get() != g.get() && !embedding.target->same_table(*g))
    fail(ErrorKind::kSubgroupNotInParent, "embedding does not land in the ambient group");
  const auto& aut_h = *out_h->aut;
  if (aut_h.base->order() != embedding.source->order())
    fail(ErrorKind::kIncompatibleShapes, "Out(H) was computed for a different H");
  Subgroup sub(g, embedding.image());
  const auto& h = *embedding.source;

  std::vector<Element> pull(g->order(), -1);  // ambient element -> H element
  for (std::size_t x = 0; x < h.order(); ++x) pull[static_cast<std::size_t>(embedding.map[x])] = static_cast<Element>(x);

  auto restrict_map = [&](auto&& apply) {
    std::vector<Element> r(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) {
      Element y = pull[static_cast<std::size_t>(apply(embedding.map[x]))];
      check_invariant(y >= 0, "restriction left the subgroup");
      r[x] = y;
    }
    Element idx = aut_h.find(r);
    check_invariant(idx >= 0, "restriction is not an automorphism of H");
    return idx;
  };

  std::vector<Element> stab;
  ElementSet bar;
  for (std::size_t a = 0; a < aut_g.order(); ++a) {
    const auto& m = aut_g.maps[a];
    bool keeps = std::all_of(sub.elements().begin(), sub.elements().end(),
                             [&](Element x) { return sub.contains(m[static_cast<std::size_t>(x)]); });
    if (!keeps) continue;
    stab.push_back(static_cast<Element>(a));
    bar.push_back(restrict_map([&](Element x) { return m[static_cast<std::size_t>(x)]; }));
  }
  std::sort(bar.begin(), bar.end());
  bar.erase(std::unique(bar.begin(), bar.end()), bar.end());

  ElementSet barn;
  const Subgroup norm = normalizer(g, sub);
  for (Element n : norm.elements())
    barn.push_back(restrict_map([&](Element x) { return g->conjugate(n, x); }));
  std::sort(barn.begin(), barn.end());
  barn.erase(std::unique(barn.begin(), barn.end()), barn.end());

  Subgroup bar_image(aut_h.group, std::move(bar));
  Subgroup bar_normalizer(aut_h.group, std::move(barn));
  Subgroup tilde_image = out_h->image_of(bar_image);
  Subgroup tilde_normalizer = out_h->image_of(bar_normalizer);
  return RestrictionImage{g,         embedding,   std::move(sub),   std::move(stab),
                          bar_image, tilde_image, bar_normalizer, tilde_normalizer};
}

RestrictionImage restriction_image(const GroupPtr& g, const Subgroup& h, const AutGroup& aut_g,
                                   const OutPtr& out_h) {
  throw_if_not_in(h, g, "H");
  if (out_h->aut->base->order() != h.size())
    fail(ErrorKind::kIncompatibleShapes, "Out(H) was computed for a different H");
  Morphism emb{out_h->aut->base, g, h.elements(), MorphismKind::kInjection};
  if (!is_homomorphism(*emb.source, *g, emb.map))
    fail(ErrorKind::kIncompatibleShapes, "Out(H) base is not the induced group of H");
  return restriction_image(g, emb, aut_g, out_h);
}

std::optional<Morphism> find_subgroup_preserving_iso(const GroupPtr& g1, const Subgroup& h1,
                                                     const GroupPtr& g2, const Subgroup& h2,
                                                     const Limits& limits) {
  throw_if_not_in(h1, g1, "H1");
  throw_if_not_in(h2, g2, "H2");
  if (g1->order() != g2->order() || h1.size() != h2.size()) return std::nullopt;
  if (order_profile(*g1) != order_profile(*g2)) return std::nullopt;

  auto h_gens = subgroup_generators(h1);
  auto gens = subgroup_generators(whole_group(g1), h_gens);
  HomSearch search(*g1, *g2, gens, limits.search_budget);
  search.require_injective(true);
  for (std::size_t i = 0; i < h_gens.size(); ++i) {
    std::vector<Element> cands;
    for (Element y : h2.elements())
      if (g2->element_order(y) == g1->element_order(gens[i])) cands.push_back(y);
    search.set_candidates(i, std::move(cands));
  }
  search.set_partial_check([&](std::span<const Element> map) {
    for (std::size_t x = 0; x < map.size(); ++x)
      if (map[x] >= 0 && h1.contains(static_cast<Element>(x)) != h2.contains(map[x])) return false;
    return true;
  });
  std::optional<Morphism> found;
  search.run([&](std::span<const Element> m) {
    found = Morphism{g1, g2, std::vector<Element>(m.begin(), m.end()), MorphismKind::kAutomorphism};
    return false;
  });
  return found;
}

std::optional<Morphism> find_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                                         const Limits& limits) {
  return find_subgroup_preserving_iso(g1, trivial_subgroup(g1), g2, trivial_subgroup(g2), limits);
}

std::optional<Morphism> canonical_embedding_onto(const GroupPtr& h, const GroupPtr& g,
                                                 const Subgroup& target, const Limits& limits) {
  throw_if_not_in(target, g, "target");
  if (h->order() != target.size()) return std::nullopt;
  std::vector<Element> gens(h->generators().begin(), h->generators().end());
  HomSearch search(*h, *g, gens, limits.search_budget);
  search.require_injective(true);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Element> cands;
    for (Element y : target.elements())
      if (g->element_order(y) == h->element_order(gens[i])) cands.push_back(y);
    search.set_candidates(i, std::move(cands));
  }
  std::optional<std::vector<Element>> best;
  search.run([&](std::span<const Element> m) {
    std::vector<Element> v(m.begin(), m.end());
    if (!best || v < *best) best = std::move(v);
    return true;
  });
  if (!best) return std::nullopt;
  return Morphism{h, g, std::move(*best), MorphismKind::kInjection};
}

}  // namespace amalgenus
