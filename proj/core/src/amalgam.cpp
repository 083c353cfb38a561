#include "amalgenus/amalgam.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "amalgenus/hom_search.hpp"

namespace amalgenus {

namespace {

std::vector<Element> compose_maps(std::span<const Element> outer, std::span<const Element> inner) {
  std::vector<Element> out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[static_cast<std::size_t>(inner[x])];
  return out;
}

std::vector<Element> invert_on_image(const Morphism& m) {
  std::vector<Element> pull(m.target->order(), -1);
  for (std::size_t x = 0; x < m.map.size(); ++x) pull[static_cast<std::size_t>(m.map[x])] = static_cast<Element>(x);
  return pull;
}

/// An isomorphism src -> dst sending domain[i] to images[i], if any.
std::optional<std::vector<Element>> extend_to_iso(const GroupPtr& src, const GroupPtr& dst,
                                                  const std::vector<Element>& domain,
                                                  const std::vector<Element>& images,
                                                  const Limits& limits) {
  if (src->order() != dst->order()) return std::nullopt;
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (src->element_order(domain[i]) != dst->element_order(images[i])) return std::nullopt;
  auto gens = subgroup_generators(whole_group(src), domain);
  HomSearch search(*src, *dst, gens, limits.search_budget);
  search.require_injective(true);
  // subgroup_generators keeps the prefix, so the first entries are pinned.
  for (std::size_t i = 0; i < domain.size(); ++i) {
    check_invariant(gens[i] == domain[i], "generator prefix was not kept");
    search.set_candidates(i, {images[i]});
  }
  std::optional<std::vector<Element>> found;
  search.run([&](std::span<const Element> m) {
    found.emplace(m.begin(), m.end());
    return false;
  });
  return found;
}

std::vector<Element> map_all(const Morphism& m, std::span<const Element> xs) {
  std::vector<Element> out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back(m(x));
  return out;
}

std::optional<PushOutIsoWitness> direct_test(const PushOut& p, const Morphism& eta,
                                             const Morphism& nu, const AutGroup& aut_g1,
                                             const Limits& limits) {
  const auto pull_lambda = invert_on_image(p.lambda);
  const std::size_t nh = p.h->order();
  auto hgens = subgroup_generators(whole_group(p.h));
  auto domain = map_all(nu, hgens);
  for (const auto& beta1 : aut_g1.maps) {
    std::vector<Element> alpha(nh);
    bool ok = true;
    for (std::size_t x = 0; x < nh && ok; ++x) {
      alpha[x] = pull_lambda[static_cast<std::size_t>(beta1[static_cast<std::size_t>(eta.map[x])])];
      ok = alpha[x] >= 0;
    }
    if (!ok) continue;
    std::vector<Element> images;
    for (Element g : hgens) images.push_back(p.mu(alpha[static_cast<std::size_t>(g)]));
    auto beta2 = extend_to_iso(p.g2, p.g2, domain, images, limits);
    if (beta2) return PushOutIsoWitness{beta1, std::move(*beta2), std::move(alpha), false};
  }
  return std::nullopt;
}

std::optional<PushOutIsoWitness> pushout_isomorphic_impl(const PushOut& p, const PushOut& q,
                                                         bool allow_swap, const AutGroup& aut_g1,
                                                         const std::optional<Morphism>& phi,
                                                         const Limits& limits) {
  if (!same_group(p.h, q.h)) fail(ErrorKind::kIncompatibleShapes, "push-outs over different H");
  const bool direct = same_group(p.g1, q.g1) && same_group(p.g2, q.g2);
  const bool reversed = same_group(p.g1, q.g2) && same_group(p.g2, q.g1);
  if (!direct && !(allow_swap && reversed))
    fail(ErrorKind::kIncompatibleShapes, "push-outs over different factor pairs");
  if (direct) {
    if (auto w = direct_test(p, q.lambda, q.mu, aut_g1, limits)) return w;
  }
  if (!allow_swap) return std::nullopt;
  std::optional<PushOutIsoWitness> w;
  if (reversed) {
    w = direct_test(p, q.mu, q.lambda, aut_g1, limits);
  } else if (phi) {
    Morphism eta2{p.h, p.g1, compose_maps(inverse(*phi).map, q.mu.map), MorphismKind::kInjection};
    Morphism nu2{p.h, p.g2, compose_maps(phi->map, q.lambda.map), MorphismKind::kInjection};
    w = direct_test(p, eta2, nu2, aut_g1, limits);
  }
  if (w) w->swapped = true;
  return w;
}

void check_not_fictitious(std::size_t h, const GroupPtr& g1, const GroupPtr& g2) {
  if (h == g1->order() || h == g2->order())
    fail(ErrorKind::kFictitiousAmalgam, "H equals one of the factors");
}

using MapIndex = std::map<std::vector<Element>, int>;

MapIndex index_maps(const std::vector<Morphism>& ms) {
  MapIndex idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx.emplace(ms[i].map, static_cast<int>(i));
  return idx;
}

int lookup(const MapIndex& idx, const std::vector<Element>& m) {
  auto it = idx.find(m);
  check_invariant(it != idx.end(), "action left the injection set");
  return it->second;
}

/// Orbit count on pairs (i, j) of inj1 x inj2.
struct PairOrbitProblem {
  PairOrbitProblem(const std::vector<Morphism>& a, const std::vector<Morphism>& b)
      : inj1(a), inj2(b), idx1(index_maps(a)), idx2(index_maps(b)) {}

  const std::vector<Morphism>& inj1;
  const std::vector<Morphism>& inj2;
  MapIndex idx1;
  MapIndex idx2;
  std::vector<std::vector<int>> actors;

  std::size_t n2() const { return inj2.size(); }

  void add_post1(std::span<const Element> beta) {
    std::vector<int> a(inj1.size() * n2());
    for (std::size_t i = 0; i < inj1.size(); ++i) {
      int ii = lookup(idx1, compose_maps(beta, inj1[i].map));
      for (std::size_t j = 0; j < n2(); ++j) a[i * n2() + j] = ii * static_cast<int>(n2()) + static_cast<int>(j);
    }
    actors.push_back(std::move(a));
  }
  void add_post2(std::span<const Element> beta) {
    std::vector<int> a(inj1.size() * n2());
    for (std::size_t j = 0; j < n2(); ++j) {
      int jj = lookup(idx2, compose_maps(beta, inj2[j].map));
      for (std::size_t i = 0; i < inj1.size(); ++i) a[i * n2() + j] = static_cast<int>(i * n2()) + jj;
    }
    actors.push_back(std::move(a));
  }
  void add_diagonal(std::span<const Element> alpha) {
    std::vector<int> a(inj1.size() * n2());
    std::vector<int> i2(inj1.size()), j2(n2());
    for (std::size_t i = 0; i < inj1.size(); ++i) i2[i] = lookup(idx1, compose_maps(inj1[i].map, alpha));
    for (std::size_t j = 0; j < n2(); ++j) j2[j] = lookup(idx2, compose_maps(inj2[j].map, alpha));
    for (std::size_t i = 0; i < inj1.size(); ++i)
      for (std::size_t j = 0; j < n2(); ++j) a[i * n2() + j] = i2[i] * static_cast<int>(n2()) + j2[j];
    actors.push_back(std::move(a));
  }
  /// (lambda, mu) -> (gamma^-1 mu, gamma lambda)
  void add_swap(const Morphism& gamma) {
    const auto ginv = inverse(gamma).map;
    std::vector<int> a(inj1.size() * n2());
    for (std::size_t i = 0; i < inj1.size(); ++i)
      for (std::size_t j = 0; j < n2(); ++j) {
        int ii = lookup(idx1, compose_maps(ginv, inj2[j].map));
        int jj = lookup(idx2, compose_maps(gamma.map, inj1[i].map));
        a[i * n2() + j] = ii * static_cast<int>(n2()) + jj;
      }
    actors.push_back(std::move(a));
  }
};

std::vector<Morphism> injections_onto(const GroupPtr& h, const GroupPtr& g, const Subgroup& s,
                                      const Limits& limits) {
  std::vector<Morphism> out;
  for (auto& m : enumerate_injections(h, g, limits))
    if (m.image() == s.elements()) out.push_back(std::move(m));
  return out;
}

}  // namespace

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a.get() == b.get() || a->same_table(*b);
}

PushOut PushOut::make(Morphism lambda, Morphism mu) {
  if (!same_group(lambda.source, mu.source))
    fail(ErrorKind::kIncompatibleShapes, "lambda and mu have different sources");
  lambda = Morphism::make(lambda.source, lambda.target, std::move(lambda.map), MorphismKind::kInjection);
  mu = Morphism::make(mu.source, mu.target, std::move(mu.map), MorphismKind::kInjection);
  check_not_fictitious(lambda.source->order(), lambda.target, mu.target);
  return PushOut{lambda.source, lambda.target, mu.target, std::move(lambda), std::move(mu)};
}

std::optional<PushOutIsoWitness> pushout_isomorphic(const PushOut& p, const PushOut& q,
                                                    bool allow_swap, const Limits& limits) {
  auto aut_g1 = compute_aut(p.g1, limits);
  std::optional<Morphism> phi;
  if (allow_swap) phi = find_isomorphism(p.g1, p.g2, limits);
  return pushout_isomorphic_impl(p, q, allow_swap, *aut_g1, phi, limits);
}

std::optional<Morphism> is_double(const PushOut& p, const Limits& limits) {
  auto hgens = subgroup_generators(whole_group(p.h));
  auto gamma = extend_to_iso(p.g1, p.g2, map_all(p.lambda, hgens), map_all(p.mu, hgens), limits);
  if (!gamma) return std::nullopt;
  return Morphism{p.g1, p.g2, std::move(*gamma), MorphismKind::kAutomorphism};
}

std::string to_string(IsoCountMode mode) {
  return mode == IsoCountMode::kPushoutFamily ? "pushout_family" : "fixed_subgroups";
}

std::string to_string(CountMethod method) {
  return method == CountMethod::kFormula ? "formula" : "oracle";
}

IsoClassReport count_classes_pushout_family(const GroupPtr& h, const GroupPtr& g1,
                                            const GroupPtr& g2, const Limits& limits) {
  check_not_fictitious(h->order(), g1, g2);
  auto inj1 = enumerate_injections(h, g1, limits);
  auto inj2 = enumerate_injections(h, g2, limits);
  if (inj1.empty() || inj2.empty()) fail(ErrorKind::kInvalidInput, "H does not embed in both factors");
  if (inj1.size() * inj2.size() > limits.oracle_limit)
    fail(ErrorKind::kSizeExceeded, "oracle carrier of " + std::to_string(inj1.size() * inj2.size()) +
                                       " pairs exceeds the limit");
  auto aut_h = compute_aut(h, limits);
  auto aut_g1 = compute_aut(g1, limits);
  auto aut_g2 = compute_aut(g2, limits);

  PairOrbitProblem prob(inj1, inj2);
  for (Element b : aut_g1->group->generators()) prob.add_post1(aut_g1->maps[static_cast<std::size_t>(b)]);
  for (Element b : aut_g2->group->generators()) prob.add_post2(aut_g2->maps[static_cast<std::size_t>(b)]);
  for (Element a : aut_h->group->generators()) prob.add_diagonal(aut_h->maps[static_cast<std::size_t>(a)]);
  auto phi = find_isomorphism(g1, g2, limits);
  if (phi) prob.add_swap(*phi);

  auto orbits = generic_orbits(inj1.size() * inj2.size(), prob.actors);
  IsoClassReport rep;
  rep.count = orbits.count();
  rep.mode = IsoCountMode::kPushoutFamily;
  rep.symmetric = phi.has_value();
  rep.method = CountMethod::kOracle;
  rep.provenance = "orbits on Inj(H,G1) x Inj(H,G2)";
  for (const auto& orbit : orbits.orbits) {
    const auto p = static_cast<std::size_t>(orbit.front());
    rep.representatives.push_back(PushOut{h, g1, g2, inj1[p / inj2.size()], inj2[p % inj2.size()]});
  }
  return rep;
}

FixedSubgroupData fixed_subgroup_data(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                                      const Subgroup& h2, const Limits& limits, AutPtr aut_g1,
                                      AutPtr aut_g2) {
  throw_if_not_in(h1, g1, "H1");
  throw_if_not_in(h2, g2, "H2");
  if (h1.size() == g1->order() || h2.size() == g2->order())
    fail(ErrorKind::kFictitiousAmalgam, "H equals one of the factors");
  auto h = induced_group(h1, "H");
  auto lambda0 = inclusion(h1, h);
  auto mu0 = canonical_embedding_onto(h, g2, h2, limits);
  if (!mu0) fail(ErrorKind::kNotIsomorphicSubgroups, "H1 and H2 are not isomorphic");
  auto aut_h = compute_aut(h, limits);
  auto out_h = out_quotient(aut_h);
  if (!aut_g1) aut_g1 = compute_aut(g1, limits);
  if (!aut_g2) aut_g2 = compute_aut(g2, limits);
  auto r1 = restriction_image(g1, lambda0, *aut_g1, out_h);
  auto r2 = restriction_image(g2, *mu0, *aut_g2, out_h);
  auto gamma = find_subgroup_preserving_iso(g1, h1, g2, h2, limits);
  Element xi = -1;
  if (gamma) {
    const auto pull = invert_on_image(*mu0);
    std::vector<Element> m(h->order());
    for (std::size_t x = 0; x < m.size(); ++x)
      m[x] = pull[static_cast<std::size_t>((*gamma)(lambda0(static_cast<Element>(x))))];
    xi = aut_h->find(m);
    check_invariant(xi >= 0, "xi is not an automorphism of H");
  }
  return FixedSubgroupData{g1,     g2,     h,  std::move(lambda0), std::move(*mu0), aut_h, out_h,
                           aut_g1, aut_g2, std::move(r1), std::move(r2), std::move(gamma), xi};
}

namespace {

IsoClassReport fixed_count(const FixedSubgroupData& d, CosetLevel level) {
  const bool out_level = level == CosetLevel::kOut;
  const GroupPtr& ambient = out_level ? d.out_h->group : d.aut_h->group;
  const Subgroup& left = out_level ? d.r2.tilde_image : d.r2.bar_image;
  const Subgroup& right = out_level ? d.r1.tilde_image : d.r1.bar_image;
  auto decomp = double_cosets(ambient, left, right);

  IsoClassReport rep;
  rep.mode = IsoCountMode::kFixedSubgroups;
  rep.method = CountMethod::kFormula;
  rep.symmetric = d.gamma.has_value();
  rep.unquotiented = decomp.count();
  std::vector<Element> reps;
  if (d.gamma) {
    Element xi = out_level ? d.out_h->project(d.xi) : d.xi;
    auto c2 = c2_orbits(decomp, TwistedInvolution{ambient, xi});
    rep.count = c2.count;
    std::vector<int> keep(c2.fixed);
    for (auto [a, b] : c2.pairs) keep.push_back(a);
    std::sort(keep.begin(), keep.end());
    for (int c : keep) reps.push_back(decomp.classes[static_cast<std::size_t>(c)].rep);
    rep.provenance = out_level ? "Out(H) double cosets modulo the twisted C2 action"
                               : "Aut(H) double cosets modulo the twisted C2 action";
  } else {
    rep.count = decomp.count();
    for (const auto& c : decomp.classes) reps.push_back(c.rep);
    rep.provenance = out_level ? "Out(H) double cosets" : "Aut(H) double cosets";
  }
  for (Element r : reps) {
    const auto& alpha = out_level ? d.out_h->rep_map(r) : d.aut_h->maps[static_cast<std::size_t>(r)];
    Morphism mu{d.h, d.g2, compose_maps(d.mu0.map, alpha), MorphismKind::kInjection};
    rep.representatives.push_back(PushOut{d.h, d.g1, d.g2, d.lambda0, std::move(mu)});
  }
  return rep;
}

}  // namespace

IsoClassReport count_classes_fixed_subgroups(const GroupPtr& g1, const Subgroup& h1,
                                             const GroupPtr& g2, const Subgroup& h2,
                                             const Limits& limits, CosetLevel level) {
  return fixed_count(fixed_subgroup_data(g1, h1, g2, h2, limits), level);
}

IsoClassReport count_classes_fixed_oracle(const GroupPtr& g1, const Subgroup& h1,
                                          const GroupPtr& g2, const Subgroup& h2,
                                          const Limits& limits) {
  throw_if_not_in(h1, g1, "H1");
  throw_if_not_in(h2, g2, "H2");
  check_not_fictitious(h1.size(), g1, g2);
  if (h2.size() == g2->order()) fail(ErrorKind::kFictitiousAmalgam, "H equals one of the factors");
  auto h = induced_group(h1, "H");
  auto inj1 = injections_onto(h, g1, h1, limits);
  auto inj2 = injections_onto(h, g2, h2, limits);
  if (inj2.empty()) fail(ErrorKind::kNotIsomorphicSubgroups, "H1 and H2 are not isomorphic");
  if (inj1.size() * inj2.size() > limits.oracle_limit)
    fail(ErrorKind::kSizeExceeded, "oracle carrier exceeds the limit");
  auto aut_h = compute_aut(h, limits);
  auto aut_g1 = compute_aut(g1, limits);
  auto aut_g2 = compute_aut(g2, limits);

  PairOrbitProblem prob(inj1, inj2);
  auto keeps = [](const std::vector<Element>& beta, const Subgroup& s) {
    return std::all_of(s.elements().begin(), s.elements().end(),
                       [&](Element x) { return s.contains(beta[static_cast<std::size_t>(x)]); });
  };
  for (const auto& b : aut_g1->maps)
    if (keeps(b, h1)) prob.add_post1(b);
  for (const auto& b : aut_g2->maps)
    if (keeps(b, h2)) prob.add_post2(b);
  for (Element a : aut_h->group->generators()) prob.add_diagonal(aut_h->maps[static_cast<std::size_t>(a)]);
  auto gamma = find_subgroup_preserving_iso(g1, h1, g2, h2, limits);
  if (gamma) prob.add_swap(*gamma);

  auto orbits = generic_orbits(inj1.size() * inj2.size(), prob.actors);
  IsoClassReport rep;
  rep.count = orbits.count();
  rep.symmetric = gamma.has_value();
  rep.method = CountMethod::kOracle;
  rep.provenance = "orbits on Inj(H,H1) x Inj(H,H2)";
  for (const auto& orbit : orbits.orbits) {
    const auto p = static_cast<std::size_t>(orbit.front());
    rep.representatives.push_back(PushOut{h, g1, g2, inj1[p / inj2.size()], inj2[p % inj2.size()]});
  }
  return rep;
}

std::vector<Subgroup> subgroup_orbit_reps(const GroupPtr& g, const GroupPtr& h,
                                          const Limits& limits) {
  auto subs = enumerate_subgroups(g, limits);
  auto aut_g = compute_aut(g, limits);
  std::set<ElementSet> seen;
  std::vector<Subgroup> reps;
  for (const auto& s : subs.subgroups) {
    if (s.size() != h->order() || seen.count(s.elements())) continue;
    if (!find_isomorphism(induced_group(s), h, limits)) continue;
    reps.push_back(s);
    for (const auto& beta : aut_g->maps) {
      ElementSet img;
      for (Element x : s.elements()) img.push_back(beta[static_cast<std::size_t>(x)]);
      std::sort(img.begin(), img.end());
      seen.insert(std::move(img));
    }
  }
  return reps;
}

IsoClassReport count_classes_pushout_formula(const GroupPtr& h, const GroupPtr& g1,
                                             const GroupPtr& g2, const Limits& limits) {
  check_not_fictitious(h->order(), g1, g2);
  auto reps1 = subgroup_orbit_reps(g1, h, limits);
  auto reps2 = subgroup_orbit_reps(g2, h, limits);
  if (reps1.empty() || reps2.empty()) fail(ErrorKind::kInvalidInput, "H does not embed in both factors");
  auto aut_g1 = compute_aut(g1, limits);
  auto aut_g2 = compute_aut(g2, limits);
  auto phi = find_isomorphism(g1, g2, limits);

  IsoClassReport rep;
  rep.mode = IsoCountMode::kPushoutFamily;
  rep.method = CountMethod::kFormula;
  rep.symmetric = phi.has_value();
  rep.provenance = "sum of fixed-subgroup counts over pairs of subgroup orbits";
  auto add = [&](const Subgroup& a, const Subgroup& b) {
    auto part = fixed_count(fixed_subgroup_data(g1, a, g2, b, limits, aut_g1, aut_g2), CosetLevel::kOut);
    rep.count += part.count;
    rep.unquotiented += part.unquotiented;
    for (auto& p : part.representatives) rep.representatives.push_back(std::move(p));
  };
  if (!phi) {
    for (const auto& a : reps1)
      for (const auto& b : reps2) add(a, b);
    return rep;
  }
  // G1 ~ G2: unordered pairs of G1-orbits, the second carried over by phi.
  for (std::size_t i = 0; i < reps1.size(); ++i)
    for (std::size_t j = i; j < reps1.size(); ++j) {
      ElementSet img;
      for (Element x : reps1[j].elements()) img.push_back((*phi)(x));
      std::sort(img.begin(), img.end());
      add(reps1[i], Subgroup(g2, std::move(img)));
    }
  return rep;
}

ComparisonReport oracle_cross_check(const GroupPtr& g1, const GroupPtr& h, const GroupPtr& g2,
                                    const Limits& limits, bool pairwise) {
  ComparisonReport out;
  out.g1_label = g1->label();
  out.g2_label = g2->label();
  out.h_label = h->label();
  auto formula = count_classes_pushout_formula(h, g1, g2, limits);
  auto oracle = count_classes_pushout_family(h, g1, g2, limits);
  out.formula_count = formula.count;
  out.oracle_count = oracle.count;
  out.agree = formula.count == oracle.count;
  if (!out.agree)
    out.counterexample = "formula " + std::to_string(formula.count) + " vs oracle " +
                         std::to_string(oracle.count);
  if (pairwise) {
    auto aut_g1 = compute_aut(g1, limits);
    auto phi = find_isomorphism(g1, g2, limits);
    std::vector<std::size_t> leaders;
    for (std::size_t i = 0; i < oracle.representatives.size(); ++i) {
      bool matched = false;
      for (std::size_t l : leaders) {
        if (pushout_isomorphic_impl(oracle.representatives[l], oracle.representatives[i], true,
                                    *aut_g1, phi, limits)) {
          matched = true;
          if (out.counterexample.empty())
            out.counterexample = "orbit representatives " + std::to_string(l) + " and " +
                                 std::to_string(i) + " are isomorphic push-outs";
          break;
        }
      }
      if (!matched) leaders.push_back(i);
    }
    out.pairwise_count = leaders.size();
    out.agree = out.agree && leaders.size() == oracle.count;
  }
  return out;
}

std::vector<GroupPtr> common_subgroup_types(const GroupPtr& g1, const GroupPtr& g2,
                                            std::size_t max_order, const Limits& limits) {
  auto collect = [&](const GroupPtr& g) {
    std::vector<GroupPtr> types;
    for (const auto& s : enumerate_subgroups(g, limits).subgroups) {
      if (s.size() > max_order || s.size() == g->order()) continue;
      auto h = induced_group(s);
      bool known = std::any_of(types.begin(), types.end(), [&](const GroupPtr& t) {
        return t->order() == h->order() && find_isomorphism(t, h, limits);
      });
      if (!known) types.push_back(h);
    }
    return types;
  };
  auto t1 = collect(g1);
  auto t2 = collect(g2);
  std::vector<GroupPtr> out;
  for (const auto& h : t1) {
    bool shared = std::any_of(t2.begin(), t2.end(), [&](const GroupPtr& t) {
      return t->order() == h->order() && find_isomorphism(t, h, limits);
    });
    if (!shared) continue;
    auto labelled = FiniteGroup::from_table(
        [&] {
          std::vector<std::vector<std::int64_t>> rows;
          for (const auto& r : h->table_rows()) rows.emplace_back(r.begin(), r.end());
          return rows;
        }(),
        "H" + std::to_string(h->order()) + "." + std::to_string(out.size()), limits);
    out.push_back(labelled);
  }
  return out;
}

SweepResult oracle_sweep(const std::vector<GroupPtr>& groups, std::size_t max_h,
                         const Limits& limits, bool pairwise) {
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i; j < groups.size(); ++j) tasks.emplace_back(i, j);

  // Pairs are independent; workers fill fixed slots so the merged order
  // does not depend on scheduling.
  std::vector<std::vector<ComparisonReport>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        const auto& g1 = groups[tasks[t].first];
        const auto& g2 = groups[tasks[t].second];
        for (const auto& h : common_subgroup_types(g1, g2, max_h, limits))
          slots[t].push_back(oracle_cross_check(g1, h, g2, limits, pairwise));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(tasks.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SweepResult result;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
    for (auto& report : slots[t]) {
      if (report.agree) ++result.agreed;
      result.cases.push_back(std::move(report));
    }
  }
  return result;
}

}  // namespace amalgenus
