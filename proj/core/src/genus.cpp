#include "amalgenus/genus.hpp"

#include <algorithm>
#include <map>

namespace amalgenus {

namespace {

void check_indices(const FiniteGroup& g, std::span<const Element> xs, std::string_view what) {
  for (Element x : xs)
    if (x < 0 || static_cast<std::size_t>(x) >= g.order())
      fail(ErrorKind::kInvalidInput, std::string(what) + " has an element outside Out(H)");
}

Subgroup closed(const GroupPtr& out, const ElementSet& xs, std::string_view what) {
  check_indices(*out, xs, what);
  return subgroup_generated(out, xs);
}

bool subset(const Subgroup& a, const Subgroup& b) {
  return std::all_of(a.elements().begin(), a.elements().end(), [&](Element x) { return b.contains(x); });
}

Subgroup join(const GroupPtr& out, const Subgroup& a, const Subgroup& b) {
  return subgroup_generated(out, set_union(a.elements(), b.elements()));
}

ElementSet subgroup_image(const Subgroup& s, const std::vector<Element>& map) {
  ElementSet out;
  for (Element x : s.elements()) out.push_back(map[static_cast<std::size_t>(x)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  return out + "}";
}

}  // namespace

std::string to_string(GenusMode mode) {
  switch (mode) {
    case GenusMode::kProfinitelyNonsymmetric: return "profinitely_nonsymmetric";
    case GenusMode::kProfsymmetricNonsymmetric: return "profsymmetric_nonsymmetric";
    case GenusMode::kSymmetric: return "symmetric";
    case GenusMode::kDouble: return "double";
  }
  return "unknown";
}

std::string to_string(NplusPolicy policy) {
  switch (policy) {
    case NplusPolicy::kExact: return "exact";
    case NplusPolicy::kLower: return "lower";
    case NplusPolicy::kUpper: return "upper";
  }
  return "unknown";
}

std::optional<GenusMode> parse_genus_mode(std::string_view s) {
  for (auto m : {GenusMode::kProfinitelyNonsymmetric, GenusMode::kProfsymmetricNonsymmetric,
                 GenusMode::kSymmetric, GenusMode::kDouble})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::optional<NplusPolicy> parse_nplus_policy(std::string_view s) {
  for (auto p : {NplusPolicy::kExact, NplusPolicy::kLower, NplusPolicy::kUpper})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

GenusInput with_nplus_policy(GenusInput input, NplusPolicy policy) {
  const auto& out = input.out_h->group;
  switch (policy) {
    case NplusPolicy::kExact:
      input.nplus_is_proxy = false;
      break;
    case NplusPolicy::kLower:
      input.nplus = {out->identity()};
      input.nplus_is_proxy = true;
      break;
    case NplusPolicy::kUpper:
      if (!input.n1 || !input.n2)
        fail(ErrorKind::kInvalidInput, "upper N+ proxy needs both normalizer images");
      input.nplus = join(out, *input.n1, *input.n2).elements();
      input.nplus_is_proxy = true;
      break;
  }
  input.policy = policy;
  return input;
}

GenusInput genus_input_from(const FixedSubgroupData& data, NplusPolicy policy,
                            const GenusOverrides& overrides) {
  const auto& out = data.out_h->group;
  GenusInput in{data.out_h,
                data.r1.tilde_image,
                data.r2.tilde_image,
                data.r1.tilde_image,
                data.r2.tilde_image,
                {out->identity()},
                data.r1.tilde_normalizer,
                data.r2.tilde_normalizer,
                std::nullopt,
                data.gamma ? GenusMode::kSymmetric : GenusMode::kProfinitelyNonsymmetric,
                NplusPolicy::kExact,
                false,
                true,
                {}};
  if (data.gamma) in.xi = data.out_h->project(data.xi);
  if (overrides.a1) in.a1 = closed(out, *overrides.a1, "A1");
  if (overrides.a2) in.a2 = closed(out, *overrides.a2, "A2");
  if (overrides.ahat1) in.ahat1 = closed(out, *overrides.ahat1, "Ahat1");
  if (overrides.ahat2) in.ahat2 = closed(out, *overrides.ahat2, "Ahat2");
  if (overrides.xi) {
    check_indices(*out, std::span<const Element>(&*overrides.xi, 1), "xi");
    in.xi = overrides.xi;
  }
  if (overrides.mode) in.mode = *overrides.mode;
  if (policy == NplusPolicy::kExact) {
    if (!overrides.nplus) fail(ErrorKind::kInvalidInput, "exact N+ policy needs an N+ set");
    check_indices(*out, *overrides.nplus, "N+");
    ElementSet n = *overrides.nplus;
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    in.nplus = std::move(n);
  }
  return with_nplus_policy(std::move(in), policy);
}

GenusInput derive_genus_input(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                              const Subgroup& h2, const Limits& limits, NplusPolicy policy,
                              const GenusOverrides& overrides) {
  auto data = fixed_subgroup_data(g1, h1, g2, h2, limits);
  auto in = genus_input_from(data, policy, overrides);
  in.conditions = check_simplifications(g1, h1, g2, h2, limits).names();
  return in;
}

GenusReport normalizer_bound(const OutPtr& out_h, const Subgroup& n1, const Subgroup& n2) {
  const auto& out = out_h->group;
  auto n = join(out, n1, n2);
  GenusReport rep;
  rep.is_bound = true;
  rep.out_h = out_h;
  rep.decomposition = double_cosets(out, n2, n1, n.elements());
  rep.value = rep.decomposition->count();
  rep.k = n.elements();
  rep.provenance.push_back("bound:normalizer double cosets N2 \\ <N1,N2> / N1");
  return rep;
}

GenusReport genus_double(const GenusInput& input) {
  const auto& out = input.out_h->group;
  if (!subset(input.a1, input.ahat1)) fail(ErrorKind::kInvalidInput, "A1 is not inside Ahat1");
  GenusReport rep;
  rep.mode = GenusMode::kDouble;
  rep.policy = input.policy;
  rep.nplus_is_proxy = input.nplus_is_proxy;
  rep.out_h = input.out_h;
  rep.conditions = input.conditions;
  rep.k = input.ahat1.elements();
  rep.s = rep.k;
  if (input.double_c2) {
    rep.decomposition = double_cosets(out, input.a1, input.a1, rep.k);
    rep.pairing = c2_orbits(*rep.decomposition, TwistedInvolution{out, out->identity()});
    rep.value = rep.pairing->count;
    rep.provenance.push_back("formula:double A1 \\ Ahat1 / A1 modulo inversion");
  } else {
    rep.decomposition = double_cosets(out, input.a2, input.a1, rep.k);
    rep.value = rep.decomposition->count();
    rep.provenance.push_back("formula:double A2 \\ Ahat1 / A1");
  }
  check_invariant(rep.value > 0, "genus count is zero");
  return rep;
}

GenusReport genus_fixed(const GenusInput& input) {
  const auto& out = input.out_h->group;
  check_indices(*out, input.nplus, "N+");
  if (input.mode == GenusMode::kDouble) return genus_double(input);
  if (!subset(input.a1, input.ahat1)) fail(ErrorKind::kInvalidInput, "A1 is not inside Ahat1");
  if (!subset(input.a2, input.ahat2)) fail(ErrorKind::kInvalidInput, "A2 is not inside Ahat2");
  if (std::find(input.nplus.begin(), input.nplus.end(), out->identity()) == input.nplus.end())
    fail(ErrorKind::kInvalidInput, "N+ must contain the identity");

  GenusReport rep;
  rep.mode = input.mode;
  rep.policy = input.policy;
  rep.nplus_is_proxy = input.nplus_is_proxy;
  rep.out_h = input.out_h;
  rep.conditions = input.conditions;
  rep.k = product_set(*out, input.ahat2.elements(), input.nplus, input.ahat1.elements());

  if (input.mode == GenusMode::kProfinitelyNonsymmetric) {
    rep.s = rep.k;
    rep.decomposition = double_cosets(out, input.a2, input.a1, rep.k);
    rep.value = rep.decomposition->count();
    rep.provenance.push_back("formula:K double cosets A2 \\ Ahat2 N+ Ahat1 / A1");
  } else {
    if (!input.xi) fail(ErrorKind::kMissingXi, "mode " + to_string(input.mode) + " needs xi");
    check_indices(*out, std::span<const Element>(&*input.xi, 1), "xi");
    rep.s = set_union(rep.k, twist_inverse(*out, *input.xi, rep.k));
    rep.decomposition = double_cosets(out, input.a2, input.a1, rep.s);
    if (input.mode == GenusMode::kProfsymmetricNonsymmetric) {
      rep.value = rep.decomposition->count();
      rep.provenance.push_back("formula:S double cosets A2 \\ (K u xi K^-1 xi) / A1");
    } else {
      rep.pairing = c2_orbits(*rep.decomposition, TwistedInvolution{out, *input.xi});
      rep.value = rep.pairing->count;
      rep.provenance.push_back("formula:S/C2 double cosets of S modulo the twisted C2 action");
    }
  }
  check_invariant(rep.value > 0, "genus count is zero");
  if (input.n1 && input.n2) {
    rep.normalizer_bound = normalizer_bound(input.out_h, *input.n1, *input.n2).value;
    rep.provenance.push_back("annotation:normalizer bound " + std::to_string(*rep.normalizer_bound));
  }
  rep.provenance.push_back("nplus:" + to_string(input.policy) + (input.nplus_is_proxy ? " (proxy)" : ""));
  return rep;
}

bool SimplificationConditions::any() const {
  return central[0] || central[1] || direct_factor[0] || direct_factor[1] || out_abelian ||
         self_normalizing[0] || self_normalizing[1] || retract[0] || retract[1];
}

std::vector<std::string> SimplificationConditions::names() const {
  std::vector<std::string> out;
  for (int i = 0; i < 2; ++i) {
    const std::string g = i == 0 ? "G1" : "G2";
    if (central[i]) out.push_back("central in " + g);
    if (direct_factor[i]) out.push_back("direct factor of N_" + g + "(H)");
    if (self_normalizing[i]) out.push_back("self-normalizing in " + g);
    if (retract[i]) out.push_back("retract of " + g);
  }
  if (out_abelian) out.push_back("Out(H) abelian");
  if (nplus_eliminable) out.push_back("N+ eliminable");
  return out;
}

SimplificationConditions check_simplifications(const GroupPtr& g1, const Subgroup& h1,
                                               const GroupPtr& g2, const Subgroup& h2,
                                               const Limits& limits) {
  auto data = fixed_subgroup_data(g1, h1, g2, h2, limits);
  SimplificationConditions c;
  const GroupPtr gs[2] = {g1, g2};
  const Subgroup* hs[2] = {&h1, &h2};
  for (int i = 0; i < 2; ++i) {
    const auto& g = gs[i];
    const auto& h = *hs[i];
    c.central[i] = h.is_subset_of(center(g));
    auto n = normalizer(g, h);
    c.direct_factor[i] = is_direct_factor(n, h, limits).has_value();
    c.self_normalizing[i] = n.size() == h.size();
    c.retract[i] = is_retract(g, h, limits);
  }
  c.out_abelian = data.out_h->group->is_abelian();
  const auto& out = data.out_h->group;
  const auto& n1 = data.r1.tilde_normalizer;
  const auto& n2 = data.r2.tilde_normalizer;
  const Element one[] = {out->identity()};
  c.nplus_eliminable = join(out, n1, n2).elements() == product_set(*out, n2.elements(), one, n1.elements());
  return c;
}

GenusReport genus_bound_finite(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                               const Subgroup& h2, const Limits& limits) {
  auto data = fixed_subgroup_data(g1, h1, g2, h2, limits);
  if (data.gamma)
    fail(ErrorKind::kSymmetricInputForNonsymmetricBound,
         "some isomorphism G1 -> G2 maps H1 onto H2; the normalizer bound needs a nonsymmetric amalgam");
  auto rep = normalizer_bound(data.out_h, data.r1.tilde_normalizer, data.r2.tilde_normalizer);
  rep.mode = GenusMode::kProfinitelyNonsymmetric;
  return rep;
}

namespace {

/// Aut(G)-classes inside the orbit of h. Aut(G-hat) = Aut(G) for finite G,
/// so this is always the single class of h; it is still computed.
std::vector<Subgroup> classes_in_orbit(const GroupPtr& g, const Subgroup& h, const AutGroup& aut) {
  std::vector<ElementSet> orbit;
  for (const auto& beta : aut.maps) orbit.push_back(subgroup_image(h, beta));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  std::vector<Subgroup> reps;
  std::vector<std::uint8_t> seen(orbit.size(), 0);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (seen[i]) continue;
    reps.emplace_back(g, orbit[i]);
    for (const auto& beta : aut.maps) {
      auto img = subgroup_image(reps.back(), beta);
      auto it = std::lower_bound(orbit.begin(), orbit.end(), img);
      seen[static_cast<std::size_t>(it - orbit.begin())] = 1;
    }
  }
  return reps;
}

}  // namespace

GenusReport genus_pushout(const GroupPtr& g1, const Subgroup& h1, const GroupPtr& g2,
                          const Subgroup& h2, const Limits& limits, NplusPolicy policy) {
  auto aut_g1 = compute_aut(g1, limits);
  auto aut_g2 = compute_aut(g2, limits);
  auto reps1 = classes_in_orbit(g1, h1, *aut_g1);
  auto reps2 = classes_in_orbit(g2, h2, *aut_g2);
  auto phi = find_isomorphism(g1, g2, limits);

  GenusReport rep;
  rep.policy = policy;
  rep.nplus_is_proxy = policy != NplusPolicy::kExact;
  std::vector<std::pair<ElementSet, ElementSet>> done;
  for (const auto& a : reps1)
    for (const auto& b : reps2) {
      if (phi) {
        // {A, B} and {phi^-1 B, phi A} are the same unordered pair.
        ElementSet sa = subgroup_image(b, inverse(*phi).map);
        ElementSet sb = subgroup_image(a, phi->map);
        if (std::find(done.begin(), done.end(), std::make_pair(sa, sb)) != done.end()) continue;
      }
      done.emplace_back(a.elements(), b.elements());
      auto data = fixed_subgroup_data(g1, a, g2, b, limits, aut_g1, aut_g2);
      auto part = genus_fixed(genus_input_from(data, policy));
      if (!rep.out_h) {
        rep.out_h = part.out_h;
        rep.mode = part.mode;
      }
      rep.value += part.value;
      rep.parts.emplace_back("H1=" + describe(a) + " H2=" + describe(b), part.value);
    }
  rep.provenance.push_back("formula:pushout sum over " + std::to_string(rep.parts.size()) +
                           " subgroup pair(s), k1=" + std::to_string(reps1.size()) +
                           " k2=" + std::to_string(reps2.size()));
  return rep;
}

GenusReport genus_pushout(const std::vector<GenusInput>& pairs) {
  if (pairs.empty()) fail(ErrorKind::kInvalidInput, "genus_pushout needs at least one pair");
  GenusReport rep;
  rep.out_h = pairs.front().out_h;
  rep.mode = pairs.front().mode;
  rep.policy = pairs.front().policy;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto part = genus_fixed(pairs[i]);
    rep.value += part.value;
    rep.nplus_is_proxy = rep.nplus_is_proxy || part.nplus_is_proxy;
    rep.parts.emplace_back("pair " + std::to_string(i), part.value);
  }
  rep.provenance.push_back("formula:pushout sum over " + std::to_string(pairs.size()) +
                           " supplied pair(s)");
  return rep;
}

}  // namespace amalgenus
