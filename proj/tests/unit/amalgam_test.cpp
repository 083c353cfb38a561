#include <gtest/gtest.h>

#include <set>

#include "amalgenus/amalgam.hpp"
#include "amalgenus/catalog.hpp"
#include "brute.hpp"

using namespace amalgenus;

namespace {

CatalogEntry d8() { return *builtin_group("D8"); }

GroupPtr named(const std::string& n) { return builtin_group(n)->group; }

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Element>(i);
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

}  // namespace

TEST(IsoClasses, D8OverKlein) {
  auto e = d8();
  const auto& k = e.subgroups.at("klein");
  auto fixed = count_classes_fixed_subgroups(e.group, k, e.group, k);
  EXPECT_EQ(fixed.count, 2u);
  EXPECT_TRUE(fixed.symmetric);
  EXPECT_EQ(count_classes_fixed_oracle(e.group, k, e.group, k).count, 2u);
  EXPECT_EQ(count_classes_fixed_subgroups(e.group, k, e.group, k, {}, CosetLevel::kAut).count, 2u);

  auto h = named("C2xC2");
  EXPECT_EQ(count_classes_pushout_family(h, e.group, e.group).count, 2u);
  EXPECT_EQ(count_classes_pushout_formula(h, e.group, e.group).count, 2u);
  auto ident = identity_map(8);
  EXPECT_EQ(brute::pushout_orbits(*h, *e.group, *e.group, &ident), 2u);
}

TEST(IsoClasses, D8OverC4IsAlwaysTheDouble) {
  auto e = d8();
  const auto& c4 = e.subgroups.at("c4");
  auto rep = count_classes_pushout_family(named("C4"), e.group, e.group);
  EXPECT_EQ(rep.count, 1u);
  for (const auto& p : rep.representatives) EXPECT_TRUE(is_double(p).has_value());
  EXPECT_EQ(count_classes_fixed_subgroups(e.group, c4, e.group, c4).count, 1u);
}

TEST(IsoClasses, FormulaMatchesBruteOrbits) {
  struct Case {
    std::string h, g1, g2;
    std::size_t expected;  // frozen from brute::pushout_orbits
  };
  const std::vector<Case> cases = {
      {"C2", "C4", "C4", 1},    {"C2", "S3", "S3", 1},    {"C2", "D8", "D8", 3},
      {"C2", "D8", "Q8", 2},    {"C2", "C2xC2", "C4", 1}, {"C2xC2", "D8", "C2^3", 1},
      {"C2", "C2xC2", "C2xC2", 1}, {"C3", "S3", "C6", 1}, {"C4", "Q8", "D8", 1},
      {"C2", "D10", "D10", 1},  {"C4", "Q8", "Q8", 1},    {"C2", "C4xC2", "D8", 4},
  };
  for (const auto& c : cases) {
    auto h = named(c.h), g1 = named(c.g1), g2 = named(c.g2);
    std::optional<std::vector<Element>> phi;
    if (c.g1 == c.g2) phi = identity_map(g1->order());
    const std::size_t brute_count = brute::pushout_orbits(*h, *g1, *g2, phi ? &*phi : nullptr);
    EXPECT_EQ(brute_count, c.expected) << c.h << " in " << c.g1 << ", " << c.g2;
    EXPECT_EQ(count_classes_pushout_formula(h, g1, g2).count, brute_count) << c.h << " in " << c.g1 << ", " << c.g2;
    EXPECT_EQ(count_classes_pushout_family(h, g1, g2).count, brute_count) << c.h << " in " << c.g1 << ", " << c.g2;
  }
}

TEST(IsoClasses, FixedCountAgreesAtBothLevels) {
  for (const auto& name : {"D8", "Q8", "S3", "D12", "A4", "C4xC2"}) {
    auto g = named(name);
    for (const auto& s : enumerate_subgroups(g).subgroups) {
      if (s.size() == g->order()) continue;
      auto out_level = count_classes_fixed_subgroups(g, s, g, s);
      auto aut_level = count_classes_fixed_subgroups(g, s, g, s, {}, CosetLevel::kAut);
      auto oracle = count_classes_fixed_oracle(g, s, g, s);
      EXPECT_EQ(out_level.count, aut_level.count) << name;
      EXPECT_EQ(out_level.count, oracle.count) << name;
    }
  }
}

TEST(IsoClasses, TrivialAmalgamatedSubgroup) {
  auto h = named("C1");
  EXPECT_EQ(count_classes_pushout_family(h, named("S3"), named("C4")).count, 1u);
  EXPECT_EQ(count_classes_pushout_formula(h, named("D8"), named("D8")).count, 1u);
}

TEST(IsoClasses, Errors) {
  auto e = d8();
  EXPECT_EQ(kind_of([&] {
              count_classes_fixed_subgroups(e.group, whole_group(e.group), e.group, whole_group(e.group));
            }),
            ErrorKind::kFictitiousAmalgam);
  EXPECT_EQ(kind_of([&] {
              count_classes_fixed_subgroups(e.group, e.subgroups.at("klein"), e.group, e.subgroups.at("c4"));
            }),
            ErrorKind::kNotIsomorphicSubgroups);
  EXPECT_EQ(kind_of([&] { count_classes_pushout_family(named("C4"), named("C4"), named("D8")); }),
            ErrorKind::kFictitiousAmalgam);
  Limits tiny;
  tiny.oracle_limit = 10;
  EXPECT_EQ(kind_of([&] { count_classes_pushout_family(named("C2"), e.group, e.group, tiny); }),
            ErrorKind::kSizeExceeded);
}

TEST(PushOutIso, WitnessSatisfiesTheSquare) {
  auto e = d8();
  auto h = named("C2xC2");
  auto inj = enumerate_injections(h, e.group);
  auto p = PushOut::make(inj.front(), inj.front());
  for (const auto& m : inj) {
    auto q = PushOut::make(inj.front(), m);
    auto w = pushout_isomorphic(p, q, false);
    if (!w) continue;
    // beta1 eta = lambda alpha and beta2 nu = mu alpha.
    for (Element x = 0; x < static_cast<Element>(h->order()); ++x) {
      auto xi = static_cast<std::size_t>(x);
      EXPECT_EQ(w->beta1[static_cast<std::size_t>(q.lambda(x))], p.lambda(w->alpha[xi]));
      EXPECT_EQ(w->beta2[static_cast<std::size_t>(q.mu(x))], p.mu(w->alpha[xi]));
    }
  }
  // The two Klein subgroups give non-isomorphic push-outs over a fixed lambda.
  const auto& k1 = e.subgroups.at("klein");
  const auto& k2 = e.subgroups.at("klein2");
  auto lam = *canonical_embedding_onto(h, e.group, k1);
  auto mu2 = *canonical_embedding_onto(h, e.group, k2);
  auto same = PushOut::make(lam, lam);
  auto mixed = PushOut::make(lam, mu2);
  EXPECT_FALSE(pushout_isomorphic(same, mixed, true).has_value());
  EXPECT_TRUE(is_double(same).has_value());
  EXPECT_FALSE(is_double(mixed).has_value());
}

TEST(PushOutIso, RejectsFictitiousAndMismatchedSources) {
  auto c2 = named("C2");
  auto c4 = named("C4");
  auto full = Morphism{c4, c4, identity_map(4), MorphismKind::kInjection};
  auto half = Morphism{c2, c4, {0, 2}, MorphismKind::kInjection};
  EXPECT_THROW(PushOut::make(full, full), Error);
  EXPECT_THROW(PushOut::make(half, full), Error);
  EXPECT_NO_THROW(PushOut::make(half, half));
}

TEST(SubgroupOrbits, RepresentativesPerType) {
  EXPECT_EQ(subgroup_orbit_reps(named("D8"), named("C2xC2")).size(), 1u);
  EXPECT_EQ(subgroup_orbit_reps(named("D8"), named("C2")).size(), 2u);
  EXPECT_EQ(subgroup_orbit_reps(named("C4xC2"), named("C2")).size(), 2u);
  EXPECT_EQ(subgroup_orbit_reps(named("Q8"), named("C2xC2")).size(), 0u);
}

TEST(Sweep, SmallPairsAgree) {
  std::vector<GroupPtr> groups = {named("C4"), named("C2xC2"), named("S3"), named("D8"), named("Q8")};
  auto result = oracle_sweep(groups, 4, {}, true);
  EXPECT_TRUE(result.all_agree());
  EXPECT_GT(result.cases.size(), 10u);
  for (const auto& c : result.cases) {
    ASSERT_TRUE(c.pairwise_count.has_value());
    EXPECT_EQ(*c.pairwise_count, c.oracle_count) << c.g1_label << " " << c.h_label << " " << c.g2_label;
  }
}

TEST(IsoClasses, SwapCountIgnoresChoiceOfGamma) {
  // Every gamma' = gamma beta with beta in Aut_{G1}(H1) gives the twist
  // xi' = xi . restriction(beta); the class count must not move.
  for (const auto& name : {"D8", "Q8", "D12", "A4", "C4xC2", "S4"}) {
    auto g = named(name);
    for (const auto& s : enumerate_subgroups(g).subgroups) {
      if (s.size() == 1 || s.size() == g->order()) continue;
      auto d = fixed_subgroup_data(g, s, g, s);
      ASSERT_GE(d.xi, 0);
      const auto& out = d.out_h->group;
      const Element xi = d.out_h->project(d.xi);
      auto decomp = double_cosets(out, d.r2.tilde_image, d.r1.tilde_image);
      std::set<std::size_t> counts;
      for (Element a : d.r1.tilde_image.elements())
        counts.insert(c2_orbits(decomp, TwistedInvolution{out, out->mul(xi, a)}).count);
      EXPECT_EQ(counts.size(), 1u) << name;
      EXPECT_EQ(*counts.begin(), count_classes_fixed_subgroups(g, s, g, s).count) << name;
    }
  }
}
