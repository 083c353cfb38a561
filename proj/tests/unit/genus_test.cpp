#include <gtest/gtest.h>

#include "amalgenus/catalog.hpp"
#include "amalgenus/genus.hpp"
#include "amalgenus/serialize.hpp"

using namespace amalgenus;

namespace {

CatalogEntry d8() { return *builtin_group("D8"); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

GenusInput fixture(const std::string& name) {
  return genus_input_from_json(read_json_file(std::string(AMALGENUS_TEST_DATA) + "/abstract/" + name));
}

// Every proper, nontrivial subgroup pair (H, H) of the catalog group, used
// as symmetric amalgams G *_H G.
template <typename F>
void for_each_self_amalgam(const std::vector<std::string>& names, F&& f) {
  for (const auto& n : names) {
    auto g = builtin_group(n)->group;
    for (const auto& s : enumerate_subgroups(g).subgroups)
      if (s.size() > 1 && s.size() < g->order()) f(n, g, s);
  }
}

}  // namespace

TEST(Genus, D8KleinDerivedInput) {
  auto e = d8();
  const auto& k = e.subgroups.at("klein");
  auto in = derive_genus_input(e.group, k, e.group, k);
  EXPECT_EQ(in.out_h->order(), 6u);
  EXPECT_EQ(in.a1.size(), 2u);
  EXPECT_EQ(in.a1, in.a2);
  EXPECT_EQ(in.a1, in.ahat1);
  EXPECT_EQ(in.mode, GenusMode::kSymmetric);
  ASSERT_TRUE(in.xi.has_value());
  EXPECT_EQ(*in.xi, in.out_h->group->identity());
  EXPECT_TRUE(in.nplus_is_proxy);

  auto rep = genus_fixed(in);
  EXPECT_EQ(rep.value, 1u);
  ASSERT_TRUE(rep.decomposition.has_value());
  EXPECT_EQ(rep.decomposition->count(), 1u);
  ASSERT_TRUE(rep.normalizer_bound.has_value());
  EXPECT_GE(*rep.normalizer_bound, rep.value);
  EXPECT_FALSE(rep.provenance.empty());
}

TEST(Genus, AbstractFixtures) {
  EXPECT_EQ(genus_fixed(fixture("c7_trivial_images.json")).value, 6u);
  EXPECT_EQ(genus_fixed(fixture("c7_double.json")).value, 4u);
  EXPECT_EQ(genus_fixed(fixture("v4_symmetric.json")).value, 1u);
  EXPECT_EQ(genus_fixed(fixture("v4_three_cycle.json")).value, 3u);

  auto t = fixture("v4_transpositions.json");
  EXPECT_EQ(genus_fixed(with_nplus_policy(t, NplusPolicy::kLower)).value, 1u);
  EXPECT_EQ(genus_fixed(with_nplus_policy(t, NplusPolicy::kUpper)).value, 2u);
  EXPECT_EQ(normalizer_bound(t.out_h, *t.n1, *t.n2).value, 2u);
}

TEST(Genus, DoubleMode) {
  auto in = fixture("c7_double.json");
  auto rep = genus_double(in);
  EXPECT_EQ(rep.value, 4u);
  ASSERT_TRUE(rep.pairing.has_value());
  EXPECT_EQ(rep.pairing->pairs.size(), 2u);
  in.double_c2 = false;
  EXPECT_EQ(genus_double(in).value, 6u);
  in.a1 = in.ahat1;
  in.a2 = in.ahat1;
  in.double_c2 = true;
  EXPECT_EQ(genus_double(in).value, 1u);
}

TEST(Genus, ModesOverTheSameData) {
  // Out(C7) = C6 with trivial discrete images: K = C6, S = K.
  auto in = fixture("c7_trivial_images.json");
  in.xi = in.out_h->group->identity();
  in.mode = GenusMode::kProfsymmetricNonsymmetric;
  EXPECT_EQ(genus_fixed(in).value, 6u);
  in.mode = GenusMode::kSymmetric;
  EXPECT_EQ(genus_fixed(in).value, 4u);
}

TEST(Genus, InputValidation) {
  auto in = fixture("v4_transpositions.json");
  auto missing = in;
  missing.mode = GenusMode::kSymmetric;
  EXPECT_EQ(kind_of([&] { genus_fixed(missing); }), ErrorKind::kMissingXi);
  auto no_identity = in;
  no_identity.nplus = {in.a1.elements().back()};
  EXPECT_EQ(kind_of([&] { genus_fixed(no_identity); }), ErrorKind::kInvalidInput);
  auto outside = in;
  outside.ahat1 = trivial_subgroup(in.out_h->group);
  EXPECT_EQ(kind_of([&] { genus_fixed(outside); }), ErrorKind::kInvalidInput);
  auto no_normalizers = in;
  no_normalizers.n1.reset();
  EXPECT_EQ(kind_of([&] { with_nplus_policy(no_normalizers, NplusPolicy::kUpper); }),
            ErrorKind::kInvalidInput);
  // xi = e does not conjugate A1 onto A2 here.
  auto bad_xi = fixture("v4_transpositions.json");
  bad_xi.mode = GenusMode::kSymmetric;
  bad_xi.xi = bad_xi.out_h->group->identity();
  EXPECT_THROW(genus_fixed(bad_xi), Error);
}

TEST(Genus, ConditionsOnNamedExamples) {
  auto e = d8();
  const auto& z = e.subgroups.at("center");
  auto c = check_simplifications(e.group, z, e.group, z);
  EXPECT_TRUE(c.central[0]);
  EXPECT_TRUE(c.central[1]);
  EXPECT_TRUE(c.any());

  const auto& k = e.subgroups.at("klein");
  auto ck = check_simplifications(e.group, k, e.group, k);
  EXPECT_FALSE(ck.out_abelian);
  EXPECT_FALSE(ck.central[0]);
  EXPECT_FALSE(ck.self_normalizing[0]);

  auto gl = builtin_group("GL2F2");
  auto glop = builtin_group("GL2F2op");
  auto cb = check_simplifications(gl->group, gl->subgroups.at("borel_upper"), glop->group,
                                  glop->subgroups.at("borel_lower"));
  EXPECT_TRUE(cb.self_normalizing[0]);
  EXPECT_TRUE(cb.self_normalizing[1]);
  EXPECT_TRUE(cb.retract[0]);
}

TEST(Genus, BoundFiniteNeedsNonsymmetricInput) {
  auto e = d8();
  const auto& k = e.subgroups.at("klein");
  EXPECT_EQ(kind_of([&] { genus_bound_finite(e.group, k, e.group, k); }),
            ErrorKind::kSymmetricInputForNonsymmetricBound);
  // D8 and Q8 over their centers: not symmetric, both normalizer images trivial.
  auto q8 = builtin_group("Q8")->group;
  auto zq = center(q8);
  auto rep = genus_bound_finite(e.group, e.subgroups.at("center"), q8, zq);
  EXPECT_TRUE(rep.is_bound);
  EXPECT_EQ(rep.value, 1u);
}

TEST(Genus, NeverExceedsIsoClassCount) {
  for_each_self_amalgam({"D8", "Q8", "D12", "A4", "C4xC2", "C2^3"},
                        [](const std::string& n, const GroupPtr& g, const Subgroup& s) {
                          auto classes = count_classes_fixed_subgroups(g, s, g, s);
                          for (auto p : {NplusPolicy::kLower, NplusPolicy::kUpper}) {
                            auto rep = genus_fixed(derive_genus_input(g, s, g, s, {}, p));
                            EXPECT_GE(rep.value, 1u) << n;
                            EXPECT_LE(rep.value, classes.count) << n;
                          }
                        });
}

TEST(Genus, ConditionsMakeProxiesCoincide) {
  for_each_self_amalgam({"D8", "Q8", "D12", "Dic12", "A4", "C4xC2", "S3", "C6xC2"},
                        [](const std::string& n, const GroupPtr& g, const Subgroup& s) {
                          auto c = check_simplifications(g, s, g, s);
                          auto lower = genus_fixed(derive_genus_input(g, s, g, s, {}, NplusPolicy::kLower));
                          auto upper = genus_fixed(derive_genus_input(g, s, g, s, {}, NplusPolicy::kUpper));
                          EXPECT_LE(lower.value, upper.value) << n;
                          if (c.any() || c.nplus_eliminable) {
                            EXPECT_EQ(lower.value, upper.value) << n;
                          }
                          if (c.out_abelian) {
                            EXPECT_TRUE(c.nplus_eliminable) << n;
                          }
                        });
}

TEST(Genus, OverridesPassThrough) {
  auto e = d8();
  const auto& k = e.subgroups.at("klein");
  auto base = derive_genus_input(e.group, k, e.group, k);
  GenusOverrides o;
  ElementSet all(base.out_h->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  o.ahat1 = all;
  o.ahat2 = all;
  auto in = derive_genus_input(e.group, k, e.group, k, {}, NplusPolicy::kUpper, o);
  EXPECT_EQ(in.ahat1.size(), 6u);
  EXPECT_EQ(in.a1.size(), 2u);
  EXPECT_GE(genus_fixed(in).value, 1u);
}

TEST(GenusPushout, FiniteCases) {
  auto e = d8();
  const auto& c4 = e.subgroups.at("c4");
  auto rep = genus_pushout(e.group, c4, e.group, c4);
  EXPECT_EQ(rep.value, 1u);
  EXPECT_EQ(rep.parts.size(), 1u);

  auto gl = builtin_group("GL2F2");
  auto glop = builtin_group("GL2F2op");
  EXPECT_EQ(genus_pushout(gl->group, gl->subgroups.at("borel_upper"), glop->group,
                          glop->subgroups.at("borel_lower"))
                .value,
            1u);

  auto s3 = builtin_group("S3")->group;
  auto t = trivial_subgroup(s3);
  EXPECT_EQ(genus_pushout(s3, t, s3, t).value, 1u);
}

TEST(GenusPushout, SumsSuppliedPairs) {
  auto doc = read_json_file(std::string(AMALGENUS_TEST_DATA) + "/abstract/v4_pushout_pairs.json");
  std::vector<GenusInput> pairs;
  for (const auto& p : doc.at("pairs")) pairs.push_back(genus_input_from_json(p));
  auto rep = genus_pushout(pairs);
  EXPECT_EQ(rep.value, 4u);
  ASSERT_EQ(rep.parts.size(), 2u);
  EXPECT_EQ(rep.parts[0].second, 1u);
  EXPECT_EQ(rep.parts[1].second, 3u);
}
