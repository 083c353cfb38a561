// Acceptance checks, one line per criterion:
//   C<n> PASS|FAIL <seconds>s <summary>
// Usage: amalgenus_acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amalgenus/amalgam.hpp"
#include "amalgenus/catalog.hpp"
#include "amalgenus/genus.hpp"
#include "amalgenus/serialize.hpp"
#include "brute.hpp"

using namespace amalgenus;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  double seconds;  // time limit
  std::function<void(Outcome&)> body;
};

GroupPtr named(const std::string& n) { return builtin_group(n)->group; }

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Element>(i);
  return m;
}

void d8_klein(Outcome& o) {
  auto e = *builtin_group("D8");
  const auto& k = e.subgroups.at("klein");
  auto family = count_classes_pushout_family(named("C2xC2"), e.group, e.group);
  auto fixed = count_classes_fixed_subgroups(e.group, k, e.group, k);
  auto genus = genus_fixed(derive_genus_input(e.group, k, e.group, k));
  o.require(family.count == 2, "push-out family count " + std::to_string(family.count) + " != 2");
  o.require(fixed.count == 2, "fixed-subgroup count " + std::to_string(fixed.count) + " != 2");
  o.require(genus.value == 1, "genus " + std::to_string(genus.value) + " != 1");
  o.note << (o.pass ? "" : " | ") << "family " << family.count << ", fixed " << fixed.count
         << ", genus " << genus.value;
}

void d8_c4(Outcome& o) {
  auto e = *builtin_group("D8");
  const auto& c4 = e.subgroups.at("c4");
  auto family = count_classes_pushout_family(named("C4"), e.group, e.group);
  std::size_t doubles = 0;
  for (const auto& p : family.representatives)
    if (is_double(p)) ++doubles;
  auto fixed = count_classes_fixed_subgroups(e.group, c4, e.group, c4);
  auto genus = genus_fixed(derive_genus_input(e.group, c4, e.group, c4));
  o.require(doubles == family.representatives.size(), "a representative is not the double");
  o.require(family.count == 1, "push-out family count " + std::to_string(family.count) + " != 1");
  o.require(fixed.count == 1, "fixed-subgroup count " + std::to_string(fixed.count) + " != 1");
  o.require(genus.value == 1, "genus " + std::to_string(genus.value) + " != 1");
  o.note << (o.pass ? "" : " | ") << doubles << "/" << family.representatives.size()
         << " representatives are doubles, classes " << fixed.count << ", genus " << genus.value;
}

void gl2_borel(Outcome& o) {
  auto g1 = *builtin_group("GL2F2");
  auto g2 = *builtin_group("GL2F2op");
  const auto& b1 = g1.subgroups.at("borel_upper");
  const auto& b2 = g2.subgroups.at("borel_lower");
  o.require(find_isomorphism(g1.group, symmetric_group(3)).has_value(), "GL2(F2) is not S3");
  // Transpose is an isomorphism GL2(F2) -> GL2(F2)^op carrying the upper
  // Borel onto the lower one.
  std::vector<Element> transpose(g1.group->order());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if ((a * d + b * c) % 2 == 1)
            transpose[static_cast<std::size_t>(matrix_element(2, 2, {a, b, c, d}))] =
                matrix_element(2, 2, {a, c, b, d});
  o.require(is_homomorphism(*g1.group, *g2.group, transpose), "transpose is not an isomorphism onto the opposite");
  auto c = check_simplifications(g1.group, b1, g2.group, b2);
  o.require(c.self_normalizing[0] && c.self_normalizing[1], "Borel not self-normalizing in both factors");
  auto genus = genus_fixed(derive_genus_input(g1.group, b1, g2.group, b2));
  auto pushout = genus_pushout(g1.group, b1, g2.group, b2);
  o.require(genus.value == 1, "genus " + std::to_string(genus.value) + " != 1");
  o.require(pushout.value == 1, "push-out genus " + std::to_string(pushout.value) + " != 1");
  o.note << (o.pass ? "" : " | ") << "self-normalizing " << c.self_normalizing[0] << "/"
         << c.self_normalizing[1] << ", genus " << genus.value << ", push-out genus " << pushout.value;
}

void oracle_equivalence(Outcome& o) {
  std::vector<GroupPtr> groups;
  for (const auto& e : small_catalog()) groups.push_back(e.group);
  auto sweep = oracle_sweep(groups, 6, {}, true);
  for (const auto& c : sweep.cases)
    o.require(c.agree, c.g1_label + " *_" + c.h_label + " " + c.g2_label + ": " + c.counterexample);

  // Second opinion from the test-side oracle (explicit full groups, no
  // generators) wherever the bijection scan is affordable.
  std::size_t brute_checked = 0;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i; j < groups.size(); ++j) {
      const auto& g1 = groups[i];
      const auto& g2 = groups[j];
      if (g1->order() > 8 || g2->order() > 8) continue;
      for (const auto& h : common_subgroup_types(g1, g2, 6)) {
        auto ident = identity_map(g1->order());
        auto expected = brute::pushout_orbits(*h, *g1, *g2, i == j ? &ident : nullptr);
        auto formula = count_classes_pushout_formula(h, g1, g2).count;
        o.require(formula == expected, g1->label() + " *_" + h->label() + " " + g2->label() +
                                           ": formula " + std::to_string(formula) + " vs brute " +
                                           std::to_string(expected));
        ++brute_checked;
      }
    }
  o.note << (o.pass ? "" : " | ") << sweep.agreed << "/" << sweep.cases.size()
         << " instances agree (pairwise-checked), " << brute_checked << " rechecked by the bijection oracle";
}

bool is_normal_in(const Subgroup& n, const Subgroup& a) {
  const auto& g = n.parent();
  for (Element x : a.elements())
    for (Element y : n.elements())
      if (!n.contains(g.conjugate(x, y))) return false;
  return true;
}

void normalizer_shadow(Outcome& o) {
  auto cat = small_catalog();
  std::size_t amalgams = 0, genus_values = 0;
  std::map<const FiniteGroup*, AutPtr> auts;
  auto aut_of = [&](const GroupPtr& g) {
    auto& a = auts[g.get()];
    if (!a) a = compute_aut(g);
    return a;
  };
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i; j < cat.size(); ++j) {
      const auto& g1 = cat[i].group;
      const auto& g2 = cat[j].group;
      for (const auto& h : common_subgroup_types(g1, g2, 6)) {
        if (h->order() == 1) continue;
        for (const auto& h1 : subgroup_orbit_reps(g1, h))
          for (const auto& h2 : subgroup_orbit_reps(g2, h)) {
            auto data = fixed_subgroup_data(g1, h1, g2, h2, {}, aut_of(g1), aut_of(g2));
            const std::string where = g1->label() + " *_" + h->label() + " " + g2->label();
            const auto& out = data.out_h->group;
            // Conjugation by H itself sits in each normalizer image.
            const auto& inn = data.aut_h->inn;
            o.require(inn.is_subset_of(data.r1.bar_normalizer) && inn.is_subset_of(data.r2.bar_normalizer),
                      where + ": Inn(H) not inside the normalizer image");
            o.require(is_normal_in(data.r1.bar_normalizer, data.r1.bar_image) &&
                          is_normal_in(data.r2.bar_normalizer, data.r2.bar_image),
                      where + ": normalizer image not normal in the restriction image");
            o.require(is_normal_in(data.r1.tilde_normalizer, data.r1.tilde_image) &&
                          is_normal_in(data.r2.tilde_normalizer, data.r2.tilde_image),
                      where + ": Out-level normalizer image not normal");
            auto ng = subgroup_generated(out, set_union(data.r1.tilde_normalizer.elements(),
                                                        data.r2.tilde_normalizer.elements()));
            o.require(data.r1.tilde_normalizer.is_subset_of(ng) && data.r2.tilde_normalizer.is_subset_of(ng),
                      where + ": generated normalizer misses a factor");
            auto bound = normalizer_bound(data.out_h, data.r1.tilde_normalizer, data.r2.tilde_normalizer);
            for (auto policy : {NplusPolicy::kLower, NplusPolicy::kUpper}) {
              auto g = genus_fixed(genus_input_from(data, policy));
              o.require(bound.value >= g.value, where + ": bound " + std::to_string(bound.value) +
                                                    " < genus " + std::to_string(g.value) + " (" +
                                                    to_string(policy) + ")");
              ++genus_values;
            }
            ++amalgams;
          }
      }
    }
  o.note << (o.pass ? "" : " | ") << amalgams << " amalgams, " << genus_values
         << " genus values under the bound";
}

void twisted_c2(Outcome& o) {
  std::vector<CatalogEntry> cat;
  for (auto& e : extended_catalog())
    if (e.group->order() <= 24) cat.push_back(std::move(e));
  std::map<std::string, std::vector<Subgroup>> subs;
  for (const auto& e : cat) subs[e.name] = enumerate_subgroups(e.group).subgroups;

  std::mt19937 rng(20260101);
  std::size_t violations = 0, classes_seen = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const auto& e = cat[rng() % cat.size()];
    const auto& g = e.group;
    const auto& list = subs[e.name];
    const auto& a1 = list[rng() % list.size()];
    const auto xi = static_cast<Element>(rng() % g->order());
    const auto a2 = conjugate_subgroup(a1, xi);
    // Carrier: the whole group, or S = K u xi K^-1 xi for K = A2 X A1.
    ElementSet carrier;
    if (rng() % 3 == 0) {
      carrier = whole_group(g).elements();
    } else {
      ElementSet x;
      for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) x.push_back(static_cast<Element>(rng() % g->order()));
      x.push_back(g->identity());
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
      auto k = product_set(*g, a2.elements(), x, a1.elements());
      carrier = set_union(k, twist_inverse(*g, xi, k));
    }
    // Independent check on explicit double cosets.
    std::map<Element, int> class_of;
    std::vector<std::set<Element>> classes;
    for (Element a : carrier) {
      if (class_of.count(a)) continue;
      std::set<Element> cls;
      for (Element u : a2.elements())
        for (Element v : a1.elements()) cls.insert(g->mul(g->mul(u, a), v));
      for (Element m : cls) class_of[m] = static_cast<int>(classes.size());
      classes.push_back(std::move(cls));
    }
    auto twist = [&](Element a) { return g->mul(g->mul(xi, g->inv(a)), xi); };
    std::set<int> fixed_or_paired;
    std::size_t orbits = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::set<int> images;
      for (Element m : classes[c]) {
        auto it = class_of.find(twist(m));
        images.insert(it == class_of.end() ? -1 : it->second);
      }
      const bool well_defined = images.size() == 1 && *images.begin() >= 0;
      if (!well_defined) {
        ++violations;
        continue;
      }
      const int img = *images.begin();
      // Involution: the image class maps back.
      std::set<int> back;
      for (Element m : classes[static_cast<std::size_t>(img)]) back.insert(class_of.at(twist(m)));
      if (back != std::set<int>{static_cast<int>(c)}) ++violations;
      if (img >= static_cast<int>(c)) ++orbits;
    }
    // Library agreement.
    try {
      auto d = double_cosets(g, a2, a1, carrier);
      auto lib = c2_orbits(d, TwistedInvolution{g, xi});
      if (d.count() != classes.size() || lib.count != orbits) ++violations;
    } catch (const Error& err) {
      ++violations;
      o.require(false, std::string("library rejected a valid configuration: ") + err.what());
    }
    classes_seen += classes.size();
  }
  o.require(violations == 0, std::to_string(violations) + " law violations");
  o.note << (o.pass ? "" : " | ") << trials << " configurations, " << classes_seen
         << " double cosets, " << violations << " violations";
}

void aut_checks(Outcome& o) {
  struct Want {
    const char* name;
    std::size_t aut;
    std::size_t out;
  };
  for (const auto& w : {Want{"C2xC2", 6, 6}, Want{"D8", 8, 2}, Want{"S3", 6, 1}}) {
    auto g = named(w.name);
    auto aut = compute_aut(g);
    auto out = out_quotient(aut);
    auto scan = brute::automorphisms(*g);
    o.require(aut->order() == w.aut, std::string(w.name) + ": |Aut| = " + std::to_string(aut->order()));
    o.require(out->order() == w.out, std::string(w.name) + ": |Out| = " + std::to_string(out->order()));
    o.require(scan.size() == w.aut && aut->maps == scan, std::string(w.name) + ": bijection scan disagrees");
    o.note << (o.note.tellp() > 0 ? ", " : "") << w.name << " |Aut| " << aut->order() << " |Out| "
           << out->order() << " (scan " << scan.size() << ")";
  }
}

void nplus_bracket(Outcome& o) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(fs::path(AMALGENUS_TEST_DATA) / "abstract"))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::size_t cases = 0, bracket_ok = 0;
  for (const auto& f : files) {
    auto doc = read_json_file(f.string());
    if (!doc.contains("N1") || !doc.contains("N2")) continue;
    auto in = genus_input_from_json(doc);
    auto lower = genus_fixed(with_nplus_policy(in, NplusPolicy::kLower)).value;
    auto upper = genus_fixed(with_nplus_policy(in, NplusPolicy::kUpper)).value;
    const auto& out = in.out_h->group;
    const Element one[] = {out->identity()};
    auto joined = subgroup_generated(out, set_union(in.n1->elements(), in.n2->elements()));
    const bool condition = !in.conditions.empty() || out->is_abelian() ||
                           joined.elements() == product_set(*out, in.n2->elements(), one, in.n1->elements());
    const std::string name = f.filename().string();
    o.require(lower >= upper, name + ": lower " + std::to_string(lower) + " < upper " + std::to_string(upper));
    if (condition) o.require(lower == upper, name + ": condition holds but proxies differ");
    if (lower <= upper) ++bracket_ok;
    ++cases;
  }
  o.require(cases > 0, "no abstract fixtures with normalizer data");
  o.note << (o.pass ? "" : " | ") << cases << " fixtures; lower <= upper holds in " << bracket_ok << "/"
         << cases << " (stated direction lower >= upper)";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amalgenus acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, 5, d8_klein},         {2, 5, d8_c4},         {3, 5, gl2_borel},    {4, 600, oracle_equivalence},
      {5, 60, normalizer_shadow}, {6, 60, twisted_c2}, {7, 60, aut_checks}, {8, 60, nplus_bracket},
  };
  bool all_pass = true;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.seconds) o.require(false, "exceeded " + std::to_string(static_cast<int>(c.seconds)) + " s");
    std::cout << "C" << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << std::fixed
              << std::setprecision(2) << secs << "s " << o.note.str() << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
