#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "amalgenus/amalgam.hpp"
#include "amalgenus/catalog.hpp"
#include "amalgenus/genus.hpp"
#include "amalgenus/serialize.hpp"

namespace amalgenus::cli {

namespace {

struct Output {
  Json doc;
  std::string text;
};

Subgroup resolve_subgroup(const CatalogEntry& entry, const std::string& spec, const char* flag) {
  if (spec.empty()) fail(ErrorKind::kInvalidInput, std::string(flag) + " is required");
  auto it = entry.subgroups.find(spec);
  if (it != entry.subgroups.end()) return it->second;
  if (spec.front() == '[') {
    try {
      return Subgroup::from_elements(entry.group, Json::parse(spec).get<ElementSet>());
    } catch (const Json::exception& e) {
      fail(ErrorKind::kInvalidInput, std::string(flag) + ": " + e.what());
    }
  }
  std::string names;
  for (const auto& [name, s] : entry.subgroups) names += (names.empty() ? "" : ", ") + name;
  fail(ErrorKind::kInvalidInput, std::string(flag) + " '" + spec + "' is not a named subgroup of " +
                                     entry.name + (names.empty() ? "" : " (known: " + names + ")"));
}

struct Factors {
  CatalogEntry e1, e2;
  Subgroup h1, h2;
};

Factors load_factors(const RunConfig& c, const Limits& limits) {
  if (c.g1.empty() || c.g2.empty()) fail(ErrorKind::kInvalidInput, "--g1 and --g2 are required");
  auto e1 = load_group(c.g1, limits);
  auto e2 = load_group(c.g2, limits);
  auto h1 = resolve_subgroup(e1, c.h1, "--h1");
  auto h2 = resolve_subgroup(e2, c.h2, "--h2");
  return Factors{std::move(e1), std::move(e2), std::move(h1), std::move(h2)};
}

NplusPolicy policy_of(const RunConfig& c, NplusPolicy fallback) {
  if (!c.nplus) return fallback;
  auto p = parse_nplus_policy(*c.nplus);
  if (!p) fail(ErrorKind::kInvalidInput, "--nplus must be exact, lower or upper");
  return *p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Output cmd_aut(const RunConfig& c, const Limits& limits) {
  if (c.group.empty()) fail(ErrorKind::kInvalidInput, "--group is required");
  auto e = load_group(c.group, limits);
  auto aut = compute_aut(e.group, limits);
  auto out = out_quotient(aut);
  std::ostringstream t;
  t << "group " << e.group->label() << " of order " << e.group->order() << "\n"
    << "|Aut| = " << aut->order() << ", |Inn| = " << aut->inn.size() << ", |Out| = " << out->order()
    << (out->group->is_abelian() ? " (abelian)" : " (nonabelian)") << "\n";
  return {aut_report(*aut, *out), t.str()};
}

Output cmd_subgroups(const RunConfig& c, const Limits& limits) {
  if (c.group.empty()) fail(ErrorKind::kInvalidInput, "--group is required");
  auto e = load_group(c.group, limits);
  auto list = enumerate_subgroups(e.group, limits);
  std::ostringstream t;
  t << list.size() << " subgroups of " << e.group->label() << "\n";
  for (const auto& s : list.subgroups) {
    t << "  order " << s.size() << ":";
    for (Element x : s.elements()) t << " " << x;
    t << "\n";
  }
  return {subgroups_report(list), t.str()};
}

Output cmd_iso_classes(const RunConfig& c, const Limits& limits) {
  auto f = load_factors(c, limits);
  auto formula = count_classes_fixed_subgroups(f.e1.group, f.h1, f.e2.group, f.h2, limits);
  auto oracle = count_classes_fixed_oracle(f.e1.group, f.h1, f.e2.group, f.h2, limits);
  auto h = induced_group(f.h1, "H");
  auto family = count_classes_pushout_formula(h, f.e1.group, f.e2.group, limits);
  auto family_oracle = count_classes_pushout_family(h, f.e1.group, f.e2.group, limits);
  Json doc{{"fixed_subgroups", to_json(formula)},
           {"fixed_subgroups_oracle", to_json(oracle)},
           {"pushout_family", to_json(family)},
           {"pushout_family_oracle", to_json(family_oracle)},
           {"agree", formula.count == oracle.count && family.count == family_oracle.count}};
  std::ostringstream t;
  t << "fixed subgroups: " << formula.count << " (oracle " << oracle.count << ")"
    << (formula.symmetric ? ", symmetric" : "") << "\n"
    << "push-out family: " << family.count << " (oracle " << family_oracle.count << ")\n";
  return {doc, t.str()};
}

Output cmd_genus(const RunConfig& c, const Limits& limits) {
  std::ostringstream t;
  if (!c.input.empty()) {
    auto in = genus_input_from_json(read_json_file(c.input), limits);
    auto policy = policy_of(c, NplusPolicy::kExact);
    in = with_nplus_policy(std::move(in), policy);
    auto rep = genus_fixed(in);
    t << "genus = " << rep.value << " [" << to_string(rep.mode) << ", N+ " << to_string(policy) << "]\n";
    return {Json{{"genus", to_json(rep)}, {"input", genus_input_to_json(in)}}, t.str()};
  }
  auto f = load_factors(c, limits);
  auto policy = policy_of(c, NplusPolicy::kUpper);
  if (policy == NplusPolicy::kExact)
    fail(ErrorKind::kInvalidInput, "--nplus exact needs an abstract --input file");
  auto in = derive_genus_input(f.e1.group, f.h1, f.e2.group, f.h2, limits, policy);
  auto rep = genus_fixed(in);
  auto lower = genus_fixed(with_nplus_policy(in, NplusPolicy::kLower));
  auto upper = genus_fixed(with_nplus_policy(in, NplusPolicy::kUpper));
  auto classes = count_classes_fixed_subgroups(f.e1.group, f.h1, f.e2.group, f.h2, limits);
  Json doc{{"genus", to_json(rep)},
           {"iso_classes", to_json(classes)},
           {"bracket", {{"lower", lower.value}, {"upper", upper.value}}},
           {"input", genus_input_to_json(in)}};
  t << "genus = " << rep.value << " [" << to_string(rep.mode) << ", N+ " << to_string(policy)
    << (rep.nplus_is_proxy ? " proxy" : "") << "]\n"
    << "iso classes = " << classes.count << "\n"
    << "bracket: lower " << lower.value << ", upper " << upper.value << "\n";
  if (rep.normalizer_bound) t << "normalizer bound = " << *rep.normalizer_bound << "\n";
  for (const auto& cond : rep.conditions) t << "condition: " << cond << "\n";
  return {doc, t.str()};
}

Output cmd_genus_pushout(const RunConfig& c, const Limits& limits) {
  std::ostringstream t;
  GenusReport rep;
  if (!c.input.empty()) {
    auto doc = read_json_file(c.input);
    if (!doc.contains("pairs") || !doc.at("pairs").is_array())
      fail(ErrorKind::kInvalidInput, "genus-pushout input needs a pairs list");
    auto policy = policy_of(c, NplusPolicy::kExact);
    std::vector<GenusInput> pairs;
    for (const auto& p : doc.at("pairs"))
      pairs.push_back(with_nplus_policy(genus_input_from_json(p, limits), policy));
    rep = genus_pushout(pairs);
  } else {
    auto f = load_factors(c, limits);
    auto policy = policy_of(c, NplusPolicy::kUpper);
    if (policy == NplusPolicy::kExact)
      fail(ErrorKind::kInvalidInput, "--nplus exact needs an abstract --input file");
    rep = genus_pushout(f.e1.group, f.h1, f.e2.group, f.h2, limits, policy);
  }
  t << "push-out genus = " << rep.value << "\n";
  for (const auto& [label, v] : rep.parts) t << "  " << label << ": " << v << "\n";
  return {Json{{"genus_pushout", to_json(rep)}}, t.str()};
}

Output cmd_oracle_sweep(const RunConfig& c, const Limits& limits) {
  std::vector<GroupPtr> groups;
  std::size_t max_h = c.max_h;
  if (c.catalog.empty() || c.catalog == "small") {
    for (const auto& e : small_catalog()) groups.push_back(e.group);
  } else {
    auto doc = read_json_file(c.catalog);
    if (!doc.contains("groups") || !doc.at("groups").is_array())
      fail(ErrorKind::kInvalidInput, "catalog needs a groups list");
    for (const auto& g : doc.at("groups")) groups.push_back(group_from_json(g, limits).group);
    if (doc.contains("max_h")) max_h = doc.at("max_h").get<std::size_t>();
  }
  auto result = oracle_sweep(groups, max_h, limits, c.pairwise);
  std::ostringstream t;
  for (const auto& r : result.cases)
    if (!r.agree)
      t << "DISAGREE " << r.g1_label << " *_" << r.h_label << " " << r.g2_label << ": "
        << r.counterexample << "\n";
  t << result.agreed << "/" << result.cases.size() << " instances agree\n";
  return {to_json(result), t.str()};
}

Output cmd_conditions(const RunConfig& c, const Limits& limits) {
  auto f = load_factors(c, limits);
  auto cond = check_simplifications(f.e1.group, f.h1, f.e2.group, f.h2, limits);
  std::ostringstream t;
  t << "central: " << yes_no(cond.central[0]) << "/" << yes_no(cond.central[1]) << "\n"
    << "direct factor of normalizer: " << yes_no(cond.direct_factor[0]) << "/"
    << yes_no(cond.direct_factor[1]) << "\n"
    << "Out(H) abelian: " << yes_no(cond.out_abelian) << "\n"
    << "self-normalizing: " << yes_no(cond.self_normalizing[0]) << "/"
    << yes_no(cond.self_normalizing[1]) << "\n"
    << "retract: " << yes_no(cond.retract[0]) << "/" << yes_no(cond.retract[1]) << "\n"
    << "N+ eliminable: " << yes_no(cond.nplus_eliminable) << "\n";
  return {Json{{"conditions", to_json(cond)}}, t.str()};
}

Output dispatch(const RunConfig& c, const Limits& limits) {
  if (c.command == "aut") return cmd_aut(c, limits);
  if (c.command == "subgroups") return cmd_subgroups(c, limits);
  if (c.command == "iso-classes") return cmd_iso_classes(c, limits);
  if (c.command == "genus") return cmd_genus(c, limits);
  if (c.command == "genus-pushout") return cmd_genus_pushout(c, limits);
  if (c.command == "oracle-sweep") return cmd_oracle_sweep(c, limits);
  if (c.command == "conditions") return cmd_conditions(c, limits);
  fail(ErrorKind::kInvalidInput, "unknown command '" + c.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "text")
      fail(ErrorKind::kInvalidInput, "--format must be json or text");
    Limits limits = Limits::from_environment();
    if (config.aut_budget) {
      if (*config.aut_budget == 0) fail(ErrorKind::kInvalidInput, "--aut-budget must be positive");
      limits.search_budget = *config.aut_budget;
    }
    if (config.oracle_limit) {
      if (*config.oracle_limit == 0) fail(ErrorKind::kInvalidInput, "--oracle-limit must be positive");
      limits.oracle_limit = *config.oracle_limit;
    }
    auto result = dispatch(config, limits);
    const bool disagreement =
        config.command == "oracle-sweep" && !result.doc.value("all_agree", false);
    if (disagreement) err << "oracle sweep found disagreements\n";
    std::string body;
    if (config.format == "json") {
      result.doc["command"] = config.command;
      body = dump_document(std::move(result.doc));
    } else {
      body = result.text;
    }
    if (config.output.empty()) {
      out << body;
    } else {
      std::ofstream f(config.output, std::ios::binary);
      if (!f) fail(ErrorKind::kInvalidInput, "cannot write " + config.output);
      f << body;
    }
    if (disagreement) return kExitInternal;
    return kExitOk;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    if (e.is_budget()) return kExitBudget;
    if (e.is_internal()) return kExitInternal;
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int main_from_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isomorphism classes and profinite genus of amalgamated free products of finite groups"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", c.output, "write the report here instead of stdout");
    sub->add_option("--aut-budget", c.aut_budget, "search node budget for automorphism searches");
    sub->add_option("--oracle-limit", c.oracle_limit, "largest injection-pair carrier for the oracle");
  };
  auto add_factors = [&](CLI::App* sub) {
    sub->add_option("--g1", c.g1, "group file or built-in name")->required();
    sub->add_option("--h1", c.h1, "named subgroup of G1, or a JSON element list")->required();
    sub->add_option("--g2", c.g2, "group file or built-in name")->required();
    sub->add_option("--h2", c.h2, "named subgroup of G2, or a JSON element list")->required();
  };

  auto* aut = app.add_subcommand("aut", "automorphism group, Inn and Out");
  aut->add_option("--group", c.group, "group file or built-in name")->required();
  add_common(aut);

  auto* subs = app.add_subcommand("subgroups", "enumerate all subgroups");
  subs->add_option("--group", c.group, "group file or built-in name")->required();
  add_common(subs);

  auto* iso = app.add_subcommand("iso-classes", "isomorphism classes of G1 *_H G2, formula and oracle");
  add_factors(iso);
  add_common(iso);

  auto* genus = app.add_subcommand("genus", "genus of G1 *_H G2 over fixed subgroups");
  genus->add_option("--g1", c.g1, "group file or built-in name");
  genus->add_option("--h1", c.h1, "named subgroup of G1, or a JSON element list");
  genus->add_option("--g2", c.g2, "group file or built-in name");
  genus->add_option("--h2", c.h2, "named subgroup of G2, or a JSON element list");
  genus->add_option("--input", c.input, "abstract genus input file");
  genus->add_option("--nplus", c.nplus, "exact, lower or upper");
  add_common(genus);

  auto* gp = app.add_subcommand("genus-pushout", "genus summed over subgroup pairs");
  gp->add_option("--g1", c.g1, "group file or built-in name");
  gp->add_option("--h1", c.h1, "named subgroup of G1, or a JSON element list");
  gp->add_option("--g2", c.g2, "group file or built-in name");
  gp->add_option("--h2", c.h2, "named subgroup of G2, or a JSON element list");
  gp->add_option("--input", c.input, "file with a pairs list of abstract genus inputs");
  gp->add_option("--nplus", c.nplus, "exact, lower or upper");
  add_common(gp);

  auto* sweep = app.add_subcommand("oracle-sweep", "formula vs brute-force orbits over a catalog");
  sweep->add_option("--catalog", c.catalog, "catalog file, or 'small' for the built-in groups of order <= 12");
  sweep->add_option("--max-h", c.max_h, "largest amalgamated subgroup order");
  sweep->add_flag("--pairwise", c.pairwise, "also classify orbit representatives pairwise");
  add_common(sweep);

  auto* cond = app.add_subcommand("conditions", "simplification conditions for N+");
  add_factors(cond);
  add_common(cond);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitValidation;
  }
  c.command = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace amalgenus::cli
