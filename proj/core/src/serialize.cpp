#include "amalgenus/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace amalgenus {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::kInvalidInput, msg); }

void check_schema(const Json& doc) {
  if (doc.contains("schema") && doc.at("schema") != kSchema)
    bad("unsupported schema " + doc.at("schema").dump());
}

template <typename F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(what + ": " + e.what());
  }
}

std::vector<std::vector<Element>> map_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be a list of map tables");
  return j.get<std::vector<std::vector<Element>>>();
}

ElementSet out_indices(const OutQuotient& out, const Json& j, const std::string& what) {
  ElementSet xs;
  for (const auto& m : map_list(j, what)) {
    Element e = out.find_map(m);
    if (e < 0) bad(what + " contains a map that is not an automorphism of H");
    xs.push_back(e);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Json maps_json(std::span<const Element> xs, const std::function<Json(Element)>& element) {
  Json arr = Json::array();
  for (Element x : xs) arr.push_back(element(x));
  return arr;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return guarded(path, [&] { return Json::parse(ss.str()); });
}

Subgroup subgroup_from_json(const GroupPtr& group, const Json& spec) {
  return guarded("subgroup", [&]() -> Subgroup {
    if (spec.contains("elements"))
      return Subgroup::from_elements(group, spec.at("elements").get<ElementSet>());
    if (spec.contains("generators"))
      return subgroup_generated(group, spec.at("generators").get<std::vector<Element>>());
    if (spec.contains("perm_generators")) {
      std::vector<Element> seed;
      for (const auto& p : spec.at("perm_generators").get<std::vector<Permutation>>())
        seed.push_back(permutation_element(*group, p));
      return subgroup_generated(group, seed);
    }
    bad("subgroup needs elements, generators or perm_generators");
  });
}

CatalogEntry group_from_json(const Json& doc, const Limits& limits) {
  return guarded("group", [&]() -> CatalogEntry {
    if (doc.is_string()) {
      auto e = builtin_group(doc.get<std::string>());
      if (!e) bad("unknown built-in group " + doc.get<std::string>());
      return *e;
    }
    if (!doc.is_object()) bad("group document must be an object");
    check_schema(doc);
    CatalogEntry entry;
    if (doc.contains("builtin")) {
      auto e = builtin_group(doc.at("builtin").get<std::string>());
      if (!e) bad("unknown built-in group " + doc.at("builtin").dump());
      entry = *e;
    } else {
      const std::string label = doc.value("label", std::string{});
      const bool has_table = doc.contains("table"), has_perm = doc.contains("permgens");
      if (has_table == has_perm) bad("group needs exactly one of table or permgens");
      if (has_table) {
        entry.group = validate_group(doc.at("table").get<std::vector<std::vector<std::int64_t>>>(), label, limits);
      } else {
        auto gens = doc.at("permgens").get<std::vector<Permutation>>();
        entry.group = group_from_permutations(gens, doc.value("degree", std::size_t{0}), label, limits);
      }
      entry.name = label;
    }
    if (doc.contains("name")) entry.name = doc.at("name").get<std::string>();
    if (doc.contains("subgroups")) {
      for (const auto& [name, spec] : doc.at("subgroups").items()) {
        entry.subgroups.erase(name);
        entry.subgroups.emplace(name, subgroup_from_json(entry.group, spec));
      }
    }
    return entry;
  });
}

Json group_to_json(const CatalogEntry& entry) {
  const auto& g = *entry.group;
  Json doc;
  doc["label"] = g.label();
  if (!g.perm_elements().empty()) {
    doc["permgens"] = g.perm_gens();
    doc["degree"] = g.perm_elements().front().size();
  } else {
    doc["table"] = g.table_rows();
  }
  Json subs = Json::object();
  for (const auto& [name, s] : entry.subgroups) subs[name] = {{"elements", s.elements()}};
  doc["subgroups"] = subs;
  return doc;
}

CatalogEntry load_group(const std::string& path_or_name, const Limits& limits) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_name, ec))
    return group_from_json(read_json_file(path_or_name), limits);
  if (auto e = builtin_group(path_or_name)) return *e;
  bad("no file or built-in group named " + path_or_name);
}

GenusInput genus_input_from_json(const Json& doc, const Limits& limits) {
  return guarded("genus input", [&]() -> GenusInput {
    check_schema(doc);
    if (!doc.contains("H")) bad("genus input needs H");
    auto h = group_from_json(doc.at("H"), limits).group;
    auto out = out_quotient(compute_aut(h, limits));
    const auto& og = out->group;
    auto sub = [&](const char* key) {
      if (!doc.contains(key)) bad(std::string("genus input needs ") + key);
      return subgroup_generated(og, out_indices(*out, doc.at(key), key));
    };
    GenusInput in{out, sub("A1"), sub("A2"), sub("Ahat1"), sub("Ahat2"), {}, std::nullopt,
                  std::nullopt, std::nullopt, GenusMode::kProfinitelyNonsymmetric,
                  NplusPolicy::kExact, false, true, {}};
    if (!doc.contains("Nplus")) bad("genus input needs Nplus");
    in.nplus = out_indices(*out, doc.at("Nplus"), "Nplus");
    if (doc.contains("N1")) in.n1 = sub("N1");
    if (doc.contains("N2")) in.n2 = sub("N2");
    if (doc.contains("xi")) {
      Element xi = out->find_map(doc.at("xi").get<std::vector<Element>>());
      if (xi < 0) bad("xi is not an automorphism of H");
      in.xi = xi;
    }
    if (doc.contains("mode")) {
      auto m = parse_genus_mode(doc.at("mode").get<std::string>());
      if (!m) bad("unknown mode " + doc.at("mode").dump());
      in.mode = *m;
    }
    in.double_c2 = doc.value("double_c2", true);
    if (doc.contains("conditions")) in.conditions = doc.at("conditions").get<std::vector<std::string>>();
    return in;
  });
}

Json out_element(const OutQuotient& out, Element e) { return out.rep_map(e); }

Json out_elements(const OutQuotient& out, std::span<const Element> xs) {
  return maps_json(xs, [&](Element e) { return out_element(out, e); });
}

Json genus_input_to_json(const GenusInput& in) {
  const auto& out = *in.out_h;
  Json doc;
  doc["H"] = group_to_json(CatalogEntry{out.aut->base->label(), out.aut->base, {}});
  doc["H"].erase("subgroups");
  doc["A1"] = out_elements(out, in.a1.elements());
  doc["A2"] = out_elements(out, in.a2.elements());
  doc["Ahat1"] = out_elements(out, in.ahat1.elements());
  doc["Ahat2"] = out_elements(out, in.ahat2.elements());
  doc["Nplus"] = out_elements(out, in.nplus);
  if (in.n1) doc["N1"] = out_elements(out, in.n1->elements());
  if (in.n2) doc["N2"] = out_elements(out, in.n2->elements());
  if (in.xi) doc["xi"] = out_element(out, *in.xi);
  doc["mode"] = to_string(in.mode);
  doc["double_c2"] = in.double_c2;
  doc["conditions"] = in.conditions;
  return doc;
}

Json decomposition_to_json(const DoubleCosetDecomposition& d,
                           const std::function<Json(Element)>& element) {
  Json doc;
  doc["left"] = maps_json(d.left.elements(), element);
  doc["right"] = maps_json(d.right.elements(), element);
  doc["carrier_size"] = d.carrier.size();
  Json classes = Json::array();
  for (const auto& c : d.classes)
    classes.push_back({{"rep", element(c.rep)}, {"size", c.members.size()},
                       {"members", maps_json(c.members, element)}});
  doc["classes"] = classes;
  doc["count"] = d.count();
  return doc;
}

Json aut_report(const AutGroup& aut, const OutQuotient& out) {
  Json doc;
  doc["group"] = aut.base->label();
  doc["order"] = aut.base->order();
  doc["aut_order"] = aut.order();
  doc["inn_order"] = aut.inn.size();
  doc["out_order"] = out.order();
  doc["out_abelian"] = out.group->is_abelian();
  Json gens = Json::array();
  for (Element g : aut.group->generators()) gens.push_back(aut.maps[static_cast<std::size_t>(g)]);
  doc["aut_generators"] = gens;
  doc["out_representatives"] = out_elements(out, [&] {
    std::vector<Element> all(out.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
    return all;
  }());
  return doc;
}

Json subgroups_report(const SubgroupList& list) {
  Json doc;
  doc["group"] = list.parent->label();
  doc["order"] = list.parent->order();
  doc["count"] = list.size();
  Json subs = Json::array();
  for (const auto& s : list.subgroups) subs.push_back({{"order", s.size()}, {"elements", s.elements()}});
  doc["subgroups"] = subs;
  return doc;
}

Json to_json(const PushOut& p) { return {{"lambda", p.lambda.map}, {"mu", p.mu.map}}; }

Json to_json(const IsoClassReport& r) {
  Json doc;
  doc["count"] = r.count;
  doc["mode"] = to_string(r.mode);
  doc["method"] = to_string(r.method);
  doc["symmetric"] = r.symmetric;
  doc["unquotiented"] = r.unquotiented;
  doc["provenance"] = r.provenance;
  Json reps = Json::array();
  for (const auto& p : r.representatives) reps.push_back(to_json(p));
  doc["representatives"] = reps;
  return doc;
}

Json to_json(const GenusReport& r) {
  Json doc;
  doc["value"] = r.value;
  doc["is_bound"] = r.is_bound;
  doc["mode"] = to_string(r.mode);
  doc["nplus_policy"] = to_string(r.policy);
  doc["nplus_is_proxy"] = r.nplus_is_proxy;
  if (r.out_h) {
    const auto& out = *r.out_h;
    auto element = [&](Element e) { return out_element(out, e); };
    doc["out_order"] = out.order();
    doc["K"] = out_elements(out, r.k);
    doc["S"] = out_elements(out, r.s);
    if (r.decomposition) doc["decomposition"] = decomposition_to_json(*r.decomposition, element);
  }
  if (r.pairing) {
    Json pairs = Json::array();
    for (auto [a, b] : r.pairing->pairs) pairs.push_back({a, b});
    doc["c2_pairing"] = {{"orbits", r.pairing->count}, {"fixed", r.pairing->fixed}, {"pairs", pairs}};
  }
  if (r.normalizer_bound) doc["normalizer_bound"] = *r.normalizer_bound;
  doc["conditions"] = r.conditions;
  doc["provenance"] = r.provenance;
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& [label, v] : r.parts) parts.push_back({{"pair", label}, {"value", v}});
    doc["parts"] = parts;
  }
  return doc;
}

Json to_json(const ComparisonReport& r) {
  Json doc{{"g1", r.g1_label}, {"g2", r.g2_label}, {"h", r.h_label},
           {"formula", r.formula_count}, {"oracle", r.oracle_count}, {"agree", r.agree}};
  if (r.pairwise_count) doc["pairwise"] = *r.pairwise_count;
  if (!r.counterexample.empty()) doc["counterexample"] = r.counterexample;
  return doc;
}

Json to_json(const SweepResult& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return {{"cases", cases}, {"total", r.cases.size()}, {"agreed", r.agreed}, {"all_agree", r.all_agree()}};
}

Json to_json(const SimplificationConditions& c) {
  Json doc;
  doc["central"] = {c.central[0], c.central[1]};
  doc["direct_factor"] = {c.direct_factor[0], c.direct_factor[1]};
  doc["out_abelian"] = c.out_abelian;
  doc["self_normalizing"] = {c.self_normalizing[0], c.self_normalizing[1]};
  doc["retract"] = {c.retract[0], c.retract[1]};
  doc["nplus_eliminable"] = c.nplus_eliminable;
  doc["any"] = c.any();
  doc["holding"] = c.names();
  return doc;
}

std::string dump_document(Json doc) {
  doc["schema"] = kSchema;
  return doc.dump(2) + "\n";
}

}  // namespace amalgenus
