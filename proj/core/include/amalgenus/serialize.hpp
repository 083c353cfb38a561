#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amalgenus/amalgam.hpp"
#include "amalgenus/catalog.hpp"
#include "amalgenus/genus.hpp"

namespace amalgenus {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "amalgenus/1";

/// Reads and parses a JSON file; throws kInvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// {"label", "table" | "permgens" [, "degree"], "subgroups": {name: spec}}
/// where spec is {"elements"}, {"generators"} or {"perm_generators"}.
CatalogEntry group_from_json(const Json& doc, const Limits& limits = {});
Json group_to_json(const CatalogEntry& entry);

/// A file path, or a built-in catalog name when no such file exists.
CatalogEntry load_group(const std::string& path_or_name, const Limits& limits = {});

Subgroup subgroup_from_json(const GroupPtr& group, const Json& spec);

/// Abstract genus input: {"H": group doc, "A1", "A2", "Ahat1", "Ahat2",
/// "Nplus", optional "N1", "N2", "xi", "mode", "double_c2"}. Subgroup fields
/// list Aut(H) map tables and are closed in Out(H); Nplus is taken as given.
GenusInput genus_input_from_json(const Json& doc, const Limits& limits = {});
Json genus_input_to_json(const GenusInput& input);

/// An Out(H) element as its canonical representative map table.
Json out_element(const OutQuotient& out, Element e);
Json out_elements(const OutQuotient& out, std::span<const Element> xs);

Json decomposition_to_json(const DoubleCosetDecomposition& d,
                           const std::function<Json(Element)>& element);

Json aut_report(const AutGroup& aut, const OutQuotient& out);
Json subgroups_report(const SubgroupList& list);
Json to_json(const PushOut& p);
Json to_json(const IsoClassReport& r);
Json to_json(const GenusReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const SweepResult& r);
Json to_json(const SimplificationConditions& c);

/// Adds "schema" and dumps with two-space indent and a trailing newline.
std::string dump_document(Json doc);

}  // namespace amalgenus
