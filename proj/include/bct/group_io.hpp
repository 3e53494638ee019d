#pragma once

#include <string>
#include <vector>

#include "bct/group.hpp"
#include "json.hpp"

namespace bct {

// Parsed group-definition file, or a parameter spec "gmpn:m,p,n".
struct GroupDefinition {
  std::string name;
  GroupKind kind = GroupKind::Imprimitive;
  std::string provenance = "builtin";
  int m = 1, p = 1, n = 2;
  int cyclotomic_order = 1;
  std::vector<CycMatrix> generators;
};

nlohmann::json cyc_to_json(const CycNumber& c);
CycNumber cyc_from_json(const nlohmann::json& j);

GroupDefinition parse_group_definition(const nlohmann::json& j);
nlohmann::json definition_to_json(const GroupDefinition& def);
// Stable text used for content hashing.
std::string canonical_definition_text(const GroupDefinition& def);

Group build_group(const GroupDefinition& def, std::size_t max_order = kDefaultMaxOrder);

// "gmpn:m,p,n", a path to a definition file, or a file name under the shipped data directory.
GroupDefinition resolve_group_spec(const std::string& spec);

// Generator sets built from roots and eigenvalues. G26 lists all three reflection
// types, G25 only the first two.
GroupDefinition g26_definition();
GroupDefinition g25_definition();
// Externally sourced data: the tetrahedral group G4 and H3 = G23.
GroupDefinition g4_definition();
GroupDefinition g23_definition();

std::string shipped_data_dir();

}  // namespace bct
