#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bct/admissibility.hpp"
#include "bct/group_io.hpp"
#include "json.hpp"

namespace bct {

struct AnalysisOptions {
  std::size_t max_order = kDefaultMaxOrder;
  int workers = 1;
  std::optional<std::string> cache_dir;  // nullopt disables the cache
};

// A group with its transversality table, orbit decomposition and classification.
struct Analysis {
  GroupDefinition def;
  Group group;
  TransvTable table;
  std::vector<OrbitRecord> orbits;
  Classification classification;
  bool cache_hit = false;
};

Analysis analyze(const GroupDefinition& def, const AnalysisOptions& opt);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json exact_number(const mpz_class& v);

nlohmann::json group_summary_json(const Analysis& a);
nlohmann::json orbit_rows_json(const Analysis& a);
nlohmann::json dims_json(const Analysis& a, const FieldConfig& cfg);
nlohmann::json classify_json(const Analysis& a);
std::string orbit_csv(const Analysis& a);

// Suite reports carry "passed"; the CLI exits nonzero when it is false.
nlohmann::json relations_suite_json(const Analysis& a);
nlohmann::json freeness_suite_json(const Analysis& a);
nlohmann::json formulas_suite_json(const Analysis& a);
nlohmann::json g26_suite_json(const Analysis& a);

// Summary rows (|B|, orbit size, |Stab/K_B|), with "0/1*" when the
// entry depends on the field mode.
nlohmann::json table_json(const Analysis& a);

}  // namespace bct
