#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bct/error.hpp"
#include "bct/report.hpp"

using namespace bct;
using nlohmann::json;

namespace {

struct Common {
  bool json_out = false;
  bool csv_out = false;
  std::size_t max_order = kDefaultMaxOrder;
  int parallel = 1;
  std::string cache_dir = ".bct-cache";
};

AnalysisOptions options(const Common& c) {
  AnalysisOptions o;
  o.max_order = c.max_order;
  o.workers = c.parallel;
  o.cache_dir = c.cache_dir;
  return o;
}

Analysis load(const std::string& spec, const Common& c) {
  GroupDefinition def;
  try {
    def = resolve_group_spec(spec);
  } catch (const Error& e) {
    throw CLI::ValidationError("spec", e.what());
  }
  return analyze(def, options(c));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_suite(const json& report) {
  emit(report);
  return report.value("passed", false) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Brauer-Chen algebras of complex reflection groups"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json_out, "JSON output (default)");
  app.add_flag("--csv", common.csv_out, "CSV projection of the orbit table (classify only)");
  app.add_option("--max-order", common.max_order, "Cap on the group order")->check(CLI::PositiveNumber);
  app.add_option("--parallel", common.parallel, "Worker threads for per-orbit work")->check(CLI::Range(1, 256));
  app.add_option("--cache-dir", common.cache_dir, "Cache directory")->envname("BCT_CACHE_DIR")->capture_default_str();
  app.fallthrough();

  std::string spec;
  std::vector<std::string> specs;
  bool mu6 = false;
  std::string suite;

  auto* group = app.add_subcommand("group", "Group summary");
  group->add_option("spec", spec, "gmpn:m,p,n or a group-definition file")->required();
  auto* dims = app.add_subcommand("dims", "Dimension of the algebra");
  dims->add_option("spec", spec, "gmpn:m,p,n or a group-definition file")->required();
  dims->add_flag("--mu6", mu6, "Coefficient field with mu^6 = 1");
  auto* classify = app.add_subcommand("classify", "Orbit table of transverse collections");
  classify->add_option("spec", spec, "gmpn:m,p,n or a group-definition file")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("spec", spec, "gmpn:m,p,n or a group-definition file")->required();
  verify->add_option("--suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"relations", "freeness", "formulas", "g26"}));
  auto* table = app.add_subcommand("reproduce-table", "Consolidated orbit table");
  table->add_option("specs", specs, "Group specs")->required();

  try {
    app.parse(argc, argv);
    if (common.csv_out && !classify->parsed()) throw CLI::ValidationError("--csv", "only classify has a CSV form");
    if (common.csv_out && common.json_out) throw CLI::ValidationError("--csv", "choose one of --json and --csv");

    if (group->parsed()) {
      emit(group_summary_json(load(spec, common)));
    } else if (dims->parsed()) {
      emit(dims_json(load(spec, common), mu6 ? FieldConfig::mu6() : FieldConfig::generic()));
    } else if (classify->parsed()) {
      Analysis a = load(spec, common);
      if (common.csv_out)
        std::cout << orbit_csv(a);
      else
        emit(classify_json(a));
    } else if (verify->parsed()) {
      Analysis a = load(spec, common);
      if (suite == "relations") return run_suite(relations_suite_json(a));
      if (suite == "freeness") return run_suite(freeness_suite_json(a));
      if (suite == "formulas") return run_suite(formulas_suite_json(a));
      return run_suite(g26_suite_json(a));
    } else if (table->parsed()) {
      json rows = json::array();
      for (const auto& s : specs) rows.push_back(table_json(load(s, common)));
      emit({{"table", rows}});
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "exception"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
