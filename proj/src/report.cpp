#include "bct/report.hpp"

#include <cstdint>

#include "bct/brauer_module.hpp"
#include "bct/cache.hpp"
#include "bct/error.hpp"
#include "bct/freeness.hpp"

namespace bct {

using nlohmann::json;

namespace {

// Largest module the relations suite builds.
constexpr std::size_t kModuleLimit = 5000;

json collection_json(const Collection& b) {
  json j = json::array();
  for (HypId h : b) j.push_back(h);
  return j;
}

bool dichotomy(const AdmissibilityRecord& r) { return r.a1 != (r.a2_span && r.a2_subgroup); }

json relation_report_json(const RelationReport& r) {
  return {{"B1", r.b1}, {"B2", r.b2}, {"B3", r.b3}, {"B4", r.b4}, {"B5", r.b5},
          {"image_blocks", r.image_blocks}, {"checks", r.checks}, {"first_failure", r.first_failure}};
}

}  // namespace

Analysis analyze(const GroupDefinition& def, const AnalysisOptions& opt) {
  Group g = build_group(def, opt.max_order);
  TransvTable t;
  std::vector<OrbitRecord> orbits;
  bool hit = false;
  std::optional<GroupCache> cache;
  std::string hash;
  if (opt.cache_dir) {
    cache.emplace(*opt.cache_dir);
    hash = definition_hash(def);
    if (auto d = cache->load(hash, g.order(), g.num_hyperplanes())) {
      t = TransvTable::from_flags(g, d->transverse_flags);
      orbits = std::move(d->orbits);
      hit = true;
    }
  }
  if (!hit) {
    t = TransvTable::build(g);
    orbits = collection_orbits(g, t);
    if (cache) cache->store(hash, g.order(), CachedData{t.flags(), orbits});
  }
  Classification c = classify_group(g, t, orbits, FieldConfig::mu6(), opt.workers);
  return Analysis{def, std::move(g), std::move(t), std::move(orbits), std::move(c), hit};
}

json exact_number(const mpz_class& v) {
  static_assert(sizeof(unsigned long) == 8, "LP64 expected");
  if (v.fits_ulong_p()) return static_cast<std::uint64_t>(v.get_ui());
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json group_summary_json(const Analysis& a) {
  const Group& g = a.group;
  return {{"name", a.def.name},
          {"provenance", a.def.provenance},
          {"kind", g.kind() == GroupKind::Imprimitive ? "imprimitive" : "matrix"},
          {"rank", g.rank()},
          {"order", g.order()},
          {"reflections", g.reflections().size()},
          {"hyperplanes", g.num_hyperplanes()},
          {"reflection_classes", g.num_classes()}};
}

json orbit_rows_json(const Analysis& a) {
  json rows = json::array();
  for (const auto& r : a.classification.records) {
    const std::size_t q = r.admissible_generic ? r.quotient_generic : r.quotient_mu6;
    rows.push_back({{"representative", collection_json(r.orbit.representative)},
                    {"cardinality", r.orbit.cardinality},
                    {"orbit_size", r.orbit.orbit_size},
                    {"stab_order", r.orbit.stab_order},
                    {"kb_order", r.kb_order},
                    {"admissible_generic", r.admissible_generic},
                    {"admissible_mu6", r.admissible_mu6},
                    {"conditional", r.conditional},
                    {"quotient_size", q}});
  }
  return rows;
}

json dims_json(const Analysis& a, const FieldConfig& cfg) {
  return {{"group", group_summary_json(a)},
          {"field", cfg.is_mu6() ? "mu6" : "generic"},
          {"dimension", exact_number(dim_brauer(a.group, a.classification, cfg))}};
}

json classify_json(const Analysis& a) {
  return {{"group", group_summary_json(a)},
          {"orbits", orbit_rows_json(a)},
          {"dimensions",
           {{"generic", exact_number(dim_brauer(a.group, a.classification, FieldConfig::generic()))},
            {"mu6", exact_number(dim_brauer(a.group, a.classification, FieldConfig::mu6()))}}}};
}

std::string orbit_csv(const Analysis& a) {
  std::string out = "cardinality,orbit_size,stab_order,kb_order,admissible_generic,admissible_mu6,conditional,quotient_size\n";
  for (const auto& row : orbit_rows_json(a)) {
    auto flag = [&](const char* k) { return row[k].get<bool>() ? "true" : "false"; };
    out += std::to_string(row["cardinality"].get<std::size_t>()) + "," +
           std::to_string(row["orbit_size"].get<std::size_t>()) + "," +
           std::to_string(row["stab_order"].get<std::size_t>()) + "," +
           std::to_string(row["kb_order"].get<std::size_t>()) + "," + flag("admissible_generic") + "," +
           flag("admissible_mu6") + "," + flag("conditional") + "," +
           std::to_string(row["quotient_size"].get<std::size_t>()) + "\n";
  }
  return out;
}

json relations_suite_json(const Analysis& a) {
  const Group& g = a.group;
  json modules = json::array();
  bool passed = true;
  std::optional<InducedModule> control_base;
  HypId control_h = 0;
  for (const auto& rec : a.classification.records) {
    for (const FieldConfig& cfg : {FieldConfig::generic(), FieldConfig::mu6()}) {
      if (!rec.admissible(cfg)) continue;
      if (cfg.is_mu6() && rec.admissible_generic) continue;  // same module as the generic one
      json entry = {{"representative", collection_json(rec.orbit.representative)},
                    {"field", cfg.is_mu6() ? "mu6" : "generic"}};
      const std::size_t dim = rec.orbit.orbit_size * rec.quotient(cfg);
      entry["dimension"] = dim;
      if (dim > kModuleLimit) {
        entry["skipped"] = "module larger than " + std::to_string(kModuleLimit);
        modules.push_back(entry);
        continue;
      }
      auto m = induce(g, a.table, quotient_regular_rep(g, a.table, rec.orbit.representative, cfg), cfg);
      auto r = verify_defining_relations(g, a.table, m);
      entry["relations"] = relation_report_json(r);
      entry["passed"] = r.all();
      passed = passed && r.all();
      if (!control_base && !rec.orbit.representative.empty()) {
        control_h = rec.orbit.representative.front();
        control_base = std::move(m);
      }
      modules.push_back(entry);
    }
  }
  json control = nullptr;
  if (control_base) {
    auto r = verify_defining_relations(g, a.table, perturbed(*control_base, control_h));
    control = {{"hyperplane", control_h}, {"relations", relation_report_json(r)}, {"fails_B1", !r.b1}};
    passed = passed && !r.b1;
  }
  return {{"group", group_summary_json(a)},
          {"suite", "relations"},
          {"modules", modules},
          {"negative_control", control},
          {"passed", passed}};
}

json freeness_suite_json(const Analysis& a) {
  const FreenessReport r = freeness_verdict(a.group, a.table, a.orbits, a.classification);
  json orbits = json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"representative", collection_json(o.representative)},
                      {"F1", o.f.f1},
                      {"F2a", o.f.f2a},
                      {"F2b", o.f.f2b},
                      {"A2", o.f.a2},
                      {"tau_relations", o.f.tau_count}});
  json out = {{"group", group_summary_json(a)},
              {"suite", "freeness"},
              {"verdict", verdict_name(r.verdict)},
              {"route", r.route},
              {"basis", r.basis},
              {"dimensions", {{"generic", exact_number(r.dim_generic)}, {"mu6", exact_number(r.dim_mu6)}}},
              {"dichotomy", r.dichotomy},
              {"orbits", orbits}};
  if (r.verdict == Verdict::NotFree)
    out["witness"] = {{"generic", exact_number(r.dim_generic)}, {"mu6", exact_number(r.dim_mu6)}};
  if (r.g26) out["g26"] = {{"all", r.g26->all()}, {"pair_count", r.g26->pair_count}, {"pair_orbits", r.g26->pair_orbits}};
  out["passed"] = r.verdict != Verdict::Undetermined;
  return out;
}

json formulas_suite_json(const Analysis& a) {
  const Group& g = a.group;
  bool passed = true;
  bool dich = true;
  for (const auto& r : a.classification.records) dich = dich && dichotomy(r);
  passed = passed && dich;
  json out = {{"group", group_summary_json(a)}, {"suite", "formulas"}, {"dichotomy", dich}};
  if (g.kind() != GroupKind::Imprimitive || g.reducible()) {
    out["closed_forms"] = "not applicable";
    out["passed"] = passed;
    return out;
  }
  bool cf = true;
  for (const auto& r : a.classification.records) {
    if (!r.closed_form || *r.closed_form != r.admissible_generic) cf = false;
    for (const auto& b : r.orbit.members)
      if (closed_form_admissible(g, b) != r.admissible_generic) cf = false;
  }
  const mpz_class enumerated = dim_brauer(g, a.classification, FieldConfig::generic());
  const mpz_class formula =
      (g.m() == 2 && g.p() == 2) ? dim_g22n_formula(g.n()) : dim_gmpn_formula(g.m(), g.p(), g.n());
  std::size_t kb_checked = 0;
  bool kb_ok = true;
  for (std::size_t i = 0; i < a.classification.records.size(); ++i) {
    const auto& members = a.classification.records[i].orbit.members;
    for (std::size_t k = 0; k < members.size(); ++k) {
      auto expect = kb_order_formula(g, members[k]);
      if (!expect) continue;
      ++kb_checked;
      if (*expect != a.classification.member_kb_orders[i][k]) kb_ok = false;
    }
  }
  passed = passed && cf && enumerated == formula && kb_ok;
  out["closed_form_admissibility"] = cf;
  out["dimension"] = {{"enumerated", exact_number(enumerated)}, {"formula", exact_number(formula)}};
  out["kb_orders"] = {{"checked", kb_checked}, {"agree", kb_ok}};
  out["passed"] = passed;
  return out;
}

json g26_suite_json(const Analysis& a) {
  const G26Report r = g26_geometry_suite(a.group, a.table);
  return {{"group", group_summary_json(a)},
          {"suite", "g26"},
          {"o1_size", r.o1_size},
          {"o2_size", r.o2_size},
          {"exactly_three_partners", r.exactly_three},
          {"distinct_triples", r.distinct_triples},
          {"o2_non_transverse", r.o2_non_transverse},
          {"pair_count", r.pair_count},
          {"pair_orbits", r.pair_orbits},
          {"t2_links", r.t2_links},
          {"h3_partners", collection_json(r.h3_partners)},
          {"passed", r.all()}};
}

json table_json(const Analysis& a) {
  json rows = json::array();
  for (const auto& r : a.classification.records) {
    if (r.orbit.cardinality == 0) continue;
    std::string entry = std::to_string(r.quotient_generic);
    if (r.quotient_generic != r.quotient_mu6) entry += "/" + std::to_string(r.quotient_mu6) + "*";
    rows.push_back({{"cardinality", r.orbit.cardinality}, {"orbit_size", r.orbit.orbit_size}, {"quotient", entry}});
  }
  return {{"group", a.def.name},
          {"provenance", a.def.provenance},
          {"rows", rows},
          {"dimension_generic", exact_number(dim_brauer(a.group, a.classification, FieldConfig::generic()))},
          {"dimension_mu6", exact_number(dim_brauer(a.group, a.classification, FieldConfig::mu6()))}};
}

}  // namespace bct
