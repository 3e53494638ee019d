#include "bct/group_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "bct/error.hpp"

namespace bct {

using nlohmann::json;

namespace {

GroupDefinition from_roots(const std::string& name, int order, const std::string& provenance,
                           const std::vector<std::pair<std::vector<CycNumber>, CycNumber>>& roots) {
  GroupDefinition def;
  def.name = name;
  def.kind = GroupKind::Matrix;
  def.provenance = provenance;
  def.cyclotomic_order = order;
  for (const auto& [root, alpha] : roots) def.generators.push_back(embed_matrix(reflection_from_root(root, alpha), order));
  return def;
}

std::vector<CycNumber> vec(std::initializer_list<CycNumber> xs) { return std::vector<CycNumber>(xs); }

}  // namespace

json cyc_to_json(const CycNumber& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return CycNumber(j.get<long>());
    if (j.is_string()) return CycNumber(Rational::parse(j.get<std::string>()));
    int order = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return CycNumber::from_reduced(order, std::move(coeffs));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad cyclotomic number: ") + e.what());
  }
}

GroupDefinition parse_group_definition(const json& j) {
  GroupDefinition def;
  try {
    def.name = j.value("name", std::string("unnamed"));
    def.provenance = j.value("provenance", std::string("builtin"));
    if (def.provenance != "builtin" && def.provenance != "external")
      throw Error(ErrorCode::ParseError, "provenance must be \"builtin\" or \"external\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "imprimitive") {
      def.kind = GroupKind::Imprimitive;
      def.m = j.at("m").get<int>();
      def.p = j.at("p").get<int>();
      def.n = j.at("n").get<int>();
      def.cyclotomic_order = def.m;
    } else if (kind == "matrix") {
      def.kind = GroupKind::Matrix;
      def.cyclotomic_order = j.at("cyclotomic_order").get<int>();
      for (const auto& g : j.at("generators")) {
        const std::size_t d = g.size();
        CycMatrix mat(d, d);
        for (std::size_t r = 0; r < d; ++r) {
          if (g[r].size() != d) throw Error(ErrorCode::InvalidGenerators, "generator rows must form a square matrix");
          for (std::size_t c = 0; c < d; ++c) mat(r, c) = cyc_from_json(g[r][c]);
        }
        def.generators.push_back(std::move(mat));
      }
    } else {
      throw Error(ErrorCode::ParseError, "unknown group kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad group definition: ") + e.what());
  }
  return def;
}

json definition_to_json(const GroupDefinition& def) {
  json j;
  j["name"] = def.name;
  j["provenance"] = def.provenance;
  if (def.kind == GroupKind::Imprimitive) {
    j["kind"] = "imprimitive";
    j["m"] = def.m;
    j["p"] = def.p;
    j["n"] = def.n;
    return j;
  }
  j["kind"] = "matrix";
  j["cyclotomic_order"] = def.cyclotomic_order;
  json gens = json::array();
  for (const auto& g : def.generators) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < g.cols(); ++c) row.push_back(cyc_to_json(g(r, c).embed(def.cyclotomic_order)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  j["generators"] = gens;
  return j;
}

std::string canonical_definition_text(const GroupDefinition& def) {
  json j = definition_to_json(def);
  j.erase("name");
  j.erase("provenance");
  return j.dump();
}

Group build_group(const GroupDefinition& def, std::size_t max_order) {
  if (def.kind == GroupKind::Imprimitive) return Group::imprimitive(def.m, def.p, def.n, max_order);
  return Group::from_matrices(def.name, def.cyclotomic_order, def.generators, max_order);
}

std::string shipped_data_dir() {
  if (const char* env = std::getenv("BCT_DATA_DIR")) return env;
  return BCT_DATA_DIR;
}

GroupDefinition resolve_group_spec(const std::string& spec) {
  static const std::regex gmpn(R"(gmpn:(\d+),(\d+),(\d+))");
  std::smatch match;
  if (std::regex_match(spec, match, gmpn)) {
    GroupDefinition def;
    def.kind = GroupKind::Imprimitive;
    def.m = std::stoi(match[1]);
    def.p = std::stoi(match[2]);
    def.n = std::stoi(match[3]);
    def.cyclotomic_order = def.m;
    def.name = "G(" + match[1].str() + "," + match[2].str() + "," + match[3].str() + ")";
    return def;
  }
  namespace fs = std::filesystem;
  std::vector<fs::path> candidates{fs::path(spec), fs::path(shipped_data_dir()) / "groups" / spec,
                                   fs::path(shipped_data_dir()) / "external" / spec};
  for (const auto& path : candidates) {
    if (!fs::is_regular_file(path)) continue;
    std::ifstream in(path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    return parse_group_definition(j);
  }
  throw Error(ErrorCode::ParseError, "unrecognized group spec '" + spec + "' (expected gmpn:m,p,n or a definition file)");
}

GroupDefinition g26_definition() {
  std::vector<std::pair<std::vector<CycNumber>, CycNumber>> roots;
  const CycNumber w = CycNumber::zeta(3);
  const CycNumber zero = CycNumber(0).embed(3), one = CycNumber(1).embed(3);
  for (int i = 0; i < 3; ++i) {
    std::vector<CycNumber> r(3, zero);
    r[i] = one;
    roots.emplace_back(r, w);
  }
  // z1 + w^k z2 + w^l z3 = 0 has normal (1, w^-k, w^-l).
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) roots.emplace_back(vec({one, CycNumber::zeta(3, -k), CycNumber::zeta(3, -l)}), w);
  // z_i = w^k z_j has normal e_i - w^-k e_j.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        std::vector<CycNumber> r(3, zero);
        r[i] = one;
        r[j] = -CycNumber::zeta(3, -k);
        roots.emplace_back(r, CycNumber(-1));
      }
  return from_roots("G26", 3, "builtin", roots);
}

GroupDefinition g25_definition() {
  GroupDefinition def = g26_definition();
  def.name = "G25";
  def.generators.resize(12);
  return def;
}

GroupDefinition g4_definition() {
  const int n = 24;
  const CycNumber sqrt2 = CycNumber::zeta(n, 3) + CycNumber::zeta(n, 21);
  const CycNumber alpha = CycNumber::zeta(n, 8);
  std::vector<std::pair<std::vector<CycNumber>, CycNumber>> roots;
  roots.emplace_back(vec({CycNumber(1), CycNumber(0)}), alpha);
  for (int k = 0; k < 3; ++k) roots.emplace_back(vec({CycNumber(1), sqrt2 * CycNumber::zeta(n, 8 * k)}), alpha);
  return from_roots("G4", n, "external", roots);
}

GroupDefinition g23_definition() {
  const int n = 5;
  const CycNumber tau = CycNumber(1) + CycNumber::zeta(n, 1) + CycNumber::zeta(n, 4);
  const CycNumber sigma = tau - CycNumber(1);
  std::vector<std::pair<std::vector<CycNumber>, CycNumber>> roots;
  for (int i = 0; i < 3; ++i) {
    std::vector<CycNumber> r(3, CycNumber(0));
    r[i] = CycNumber(1);
    roots.emplace_back(r, CycNumber(-1));
  }
  // Even permutations of (tau, +-1, +-1/tau); the overall factor 1/2 does not change the line.
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      std::vector<CycNumber> base = vec({tau, CycNumber(s1), sigma * CycNumber(s2)});
      for (int rot = 0; rot < 3; ++rot) {
        std::vector<CycNumber> r(3);
        for (int i = 0; i < 3; ++i) r[(i + rot) % 3] = base[i];
        roots.emplace_back(r, CycNumber(-1));
      }
    }
  return from_roots("G23", n, "external", roots);
}

}  // namespace bct
