#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include "bct/cache.hpp"
#include "bct/report.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bct;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_env(const std::string& env, const std::string& args) {
  const std::string cmd = env + " " + std::string(BCT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Run run(const std::string& args) { return run_env("", args); }

// Fresh directory under the system temp path, removed on scope exit.
struct TempDir {
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("bct-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string cache() const { return "--cache-dir " + path.string(); }
  fs::path path;
};

}  // namespace

TEST_CASE("cli dimensions") {
  TempDir d;
  auto r = run("dims gmpn:1,1,4 " + d.cache());
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["dimension"] == 105);
  CHECK(j["field"] == "generic");
  CHECK(json::parse(run("dims g25.json --mu6 " + d.cache()).out)["dimension"] == 3416);
  CHECK(json::parse(run("dims g25.json " + d.cache()).out)["dimension"] == 3272);
  CHECK(json::parse(run("dims g26.json " + d.cache()).out)["dimension"] == 12312);
  auto summary = json::parse(run("group g26.json " + d.cache()).out);
  CHECK(summary["order"] == 1296);
  CHECK(summary["hyperplanes"] == 21);
  CHECK(summary["provenance"] == "builtin");
  CHECK(json::parse(run("group g4.json " + d.cache()).out)["provenance"] == "external");
}

TEST_CASE("cli classify") {
  TempDir d;
  auto j = json::parse(run("classify gmpn:2,2,4 " + d.cache()).out);
  std::set<std::size_t> admissible_cards;
  for (const auto& row : j["orbits"])
    if (row["admissible_generic"].get<bool>() && row["cardinality"] != 0) admissible_cards.insert(row["cardinality"].get<std::size_t>());
  // Singletons, disjoint pairs and the doubled collections {H_ij, H_ij^1, H_kl, H_kl^1}.
  CHECK(admissible_cards == std::set<std::size_t>{1, 2, 4});
  CHECK(j["dimensions"]["generic"] == 1569);

  auto csv = run("classify gmpn:2,2,4 --csv " + d.cache());
  REQUIRE(csv.status == 0);
  CHECK(csv.out.rfind("cardinality,orbit_size,stab_order,kb_order,admissible_generic,admissible_mu6,conditional,quotient_size\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 1 + static_cast<long>(j["orbits"].size()));

  auto g25 = json::parse(run("classify g25.json " + d.cache()).out);
  int conditional = 0;
  for (const auto& row : g25["orbits"])
    if (row["conditional"].get<bool>()) {
      ++conditional;
      CHECK(row["admissible_generic"] == false);
      CHECK(row["admissible_mu6"] == true);
      CHECK(row["quotient_size"] == 1);
    }
  CHECK(conditional == 1);
}

TEST_CASE("cli determinism and cache") {
  TempDir cold, warm;
  const std::string args = "classify g25.json ";
  auto first = run(args + cold.cache());
  auto again = run(args + cold.cache());
  REQUIRE(first.status == 0);
  CHECK(first.out == again.out);
  // A cold run in another directory matches a cache hit.
  CHECK(run(args + warm.cache()).out == first.out);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(cold.path)) {
    ++files;
    // Corrupt the file: the next run treats it as a miss and gives the same report.
    std::fstream f(e.path(), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(40);
    f.put('\x7f');
  }
  CHECK(files == 1);
  CHECK(run(args + cold.cache()).out == first.out);
  // The environment variable stands in for the flag.
  TempDir env;
  auto via_env = run_env("BCT_CACHE_DIR=" + env.path.string(), "dims gmpn:3,1,2");
  CHECK(via_env.status == 0);
  CHECK(json::parse(via_env.out)["dimension"] == 57);
  CHECK(!fs::is_empty(env.path));
}

TEST_CASE("cli suites and errors") {
  TempDir d;
  auto rel = run("verify gmpn:1,1,3 --suite relations " + d.cache());
  CHECK(rel.status == 0);
  auto rj = json::parse(rel.out);
  CHECK(rj["passed"] == true);
  CHECK(rj["negative_control"]["fails_B1"] == true);

  auto fr = json::parse(run("verify g25.json --suite freeness " + d.cache()).out);
  CHECK(fr["verdict"] == "not_free");
  CHECK(fr["witness"]["generic"] == 3272);
  CHECK(fr["witness"]["mu6"] == 3416);

  auto g26 = run("verify g26.json --suite g26 " + d.cache());
  CHECK(g26.status == 0);
  CHECK(json::parse(g26.out)["pair_count"] == 36);
  CHECK(run("verify g25.json --suite g26 " + d.cache()).status != 0);

  auto formulas = run("verify gmpn:2,2,4 --suite formulas " + d.cache());
  CHECK(formulas.status == 0);
  CHECK(json::parse(formulas.out)["dimension"]["formula"] == 1569);

  auto table = json::parse(run("reproduce-table g25.json g26.json " + d.cache()).out);
  REQUIRE(table["table"].size() == 2);
  std::vector<std::string> entries;
  for (const auto& row : table["table"][0]["rows"]) entries.push_back(row["quotient"]);
  CHECK(entries == std::vector<std::string>{"18", "0/1*", "2"});

  CHECK(run("dims gmpn:1,1,4 --max-order 10 " + d.cache()).status != 0);
  CHECK(run("dims nonsense " + d.cache()).status != 0);
  CHECK(run("verify gmpn:1,1,3 --suite bogus " + d.cache()).status != 0);
  CHECK(run("dims gmpn:1,1,3 --csv " + d.cache()).status != 0);
  CHECK(run("").status != 0);
}

TEST_CASE("cache file versioning") {
  TempDir d;
  GroupCache cache(d.path.string());
  const Group& g = bct::test::g25();
  TransvTable t = TransvTable::build(g);
  CachedData data{t.flags(), collection_orbits(g, t)};
  const std::string hash = definition_hash(g25_definition());
  CHECK(hash.size() == 64);
  CHECK(hash != definition_hash(g26_definition()));
  cache.store(hash, g.order(), data);
  auto back = cache.load(hash, g.order(), g.num_hyperplanes());
  REQUIRE(back.has_value());
  CHECK(back->transverse_flags == data.transverse_flags);
  REQUIRE(back->orbits.size() == data.orbits.size());
  for (std::size_t i = 0; i < data.orbits.size(); ++i) {
    CHECK(back->orbits[i].representative == data.orbits[i].representative);
    CHECK(back->orbits[i].members == data.orbits[i].members);
    CHECK(back->orbits[i].stab_order == data.orbits[i].stab_order);
  }
  CHECK(!cache.load(hash, g.order() + 1, g.num_hyperplanes()));
  CHECK(!cache.load(definition_hash(g26_definition()), g.order(), g.num_hyperplanes()));

  // Another version number is a miss even with a valid digest.
  {
    auto buf = GroupCache::serialize(hash, g.order(), data, kCacheVersion + 1);
    std::ofstream out(cache.path_for(hash), std::ios::binary | std::ios::trunc);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  CHECK(!cache.load(hash, g.order(), g.num_hyperplanes()));
  cache.store(hash, g.order(), data);
  CHECK(cache.load(hash, g.order(), g.num_hyperplanes()).has_value());
}
