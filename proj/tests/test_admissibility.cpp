#include <algorithm>
#include <array>
#include <random>

#include "bct/admissibility.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bct;
using bct::test::hi;
using bct::test::hij;

namespace {

struct Classified {
  TransvTable t;
  std::vector<OrbitRecord> orbits;
  Classification c;
};

Classified classify_all(const Group& g, int workers = 1) {
  Classified out;
  out.t = TransvTable::build(g);
  out.orbits = collection_orbits(g, out.t);
  out.c = classify_group(g, out.t, out.orbits, FieldConfig::mu6(), workers);
  return out;
}

mpz_class dim_of(const Group& g, const FieldConfig& cfg = FieldConfig::generic()) {
  auto x = classify_all(g);
  return dim_brauer(g, x.c, cfg);
}

}  // namespace

TEST_CASE("dimensions of small imprimitive groups") {
  CHECK(dim_of(Group::imprimitive(1, 1, 3)) == 15);
  CHECK(dim_of(Group::imprimitive(1, 1, 4)) == 105);
  CHECK(dim_of(Group::imprimitive(3, 1, 2)) == 57);
  CHECK(dim_of(Group::imprimitive(2, 1, 2)) == 24);
  CHECK(dim_gmpn_formula(1, 1, 3) == 15);
  CHECK(dim_gmpn_formula(1, 1, 4) == 105);
  CHECK(dim_gmpn_formula(3, 1, 2) == 57);
  CHECK(dim_gmpn_formula(2, 1, 2) == 24);
  CHECK(dim_g22n_formula(3) == 105);
}

TEST_CASE("machinery matches the closed forms for m, n <= 4") {
  for (int m = 1; m <= 4; ++m)
    for (int p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (int n = 2; n <= 4; ++n) {
        Group g = Group::imprimitive(m, p, n);
        if (g.reducible()) continue;
        CAPTURE(g.name());
        auto x = classify_all(g);
        for (const auto& rec : x.c.records) {
          CHECK(rec.a1 != (rec.a2_span && rec.a2_subgroup));
          CHECK(!rec.a1_divergence());
          CHECK(!rec.conditional);
          REQUIRE(rec.closed_form.has_value());
          CHECK(*rec.closed_form == rec.admissible_generic);
          for (const auto& b : rec.orbit.members) CHECK(closed_form_admissible(g, b) == rec.admissible_generic);
        }
        const mpz_class expected = (m == 2 && p == 2) ? dim_g22n_formula(n) : dim_gmpn_formula(m, p, n);
        CHECK(dim_brauer(g, x.c, FieldConfig::generic()) == expected);
        CHECK(dim_brauer(g, x.c, FieldConfig::mu6()) == expected);
      }
    }
}

TEST_CASE("closed-form dimension inputs") {
  CHECK_THROWS_AS(dim_gmpn_formula(2, 2, 3), Error);
  CHECK_THROWS_AS(dim_gmpn_formula(4, 3, 3), Error);
  CHECK_THROWS_AS(dim_g22n_formula(2), Error);
  CHECK(dim_gmpn_formula(5, 5, 6) > 0);
  // Exact beyond 64 bits.
  CHECK(dim_gmpn_formula(6, 1, 20) > mpz_class("18446744073709551616"));
}

TEST_CASE("G25 in generic and sixth-root modes") {
  const Group& g = bct::test::g25();
  auto x = classify_all(g, 4);
  CHECK(dim_brauer(g, x.c, FieldConfig::generic()) == 3272);
  CHECK(dim_brauer(g, x.c, FieldConfig::mu6()) == 3416);
  int conditional = 0;
  for (const auto& rec : x.c.records) {
    if (!rec.conditional) continue;
    ++conditional;
    CHECK(rec.orbit.cardinality == 2);
    CHECK(rec.orbit.orbit_size == 12);
    CHECK(rec.orbit.stab_order == 54);
    CHECK(rec.kb_order == 54);
    CHECK(!rec.admissible_generic);
    CHECK(rec.admissible_mu6);
    CHECK(rec.d0_dim == std::optional<std::size_t>(53));
    CHECK(rec.chi_nontrivial);
    CHECK(rec.conditional_pair_orders == std::vector<int>{6});
  }
  CHECK(conditional == 1);
  for (int e = 0; e < 6; ++e) {
    const auto& orbit = x.orbits[2];
    REQUIRE(orbit.cardinality == 2);
    auto rec = classify(g, x.t, orbit, FieldConfig::mu6(e));
    CHECK(rec.d0_dim == std::optional<std::size_t>(53));
    CHECK(rec.quotient_mu6 == 1);
  }
}

TEST_CASE("G26 dimension") {
  const Group& g = bct::test::g26();
  auto x = classify_all(g, 4);
  CHECK(dim_brauer(g, x.c, FieldConfig::generic()) == 12312);
  for (const auto& rec : x.c.records) {
    CHECK(!rec.conditional);
    if (rec.orbit.cardinality == 2) CHECK(rec.a1);
  }
}

TEST_CASE("externally sourced groups") {
  Group g4 = build_group(g4_definition());
  Group g23 = build_group(g23_definition());
  CHECK(dim_of(g4) == 56);
  CHECK(dim_of(g23) == 1045);
}

TEST_CASE("relation projections agree with the table construction") {
  std::vector<Group> groups{Group::imprimitive(3, 1, 3), Group::imprimitive(2, 2, 4), Group::imprimitive(4, 2, 4)};
  groups.push_back(bct::test::g25());
  groups.push_back(bct::test::g26());
  for (const auto& g : groups) {
    TransvTable t = TransvTable::build(g);
    for (const auto& b : enumerate_collections(g, t)) {
      if (b.empty()) continue;
      CAPTURE(g.name());
      CHECK(rel_bar(g, t, b) == rel_bar_tables(g, t, b));
    }
  }
}

TEST_CASE("relation supports") {
  const Group& g = bct::test::g26();
  TransvTable t = TransvTable::build(g);
  Collection b{hi(g, 3), hij(g, 1, 2, 0, 3)};
  std::sort(b.begin(), b.end());
  REQUIRE(t.is_collection(b));
  for (const auto& e : rel_set(g, t, b)) {
    std::size_t nz = 0;
    for (long x : e.vec) nz += x != 0;
    CHECK(nz == e.support.size());
    for (std::size_t r = 0; r < g.reflections().size(); ++r)
      if (e.vec[r] != 0)
        CHECK(std::binary_search(e.support.begin(), e.support.end(), g.reflections()[r]));
  }
}

TEST_CASE("K_B matrix characterization and orders") {
  for (auto [m, p, n] : std::vector<std::array<int, 3>>{{3, 1, 4}, {4, 2, 4}, {2, 2, 4}, {2, 1, 4}, {4, 4, 4}, {3, 3, 3}}) {
    Group g = Group::imprimitive(m, p, n);
    CAPTURE(g.name());
    TransvTable t = TransvTable::build(g);
    for (const auto& b : enumerate_collections(g, t)) {
      auto formula = kb_order_formula(g, b);
      if (!formula) {
        if (!b.empty()) CHECK_THROWS_AS(kb_membership_gmpn(g, 0, b), Error);
        continue;
      }
      Subgroup k = k_subgroup(g, b);
      CHECK(k.order() == *formula);
      const auto& root = g.hyperplanes()[b[0]].root;
      if (std::count_if(root.begin(), root.end(), [](const CycNumber& c) { return !c.is_zero(); }) == 1)
        continue;  // {H_i} has no matrix characterization
      for (ElemId x = 0; x < g.order(); ++x) CHECK(kb_membership_gmpn(g, x, b) == k.contains(x));
    }
  }
}

TEST_CASE("entry-product rule over-accepts for even m") {
  Group g = Group::imprimitive(2, 1, 4);
  Collection b{hij(g, 1, 2, 0, 2), hij(g, 3, 4, 0, 2)};
  std::sort(b.begin(), b.end());
  ElemId x = bct::test::monomial(g, {0, 1, 2, 3}, {1, 1, 0, 0});
  CHECK(g.act(x, b) == b);
  CHECK(!k_subgroup(g, b).contains(x));
  CHECK(!kb_membership_gmpn(g, x, b));
  CHECK(kb_membership_gmpn(g, x, b, KbRule::EntryProduct));
  std::size_t entry = 0;
  for (ElemId y = 0; y < g.order(); ++y) entry += kb_membership_gmpn(g, y, b, KbRule::EntryProduct);
  CHECK(entry == 32);
  CHECK(k_subgroup(g, b).order() == 16);
  // Odd m: the two rules coincide.
  Group g3 = Group::imprimitive(3, 1, 4);
  Collection b3{hij(g3, 1, 2, 1, 3), hij(g3, 3, 4, 2, 3)};
  std::sort(b3.begin(), b3.end());
  for (ElemId y = 0; y < g3.order(); ++y)
    CHECK(kb_membership_gmpn(g3, y, b3) == kb_membership_gmpn(g3, y, b3, KbRule::EntryProduct));
}

TEST_CASE("K_B orders for named shapes") {
  Group g = Group::imprimitive(3, 1, 4);
  CHECK(k_subgroup(g, {hi(g, 1)}).order() == 3);
  Collection b{hij(g, 1, 2, 0, 3), hij(g, 3, 4, 1, 3)};
  std::sort(b.begin(), b.end());
  CHECK(k_subgroup(g, b).order() == 2 * 2 * 3 * 2);
  Group g22 = Group::imprimitive(2, 2, 4);
  Collection d{hij(g22, 1, 2, 0, 2), hij(g22, 1, 2, 1, 2), hij(g22, 3, 4, 0, 2), hij(g22, 3, 4, 1, 2)};
  std::sort(d.begin(), d.end());
  CHECK(k_subgroup(g22, d).order() == 64);
  CHECK(kb_order_formula(g22, d) == std::optional<std::size_t>(64));
  CHECK_THROWS_AS(kb_membership_gmpn(bct::test::g25(), 0, {0}), Error);
}

TEST_CASE("K_B is equivariant") {
  std::mt19937 rng(7);
  std::vector<Group> groups{Group::imprimitive(3, 1, 3), Group::imprimitive(2, 2, 4)};
  groups.push_back(bct::test::g25());
  groups.push_back(bct::test::g26());
  for (const auto& g : groups) {
    TransvTable t = TransvTable::build(g);
    auto all = enumerate_collections(g, t);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& b = all[1 + rng() % (all.size() - 1)];
      ElemId w = static_cast<ElemId>(rng() % g.order());
      Subgroup k = k_subgroup(g, b);
      Subgroup kw = k_subgroup(g, g.act(w, b));
      for (ElemId x : k.elements) CHECK(kw.contains(g.conjugate(w, x)));
      CHECK(k.order() == kw.order());
    }
  }
}

TEST_CASE("classification is independent of thread count") {
  const Group& g = bct::test::g25();
  auto a = classify_all(g, 1);
  auto b = classify_all(g, 3);
  REQUIRE(a.c.records.size() == b.c.records.size());
  for (std::size_t i = 0; i < a.c.records.size(); ++i) {
    CHECK(a.c.records[i].orbit.representative == b.c.records[i].orbit.representative);
    CHECK(a.c.records[i].admissible_generic == b.c.records[i].admissible_generic);
    CHECK(a.c.records[i].kb_order == b.c.records[i].kb_order);
  }
}

TEST_CASE("closed forms need G(m,p,n)") {
  CHECK_THROWS_AS(closed_form_admissible(bct::test::g25(), {0}), Error);
  Group g = Group::imprimitive(3, 1, 3);
  Collection mixed{hi(g, 3), hij(g, 1, 2, 0, 3)};
  std::sort(mixed.begin(), mixed.end());
  CHECK(!closed_form_admissible(g, mixed));
  CHECK(closed_form_admissible(g, {hi(g, 1)}));
}
