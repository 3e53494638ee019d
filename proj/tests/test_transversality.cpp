#include <map>
#include <random>
#include <set>

#include "bct/transversality.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bct;
using bct::test::hi;
using bct::test::hij;

TEST_CASE("transversality examples for G(m,p,n)") {
  Group g313 = Group::imprimitive(3, 1, 3);
  CHECK(!is_transverse(g313, hij(g313, 1, 2, 0, 3), hij(g313, 1, 2, 1, 3)));
  Group g223 = Group::imprimitive(2, 2, 3);
  CHECK(is_transverse(g223, hij(g223, 1, 2, 0, 2), hij(g223, 1, 2, 1, 2)));
  Group g314 = Group::imprimitive(3, 1, 4);
  CHECK(is_transverse(g314, hij(g314, 1, 2, 0, 3), hij(g314, 3, 4, 2, 3)));
  try {
    is_transverse(g313, 0, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDistinct);
  }
}

TEST_CASE("combinatorial and root deciders agree for m, n <= 4") {
  int groups = 0;
  for (int m = 1; m <= 4; ++m)
    for (int p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (int n = 2; n <= 4; ++n) {
        Group g = Group::imprimitive(m, p, n);
        const HypId nh = static_cast<HypId>(g.num_hyperplanes());
        for (HypId a = 0; a < nh; ++a)
          for (HypId b = 0; b < nh; ++b)
            if (a != b) CHECK(*is_transverse_rule(g, a, b) == is_transverse_roots(g, a, b));
        ++groups;
      }
    }
  CHECK(groups == 24);
}

TEST_CASE("table cells") {
  const Group& g26 = bct::test::g26();
  TransvTable t26 = TransvTable::build(g26);
  std::set<HypId> partners;
  for (const auto& h : g26.hyperplanes())
    if (h.id != hi(g26, 3) && t26.transverse(hi(g26, 3), h.id)) partners.insert(h.id);
  CHECK(partners == std::set<HypId>{hij(g26, 1, 2, 0, 3), hij(g26, 1, 2, 1, 3), hij(g26, 1, 2, 2, 3)});

  for (int m = 2; m <= 4; ++m) {
    Group g = Group::imprimitive(m, 1, 3);
    TransvTable t = TransvTable::build(g);
    const auto& cell = t.mapped_by(hi(g, 1), hi(g, 2));
    CHECK(cell.size() == static_cast<std::size_t>(m));
    for (int r : cell) {
      auto e = std::get<MonomialElem>(g.element(g.reflections()[r]));
      CHECK(e.perm == std::vector<int>{1, 0, 2});
    }
  }

  Group s3 = Group::imprimitive(1, 1, 3);
  TransvTable ts = TransvTable::build(s3);
  const auto& cell = ts.mapped_by(hij(s3, 1, 2, 0, 1), hij(s3, 1, 3, 0, 1));
  REQUIRE(cell.size() == 1);
  CHECK(std::get<MonomialElem>(s3.element(s3.reflections()[cell[0]])).perm == std::vector<int>{0, 2, 1});
}

TEST_CASE("table is invariant under relabeling by group elements") {
  std::mt19937 rng(11);
  for (const Group* g : {&bct::test::g25(), &bct::test::g26()}) {
    TransvTable t = TransvTable::build(*g);
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g->order() - 1));
    const HypId nh = static_cast<HypId>(g->num_hyperplanes());
    for (int trial = 0; trial < 20; ++trial) {
      ElemId w = pick(rng);
      for (HypId a = 0; a < nh; ++a)
        for (HypId b = 0; b < nh; ++b) {
          if (a == b) continue;
          CHECK(t.transverse(a, b) == t.transverse(g->act(w, a), g->act(w, b)));
          CHECK(t.mapped_by(a, b).size() == t.mapped_by(g->act(w, a), g->act(w, b)).size());
        }
    }
  }
}

TEST_CASE("collections and orbits") {
  const Group& g26 = bct::test::g26();
  TransvTable t26 = TransvTable::build(g26);
  auto c26 = enumerate_collections(g26, t26);
  CHECK(c26.size() == 58);
  CHECK(c26.front().empty());
  auto o26 = collection_orbits(g26, t26);
  REQUIRE(o26.size() == 4);
  std::multiset<std::pair<std::size_t, std::size_t>> rows;
  for (const auto& o : o26) rows.insert({o.cardinality, o.orbit_size});
  CHECK(rows == std::multiset<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 9}, {1, 12}, {2, 36}});

  const Group& g25 = bct::test::g25();
  auto o25 = collection_orbits(g25, TransvTable::build(g25));
  REQUIRE(o25.size() == 4);
  CHECK(o25[1].orbit_size == 12);
  CHECK(o25[2].orbit_size == 12);
  CHECK(o25[2].stab_order == 54);
  CHECK(o25[3].orbit_size == 4);
  CHECK(o25[3].cardinality == 3);

  Group s3 = Group::imprimitive(1, 1, 3);
  auto cs = enumerate_collections(s3, TransvTable::build(s3));
  CHECK(cs.size() == 4);
  for (const auto& c : cs) CHECK(c.size() <= 1);

  for (const Group* g : {&g25, &g26}) {
    TransvTable t = TransvTable::build(*g);
    for (const auto& o : collection_orbits(*g, t)) {
      CHECK(o.orbit_size * o.stab_order == g->order());
      CHECK(o.representative == o.members.front());
      CHECK(g->stabilizer(o.representative).order() == o.stab_order);
    }
  }
}

TEST_CASE("small orbits") {
  Group s3 = Group::imprimitive(1, 1, 3);
  CHECK(small_orbit(s3, {}) == std::vector<Collection>{{}});
  CHECK(small_orbit(s3, {hij(s3, 1, 2, 0, 1)}).size() == 3);
  Group g224 = Group::imprimitive(2, 2, 4);
  Collection b{hij(g224, 1, 2, 0, 2), hij(g224, 1, 2, 1, 2), hij(g224, 3, 4, 0, 2), hij(g224, 3, 4, 1, 2)};
  std::sort(b.begin(), b.end());
  auto so = small_orbit(g224, b);
  CHECK(std::find(so.begin(), so.end(), b) != so.end());
}

TEST_CASE("at most one reflection maps one transverse pair onto a disjoint one") {
  std::vector<Group> groups;
  for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 4}, {3, 1, 4}, {2, 1, 4}, {4, 4, 4}})
    groups.push_back(Group::imprimitive(m, p, n));
  std::vector<const Group*> all{&bct::test::g25(), &bct::test::g26()};
  for (const auto& g : groups) all.push_back(&g);
  std::size_t checked = 0;
  for (const Group* g : all) {
    TransvTable t = TransvTable::build(*g);
    const HypId nh = static_cast<HypId>(g->num_hyperplanes());
    for (HypId a = 0; a < nh; ++a)
      for (HypId b = 0; b < nh; ++b) {
        if (a == b || !t.transverse(a, b)) continue;
        std::map<std::pair<HypId, HypId>, int> count;
        for (ElemId r : g->reflections()) {
          HypId x = g->act(r, a), y = g->act(r, b);
          if (x == a || x == b || y == a || y == b) continue;
          ++count[{x, y}];
        }
        for (const auto& [key, c] : count) {
          CHECK(c == 1);
          ++checked;
        }
      }
  }
  CHECK(checked > 0);
}
