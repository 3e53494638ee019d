#include <algorithm>

#include "bct/brauer_module.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bct;
using bct::test::hi;
using bct::test::hij;

namespace {

Collection sorted(Collection b) {
  std::sort(b.begin(), b.end());
  return b;
}

// Every admissible orbit representative: build, verify, and check the dimension identity.
void verify_group(const Group& g, const FieldConfig& cfg, bool singletons_only = false) {
  CAPTURE(g.name());
  TransvTable t = TransvTable::build(g);
  auto orbits = collection_orbits(g, t);
  auto c = classify_group(g, t, orbits, cfg.is_mu6() ? cfg : FieldConfig::mu6());
  int built = 0;
  for (const auto& rec : c.records) {
    if (!rec.admissible(cfg)) continue;
    if (singletons_only && rec.orbit.cardinality != 1) continue;
    auto v0 = quotient_regular_rep(g, t, rec.orbit.representative, cfg);
    CHECK(v0.degree() == rec.quotient(cfg));
    auto m = induce(g, t, v0, cfg);
    CHECK(m.dim() == rec.orbit.orbit_size * v0.degree());
    CHECK(m.dim() * rec.orbit.stab_order == g.order() * v0.degree());
    auto report = verify_defining_relations(g, t, m);
    CAPTURE(report.first_failure);
    CHECK(report.all());
    ++built;
  }
  CHECK(built > 0);
}

}  // namespace

TEST_CASE("sparse operators") {
  SparseOp a(3), b(3);
  a.add(0, 1, LaurentScalar::delta());
  a.add(2, 1, LaurentScalar(3));
  b.add(1, 2, LaurentScalar(2));
  SparseOp ab = a * b;
  CHECK(ab.at(0, 2) == LaurentScalar(2) * LaurentScalar::delta());
  CHECK(ab.at(2, 2) == LaurentScalar(6));
  CHECK(ab.nonzeros() == 2);
  CHECK((b * a).is_zero() == false);
  a.add(2, 1, LaurentScalar(-3));
  CHECK(a.nonzeros() == 1);
  CHECK(SparseOp::identity(3) * b == b);
  auto d = ab.dense();
  CHECK(d(2, 2) == LaurentScalar(6));
  CHECK(d(1, 1).is_zero());
  CHECK(ab.row_support() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("quotient representations") {
  Group s3 = Group::imprimitive(1, 1, 3);
  TransvTable t3 = TransvTable::build(s3);
  auto v = quotient_regular_rep(s3, t3, {hij(s3, 1, 2, 0, 1)});
  CHECK(v.degree() == 1);
  auto empty = quotient_regular_rep(s3, t3, {});
  CHECK(empty.degree() == 6);

  Group g312 = Group::imprimitive(3, 1, 2);
  TransvTable t312 = TransvTable::build(g312);
  auto vh = quotient_regular_rep(g312, t312, {hi(g312, 1)});
  CHECK(vh.kb.order() == 3);
  CHECK(vh.degree() == vh.stab.order() / 3);
  // The representation is a homomorphism on Stab(B).
  for (ElemId x : vh.stab.elements)
    for (ElemId y : vh.stab.generators)
      CHECK(vh.image(g312, g312.mul(x, y)) == vh.image(g312, x) * vh.image(g312, y));

  Group g313 = Group::imprimitive(3, 1, 3);
  TransvTable t313 = TransvTable::build(g313);
  CHECK_THROWS_AS(quotient_regular_rep(g313, t313, sorted({hi(g313, 1), hij(g313, 2, 3, 0, 3)})), Error);
}

TEST_CASE("induced module examples") {
  Group s3 = Group::imprimitive(1, 1, 3);
  TransvTable t = TransvTable::build(s3);
  const HypId h12 = hij(s3, 1, 2, 0, 1);
  auto m = induce(s3, t, trivial_rep(s3, t, {h12}));
  CHECK(m.dim() == 3);
  // eps(H_12) is a single delta entry on the block of {H_12}.
  CHECK(m.eps[h12].row_support().size() == 1);
  const std::size_t k = m.block_of({h12});
  CHECK(m.eps[h12].at(k, k) == LaurentScalar::delta());

  auto empty = induce(s3, t, quotient_regular_rep(s3, t, {}));
  for (const auto& e : empty.eps) CHECK(e.is_zero());

  Group g212 = Group::imprimitive(2, 1, 2);
  TransvTable t212 = TransvTable::build(g212);
  auto trivial = trivial_rep(g212, t212, {hi(g212, 1)});
  CHECK(trivial.degree() == 1);
  auto m212 = induce(g212, t212, trivial);
  CHECK(m212.dim() == 2);
  CHECK(verify_defining_relations(g212, t212, m212).all());
  // The quotient regular representation has degree |Stab(B)|/|K_B| = 2 here.
  CHECK(induce(g212, t212, quotient_regular_rep(g212, t212, {hi(g212, 1)})).dim() == 4);
}

TEST_CASE("defining relations on imprimitive groups") {
  verify_group(Group::imprimitive(1, 1, 3), FieldConfig::generic());
  verify_group(Group::imprimitive(1, 1, 4), FieldConfig::generic());
  verify_group(Group::imprimitive(2, 1, 2), FieldConfig::generic());
  verify_group(Group::imprimitive(3, 1, 2), FieldConfig::generic());
  verify_group(Group::imprimitive(2, 2, 4), FieldConfig::generic());
}

TEST_CASE("defining relations on G26 singleton orbits") {
  verify_group(bct::test::g26(), FieldConfig::generic(), true);
}

TEST_CASE("G25 conditional module") {
  const Group& g = bct::test::g25();
  TransvTable t = TransvTable::build(g);
  auto orbits = collection_orbits(g, t);
  const Collection& b = orbits[2].representative;
  REQUIRE(b.size() == 2);
  CHECK_THROWS_AS(quotient_regular_rep(g, t, b, FieldConfig::generic()), Error);
  for (int e : {1, 5}) {
    auto v0 = quotient_regular_rep(g, t, b, FieldConfig::mu6(e));
    CHECK(v0.degree() == 1);
    CHECK(!v0.chi.empty());
    auto m = induce(g, t, v0, FieldConfig::mu6(e));
    CHECK(m.dim() == 12);
    CHECK(verify_defining_relations(g, t, m).all());
  }
  // The trivial representation does not match the character forced by D0_B.
  CHECK_THROWS_AS(induce(g, t, trivial_rep(g, t, b), FieldConfig::mu6(1)), Error);
  // A character built for mu must not pass with mu^-1.
  auto v0 = quotient_regular_rep(g, t, b, FieldConfig::mu6(1));
  try {
    induce(g, t, v0, FieldConfig::mu6(5));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotAdmissiblePair);
  }
}

TEST_CASE("non-admissible pairs are refused") {
  // The sign character of K_B is not killed by Rel(B).
  Group s4 = Group::imprimitive(1, 1, 4);
  TransvTable t = TransvTable::build(s4);
  auto v0 = quotient_regular_rep(s4, t, sorted({hij(s4, 1, 2, 0, 1), hij(s4, 3, 4, 0, 1)}));
  CHECK(v0.degree() == 1);
  v0.chi.assign(v0.kb.order(), CycNumber(1));
  for (std::size_t i = 0; i < v0.kb.order(); ++i) {
    const auto mono = std::get<MonomialElem>(s4.element(v0.kb.elements[i]));
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int c = a + 1; c < 4; ++c) inversions += mono.perm[a] > mono.perm[c];
    if (inversions % 2) v0.chi[i] = CycNumber(-1);
  }
  try {
    induce(s4, t, v0);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotAdmissiblePair);
  }
}

TEST_CASE("perturbed module fails B1") {
  Group s3 = Group::imprimitive(1, 1, 3);
  TransvTable t = TransvTable::build(s3);
  const HypId h12 = hij(s3, 1, 2, 0, 1);
  auto m = induce(s3, t, quotient_regular_rep(s3, t, {h12}));
  REQUIRE(verify_defining_relations(s3, t, m).all());
  auto bad = verify_defining_relations(s3, t, perturbed(m, h12));
  CHECK(!bad.b1);
  CHECK(bad.first_failure.find("B1") == 0);
  auto empty = induce(s3, t, quotient_regular_rep(s3, t, {}));
  CHECK_THROWS_AS(perturbed(empty, h12), Error);
}

TEST_CASE("semisimplicity census") {
  auto census = [](const Group& g, const FieldConfig& cfg) {
    TransvTable t = TransvTable::build(g);
    auto c = classify_group(g, t, collection_orbits(g, t), FieldConfig::mu6());
    return semisimplicity_census(g, t, c, cfg);
  };
  auto s3 = census(Group::imprimitive(1, 1, 3), FieldConfig::generic());
  CHECK(s3.sum_of_squares == 15);
  CHECK(s3.dimension == 15);
  CHECK(s3.ideal_checks == 1);
  CHECK(census(Group::imprimitive(2, 1, 2), FieldConfig::generic()).sum_of_squares == 24);
  auto g25 = census(bct::test::g25(), FieldConfig::mu6());
  CHECK(g25.sum_of_squares == 3416);
  CHECK(census(bct::test::g25(), FieldConfig::generic()).sum_of_squares == 3272);
}
