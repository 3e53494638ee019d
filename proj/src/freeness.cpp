#include "bct/freeness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bct/error.hpp"
#include "bct/lattice.hpp"

namespace bct {

namespace {

bool contains(const Collection& b, HypId h) { return std::binary_search(b.begin(), b.end(), h); }

// Literal membership of +-theta(s), s in R or 1, in the list.
bool has_unit(const std::vector<RelElement>& rel) {
  for (const auto& e : rel) {
    std::size_t nz = 0;
    bool unit = true;
    for (long x : e.vec) {
      if (x == 0) continue;
      ++nz;
      if (x != 1 && x != -1) unit = false;
    }
    if (nz == 1 && unit) return true;
  }
  return false;
}

std::vector<HypId> hyperplane_orbit(const Group& g, HypId h) {
  std::set<HypId> seen{h};
  std::vector<HypId> frontier{h};
  while (!frontier.empty()) {
    HypId x = frontier.back();
    frontier.pop_back();
    for (ElemId s : g.generators()) {
      HypId y = g.act(s, x);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<HypId> hyperplane_with_root(const Group& g, std::vector<CycNumber> root) {
  return g.find_hyperplane_by_root(root);
}

}  // namespace

bool g26_shape(const Group& g) {
  return g.kind() == GroupKind::Matrix && g.order() == 1296 && g.rank() == 3 && g.num_hyperplanes() == 21;
}

bool bar_condition(const Group& g, const TransvTable& t, const std::vector<ElemId>& support, const Collection& b) {
  std::set<HypId> u;
  for (ElemId w : support)
    for (HypId h : b) u.insert(g.act(w, h));
  return t.is_collection(Collection(u.begin(), u.end()));
}

bool acceptable_hyperplane(const Group& g, const TransvTable& t, const Collection& b, HypId h) {
  if (contains(b, h)) return false;
  if (t.transverse_with(h, b)) return false;
  const auto& refl = g.reflections();
  for (HypId h1 : b) {
    if (t.transverse(h1, h)) continue;
    const auto& rs = t.mapped_by(h1, h);
    for (std::size_t i = 1; i < rs.size(); ++i)
      if (g.act(refl[rs[i]], b) != g.act(refl[rs[0]], b)) return false;
  }
  return true;
}

std::vector<std::pair<HypId, HypId>> acceptable_pairs(const Group& g, const TransvTable& t, const Collection& b) {
  std::vector<std::pair<HypId, HypId>> out;
  if (b.empty()) return out;
  std::vector<char> ok(g.num_hyperplanes(), 0);
  for (HypId h = 0; h < static_cast<HypId>(g.num_hyperplanes()); ++h) ok[h] = acceptable_hyperplane(g, t, b, h);
  std::set<std::pair<HypId, HypId>> pairs;
  for (const auto& b2 : small_orbit(g, b))
    for (std::size_t i = 0; i < b2.size(); ++i)
      for (std::size_t j = i + 1; j < b2.size(); ++j)
        if (ok[b2[i]] && ok[b2[j]]) pairs.emplace(b2[i], b2[j]);
  return {pairs.begin(), pairs.end()};
}

std::vector<TauVector> rel_tau(const Group& g, const TransvTable& t, const Collection& b) {
  const auto& refl = g.reflections();
  const std::size_t n = refl.size();
  std::vector<TauVector> out;
  for (auto [h1, h2] : acceptable_pairs(g, t, b))
    for (HypId h : b) {
      if (t.transverse(h, h1) || t.transverse(h, h2)) continue;
      TauVector tau{h, h1, h2, ThetaVector(n + 1, 0), {}};
      for (int r : t.mapped_by(h, h1)) {
        tau.vec[r] += 1;
        tau.support.push_back(refl[r]);
      }
      for (int r : t.mapped_by(h, h2)) {
        tau.vec[r] -= 1;
        tau.support.push_back(refl[r]);
      }
      std::sort(tau.support.begin(), tau.support.end());
      out.push_back(std::move(tau));
    }
  return out;
}

FCheck check_f(const Group& g, const TransvTable& t, const Collection& b) {
  FCheck f;
  const auto rel = rel_set(g, t, b);
  f.f1 = has_unit(rel);
  f.f2a = std::all_of(rel.begin(), rel.end(), [&](const RelElement& e) { return bar_condition(g, t, e.support, b); });
  const auto tau = rel_tau(g, t, b);
  f.tau_count = tau.size();
  f.f2b = true;
  if (b.empty()) return f;
  const CollectionAnalysis a = analyze_collection(g, t, b);
  f.a2 = a.a2.holds();
  if (!f.a2) return f;
  std::vector<std::vector<long>> gens(a.rel_bar.begin(), a.rel_bar.end());
  for (const auto& x : tau) gens.push_back(x.vec);
  IntegerLattice lattice(gens, g.reflections().size() + 1);
  f.f2b = std::all_of(a.dp.d.begin(), a.dp.d.end(), [&](const ThetaVector& v) { return lattice.contains(v); });
  return f;
}

G26Report g26_geometry_suite(const Group& g, const TransvTable& t) {
  G26Report rep;
  if (!g26_shape(g)) throw Error(ErrorCode::InvalidParameters, "group does not have the G26 shape");
  auto h3 = hyperplane_with_root(g, {CycNumber(0), CycNumber(0), CycNumber(1)});
  auto h12 = hyperplane_with_root(g, {CycNumber(1), CycNumber(-1), CycNumber(0)});
  if (!h3 || !h12) throw Error(ErrorCode::InvalidParameters, "G26 geometry needs H_3 and H_12");
  const auto o1 = hyperplane_orbit(g, *h3);
  const auto o2 = hyperplane_orbit(g, *h12);
  rep.o1_size = o1.size();
  rep.o2_size = o2.size();
  if (o1.size() + o2.size() != g.num_hyperplanes() || contains(o1, *h12))
    throw Error(ErrorCode::InvalidParameters, "hyperplanes do not split into the two G26 orbits");

  std::set<Collection> triples;
  rep.exactly_three = true;
  for (HypId h : o1) {
    Collection partners;
    for (HypId x = 0; x < static_cast<HypId>(g.num_hyperplanes()); ++x)
      if (x != h && t.transverse(h, x)) partners.push_back(x);
    if (partners.size() != 3) rep.exactly_three = false;
    for (HypId x : partners)
      if (!contains(o2, x)) rep.exactly_three = false;
    if (h == *h3) rep.h3_partners = partners;
    triples.insert(partners);
  }
  rep.distinct_triples = triples.size() == o1.size();

  rep.o2_non_transverse = true;
  for (HypId a : o2)
    for (HypId b : o2)
      if (a != b && t.transverse(a, b)) rep.o2_non_transverse = false;

  std::set<Collection> pairs;
  for (HypId a = 0; a < static_cast<HypId>(g.num_hyperplanes()); ++a)
    for (HypId b = a + 1; b < static_cast<HypId>(g.num_hyperplanes()); ++b)
      if (t.transverse(a, b)) pairs.insert({a, b});
  rep.pair_count = pairs.size();
  std::set<Collection> left = pairs;
  while (!left.empty()) {
    for (const auto& x : g.orbit(*left.begin())) left.erase(x);
    ++rep.pair_orbits;
  }

  // t2 is the distinguished reflection of H_2; it fixes H_3 and permutes the H_12^k.
  auto h2 = hyperplane_with_root(g, {CycNumber(0), CycNumber(1), CycNumber(0)});
  if (!h2) throw Error(ErrorCode::InvalidParameters, "G26 geometry needs H_2");
  const ElemId t2 = g.hyperplanes()[*h2].dist_reflection;
  Collection base{std::min(*h3, *h12), std::max(*h3, *h12)};
  std::set<Collection> linked{base, g.act(t2, base), g.act(g.mul(t2, t2), base)};
  std::set<Collection> through_h3;
  for (HypId x : rep.h3_partners) through_h3.insert({std::min(*h3, x), std::max(*h3, x)});
  rep.t2_links = linked == through_h3 && linked.size() == 3;
  return rep;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Free: return "free";
    case Verdict::NotFree: return "not_free";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

FreenessReport freeness_verdict(const Group& g, const TransvTable& t, const std::vector<OrbitRecord>& orbits,
                                const Classification& c) {
  FreenessReport rep;
  rep.dim_generic = dim_brauer(g, c, FieldConfig::generic());
  rep.dim_mu6 = dim_brauer(g, c, FieldConfig::mu6());
  const bool is_g26 = g26_shape(g);
  for (const auto& o : orbits) {
    if (is_g26 && o.cardinality > 1) continue;
    OrbitFreeness of{o.representative, check_f(g, t, o.representative)};
    rep.dichotomy = rep.dichotomy && of.f.passes();
    rep.orbits.push_back(std::move(of));
  }
  if (g.kind() == GroupKind::Imprimitive) {
    rep.verdict = Verdict::Free;
    rep.route = "imprimitive";
    rep.basis = "w e_B, B admissible, w in W/K_B";
  } else if (rep.dim_generic < rep.dim_mu6) {
    rep.verdict = Verdict::NotFree;
    rep.route = "dimension-jump";
  } else if (is_g26) {
    rep.g26 = g26_geometry_suite(g, t);
    rep.verdict = rep.g26->all() ? Verdict::Free : Verdict::Undetermined;
    rep.route = "geometric";
    rep.basis = "w e_H, H a hyperplane or empty, w in W/K_H";
  } else {
    rep.verdict = rep.dichotomy ? Verdict::Free : Verdict::Undetermined;
    rep.route = "certificate";
    if (rep.dichotomy) rep.basis = "w e_B, B admissible, w in W/K_B";
  }
  return rep;
}

bool annihilates_block(const Group& g, const InducedModule& m, const ThetaVector& x) {
  const std::size_t k = m.block_of(m.v0.b);
  const SparseOp op = m.theta_operator(g, x);
  for (std::size_t i = 0; i < m.degree(); ++i)
    if (!op.column(k * m.degree() + i).empty()) return false;
  return true;
}

}  // namespace bct
