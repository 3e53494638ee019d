#include "bct/transversality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bct/error.hpp"

namespace bct {

namespace {

// Shape of a hyperplane of G(m,p,n): H_i has j = -1.
struct MonomialShape {
  int i = 0, j = -1;
};

MonomialShape shape_of(const Group& g, HypId h) {
  const auto e = std::get<MonomialElem>(g.element(g.hyperplanes()[h].dist_reflection));
  MonomialShape s;
  std::vector<int> moved;
  for (int k = 0; k < g.n(); ++k)
    if (e.perm[k] != k) moved.push_back(k);
  if (moved.empty()) {
    for (int k = 0; k < g.n(); ++k)
      if (e.exps[k] != 0) s.i = k;
    return s;
  }
  s.i = moved[0];
  s.j = moved[1];
  return s;
}

void check_distinct(HypId h1, HypId h2) {
  if (h1 == h2) throw Error(ErrorCode::NotDistinct, "transversality needs two distinct hyperplanes");
}

}  // namespace

bool is_transverse_roots(const Group& g, HypId h1, HypId h2) {
  check_distinct(h1, h2);
  const auto& hs = g.hyperplanes();
  std::vector<FieldVector<CycNumber>> rows{hs[h1].root, hs[h2].root};
  CycMatrix basis = matrix_from_rows(rows, static_cast<std::size_t>(g.rank()));
  for (const auto& h : hs) {
    if (h.id == h1 || h.id == h2) continue;
    if (in_span(h.root, basis)) return false;
  }
  return true;
}

std::optional<bool> is_transverse_rule(const Group& g, HypId h1, HypId h2) {
  check_distinct(h1, h2);
  if (g.kind() != GroupKind::Imprimitive) return std::nullopt;
  MonomialShape a = shape_of(g, h1), b = shape_of(g, h2);
  if (a.j < 0 && b.j < 0) return false;
  if (a.j < 0) std::swap(a, b);
  if (b.j < 0) return b.i != a.i && b.i != a.j;
  int shared = (a.i == b.i) + (a.i == b.j) + (a.j == b.i) + (a.j == b.j);
  if (shared == 0) return true;
  if (shared == 1) return false;
  // Same pair of indices, different twists.
  return g.m() == 2 && g.p() == 2;
}

bool is_transverse(const Group& g, HypId h1, HypId h2) {
  bool roots = is_transverse_roots(g, h1, h2);
  if (auto fast = is_transverse_rule(g, h1, h2))
    ensure(*fast == roots, "combinatorial and root transversality disagree on " + g.hyperplanes()[h1].label +
                               ", " + g.hyperplanes()[h2].label);
  return roots;
}

TransvTable TransvTable::build(const Group& g) {
  const std::size_t n = g.num_hyperplanes();
  std::vector<char> flags(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool t = is_transverse(g, static_cast<HypId>(a), static_cast<HypId>(b));
      flags[a * n + b] = flags[b * n + a] = t;
    }
  return from_flags(g, flags);
}

TransvTable TransvTable::from_flags(const Group& g, const std::vector<char>& flags) {
  TransvTable t;
  t.n_ = g.num_hyperplanes();
  ensure(flags.size() == t.n_ * t.n_, "transversality flag table has the wrong size");
  t.flags_ = flags;
  t.fill_mappings(g);
  return t;
}

void TransvTable::fill_mappings(const Group& g) {
  mapped_.assign(n_ * n_, {});
  const auto& refl = g.reflections();
  for (std::size_t r = 0; r < refl.size(); ++r)
    for (std::size_t h = 0; h < n_; ++h) {
      HypId img = g.act(refl[r], static_cast<HypId>(h));
      if (img != static_cast<HypId>(h)) mapped_[h * n_ + img].push_back(static_cast<int>(r));
    }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b) continue;
      ensure(flags_[a * n_ + b] == flags_[b * n_ + a], "transversality table is not symmetric");
      ensure(!flags_[a * n_ + b] || mapped_[a * n_ + b].empty(),
             "a reflection maps a hyperplane to a transverse one");
    }
}

bool TransvTable::transverse_with(HypId h, const Collection& b) const {
  for (HypId x : b)
    if (x == h || !transverse(h, x)) return false;
  return true;
}

bool TransvTable::is_collection(const Collection& b) const {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0 && b[i - 1] >= b[i]) return false;
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!transverse(b[i], b[j])) return false;
  }
  return true;
}

std::vector<Collection> enumerate_collections(const Group& g, const TransvTable& t) {
  std::vector<Collection> out;
  Collection cur;
  const HypId n = static_cast<HypId>(g.num_hyperplanes());
  // Depth-first over increasing ids; preorder output is lexicographic.
  auto rec = [&](auto&& self, HypId start) -> void {
    out.push_back(cur);
    for (HypId h = start; h < n; ++h) {
      if (!t.transverse_with(h, cur)) continue;
      cur.push_back(h);
      self(self, h + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<OrbitRecord> collection_orbits(const Group& g, const TransvTable& t) {
  std::vector<OrbitRecord> records;
  std::set<Collection> seen;
  for (const auto& c : enumerate_collections(g, t)) {
    if (seen.count(c)) continue;
    std::set<Collection> orbit;
    std::size_t stab = 0;
    for (ElemId w = 0; w < g.order(); ++w) {
      Collection img = g.act(w, c);
      if (img == c) ++stab;
      orbit.insert(std::move(img));
    }
    OrbitRecord rec;
    rec.representative = *orbit.begin();
    rec.orbit_size = orbit.size();
    rec.stab_order = stab;
    rec.cardinality = c.size();
    rec.members.assign(orbit.begin(), orbit.end());
    ensure(rec.orbit_size * rec.stab_order == g.order(), "orbit-stabilizer identity fails");
    for (const auto& m : rec.members) ensure(t.is_collection(m), "image of a collection is not transverse");
    seen.insert(orbit.begin(), orbit.end());
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.cardinality != b.cardinality) return a.cardinality < b.cardinality;
    return a.representative < b.representative;
  });
  return records;
}

std::vector<Collection> small_orbit(const Group& g, const Collection& b) {
  std::set<Collection> out{b};
  for (ElemId r : g.reflections()) out.insert(g.act(r, b));
  return {out.begin(), out.end()};
}

}  // namespace bct
