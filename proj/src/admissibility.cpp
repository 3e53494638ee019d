#include "bct/admissibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "bct/error.hpp"

namespace bct {

namespace {

std::size_t index_in(const Subgroup& s, ElemId e) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), e);
  ensure(it != s.elements.end() && *it == e, "element outside subgroup");
  return static_cast<std::size_t>(it - s.elements.begin());
}

bool is_zero_vec(const ThetaVector& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

std::vector<Rational> to_rational(const ThetaVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

RowSpace<Rational> span_of(const std::vector<ThetaVector>& vs, std::size_t dim) {
  RowSpace<Rational> rs(dim);
  for (const auto& v : vs) rs.insert(to_rational(v));
  return rs;
}

// Small generating set of a subgroup, picked greedily in element order.
std::vector<ElemId> generating_set(const Group& g, const Subgroup& s) {
  std::vector<ElemId> gens;
  std::vector<char> covered(g.order(), 0);
  covered[g.identity()] = 1;
  for (ElemId x : s.elements) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (ElemId y : g.subgroup_closure(gens).elements) covered[y] = 1;
  }
  return gens;
}

// Indices (i, j, kappa) of H_ij^kappa, or (i, -1, 0) for H_i; 0-based.
struct MonoHyp {
  int i = 0, j = -1, kappa = 0;
};

MonoHyp decode_hyperplane(const Group& g, HypId h) {
  const auto& root = g.hyperplanes()[h].root;
  std::vector<int> nz;
  for (int k = 0; k < static_cast<int>(root.size()); ++k)
    if (!root[k].is_zero()) nz.push_back(k);
  if (nz.size() == 1) return {nz[0], -1, 0};
  ensure(nz.size() == 2 && root[nz[0]] == CycNumber(1), "unexpected monomial root");
  for (int k = 0; k < g.m(); ++k)
    if (-root[nz[1]] == CycNumber::zeta(g.m(), -k)) return {nz[0], nz[1], k};
  ensure(false, "unexpected monomial root");
  return {};
}

void require_imprimitive(const Group& g) {
  if (g.kind() != GroupKind::Imprimitive)
    throw Error(ErrorCode::InvalidParameters, "closed forms apply only to G(m,p,n)");
}

// Shape of B in G(m,p,n): 1 for pairwise disjoint H_ij^k, 2 for doubled
// {H_ij^0, H_ij^1} pairs in G(2,2,n), 0 otherwise.
int gmpn_shape(const Group& g, const Collection& b, std::vector<int>* used) {
  std::vector<MonoHyp> hs;
  for (HypId h : b) hs.push_back(decode_hyperplane(g, h));
  std::vector<int> count(g.n(), 0);
  for (const auto& h : hs) {
    if (h.j < 0) return 0;
    ++count[h.i];
    ++count[h.j];
  }
  if (used) {
    used->assign(g.n(), 0);
    for (int k = 0; k < g.n(); ++k) (*used)[k] = count[k] > 0;
  }
  if (std::all_of(count.begin(), count.end(), [](int c) { return c <= 1; })) return 1;
  if (g.m() != 2 || g.p() != 2) return 0;
  std::map<std::pair<int, int>, int> pairs;
  for (const auto& h : hs) ++pairs[{h.i, h.j}];
  for (const auto& [ij, c] : pairs)
    if (c != 2) return 0;
  for (int c : count)
    if (c != 0 && c != 2) return 0;
  return 2;
}

}  // namespace

std::vector<int> reflections_in(const Group& g, const Collection& b) {
  std::vector<int> out;
  for (HypId h : b)
    for (int r : g.reflections_on(h)) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup k_subgroup(const Group& g, const Collection& b) {
  const auto& refl = g.reflections();
  std::set<ElemId> gens;
  for (int r : reflections_in(g, b)) gens.insert(refl[r]);
  std::map<Collection, std::vector<int>> by_image;
  for (int r = 0; r < static_cast<int>(refl.size()); ++r) {
    Collection img = g.act(refl[r], b);
    if (img != b) by_image[img].push_back(r);
  }
  for (const auto& [img, rs] : by_image) {
    std::vector<HypId> moved;
    for (HypId h : b)
      if (!std::binary_search(img.begin(), img.end(), h)) moved.push_back(h);
    for (int s1 : rs)
      for (int s2 : rs) {
        if (s1 == s2) continue;
        bool ok = true;
        for (HypId h : moved)
          if (g.act(refl[s1], h) == g.act(refl[s2], h)) ok = false;
        if (ok) gens.insert(g.mul(g.inv(refl[s2]), refl[s1]));
      }
  }
  Subgroup k = g.subgroup_closure(std::vector<ElemId>(gens.begin(), gens.end()));
  Subgroup stab = g.stabilizer(b);
  for (ElemId x : k.elements) ensure(stab.contains(x), "K_B not inside Stab(B)");
  for (ElemId s : generating_set(g, stab))
    for (ElemId x : k.generators) ensure(k.contains(g.conjugate(s, x)), "K_B not normal in Stab(B)");
  return k;
}

std::vector<RelElement> rel_set(const Group& g, const TransvTable& t, const Collection& b) {
  const auto& refl = g.reflections();
  const std::size_t n = refl.size();
  std::vector<RelElement> out;
  for (int r : reflections_in(g, b)) {
    RelElement e{ThetaVector(n + 1, 0), {g.identity(), refl[r]}};
    e.vec[r] = 1;
    e.vec[n] = -1;
    out.push_back(std::move(e));
  }
  for (HypId h1 : b)
    for (HypId h2 : b) {
      if (h1 == h2) continue;
      for (HypId h = 0; h < static_cast<HypId>(g.num_hyperplanes()); ++h) {
        if (std::binary_search(b.begin(), b.end(), h)) continue;
        if (t.transverse(h1, h) || t.transverse(h2, h)) continue;
        RelElement e{ThetaVector(n + 1, 0), {}};
        for (int r : t.mapped_by(h1, h)) {
          e.vec[r] += 1;
          e.support.push_back(refl[r]);
        }
        for (int r : t.mapped_by(h2, h)) {
          e.vec[r] -= 1;
          e.support.push_back(refl[r]);
        }
        std::sort(e.support.begin(), e.support.end());
        out.push_back(std::move(e));
      }
    }
  return out;
}

std::vector<ThetaVector> rel_bar(const Group& g, const TransvTable& t, const Collection& b) {
  const auto& refl = g.reflections();
  const std::size_t n = refl.size();
  std::vector<Collection> image(n);
  for (std::size_t r = 0; r < n; ++r) image[r] = g.act(refl[r], b);
  std::set<ThetaVector> out;
  for (const auto& e : rel_set(g, t, b)) {
    if (e.vec[n] != 0) {
      out.insert(e.vec);  // R_B - 1
      continue;
    }
    for (const auto& bp : small_orbit(g, b)) {
      if (bp == b) continue;
      ThetaVector v(n + 1, 0);
      for (std::size_t r = 0; r < n; ++r)
        if (e.vec[r] != 0 && image[r] == bp) v[r] = e.vec[r];
      if (!is_zero_vec(v)) out.insert(std::move(v));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<ThetaVector> rel_bar_tables(const Group& g, const TransvTable&, const Collection& b) {
  const auto& refl = g.reflections();
  const std::size_t n = refl.size();
  std::set<ThetaVector> out;
  for (int r : reflections_in(g, b)) {
    ThetaVector v(n + 1, 0);
    v[r] = 1;
    v[n] = -1;
    out.insert(v);
  }
  for (const auto& bp : small_orbit(g, b)) {
    if (bp == b) continue;
    std::vector<int> to_bp;
    for (std::size_t r = 0; r < n; ++r)
      if (g.act(refl[r], b) == bp) to_bp.push_back(static_cast<int>(r));
    std::vector<HypId> rows, cols;
    std::set_difference(b.begin(), b.end(), bp.begin(), bp.end(), std::back_inserter(rows));
    std::set_difference(bp.begin(), bp.end(), b.begin(), b.end(), std::back_inserter(cols));
    // cell[i][k] = reflections sending B to B' and rows[i] to cols[k]
    std::vector<std::vector<std::vector<int>>> cell(rows.size(), std::vector<std::vector<int>>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < cols.size(); ++k)
        for (int r : to_bp)
          if (g.act(refl[r], rows[i]) == cols[k]) cell[i][k].push_back(r);
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
          if (i == j) continue;
          ThetaVector v(n + 1, 0);
          for (int r : cell[i][k]) v[r] += 1;
          for (int r : cell[j][k]) v[r] -= 1;
          if (!is_zero_vec(v)) out.insert(std::move(v));
        }
  }
  return {out.begin(), out.end()};
}

int mu_ratio_code(const Group& g, int s1, int s2) {
  const int c1 = g.reflection_class(s1), c2 = g.reflection_class(s2);
  if (c1 == c2) return 0;
  return g.class_has_distinguished(c1) ? -1 : 1;
}

DPData d_and_p(const Group& g, const Collection& b, const std::vector<ThetaVector>& rel_bar_list) {
  const auto& refl = g.reflections();
  const std::size_t n = refl.size();
  auto rs = span_of(rel_bar_list, n + 1);
  // v(i) - v(j) in the span is an equivalence relation; group positions by it.
  std::vector<int> cls(n + 1, -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t c = 0; c < reps.size() && cls[i] < 0; ++c) {
      std::vector<Rational> v(n + 1);
      v[i] = Rational(1);
      v[reps[c]] = Rational(-1);
      if (rs.contains(v)) cls[i] = static_cast<int>(c);
    }
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  DPData out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (cls[i] == cls[j]) {
        ThetaVector v(n + 1, 0);
        v[i] = 1;
        v[j] = -1;
        out.d.push_back(std::move(v));
      }
  const auto rb = reflections_in(g, b);
  auto in_rb = [&](std::size_t r) { return std::binary_search(rb.begin(), rb.end(), static_cast<int>(r)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cls[i] == cls[j] && !in_rb(i) && !in_rb(j))
        out.p.emplace_back(static_cast<int>(i), static_cast<int>(j));
  for (int r : rb) out.d0.emplace_back(refl[r], 0);
  for (auto [i, j] : out.p) out.d0.emplace_back(g.mul(g.inv(refl[j]), refl[i]), mu_ratio_code(g, i, j));
  return out;
}

bool check_a1(const std::vector<ThetaVector>& rel_bar_list, std::size_t n_refl) {
  for (const auto& v : rel_bar_list) {
    std::size_t nz = 0;
    bool unit = true;
    for (std::size_t r = 0; r <= n_refl; ++r) {
      if (v[r] == 0) continue;
      ++nz;
      if (r == n_refl || (v[r] != 1 && v[r] != -1)) unit = false;
    }
    if (nz == 1 && unit) return true;
  }
  return false;
}

bool check_a1_span(const std::vector<ThetaVector>& rel_bar_list, std::size_t n_refl) {
  auto rs = span_of(rel_bar_list, n_refl + 1);
  for (std::size_t s = 0; s <= n_refl; ++s) {
    std::vector<Rational> e(n_refl + 1);
    e[s] = Rational(1);
    if (rs.contains(e)) return true;
  }
  return false;
}

A2Result check_a2(const Group& g, const Collection& b, const std::vector<ThetaVector>& rel_bar_list,
                  const DPData& dp, const Subgroup& kb) {
  const std::size_t dim = g.reflections().size() + 1;
  A2Result out;
  out.span_eq = span_of(rel_bar_list, dim).rank() == span_of(dp.d, dim).rank();
  std::vector<ElemId> gens;
  for (int r : reflections_in(g, b)) gens.push_back(g.reflections()[r]);
  for (auto [i, j] : dp.p) gens.push_back(g.mul(g.inv(g.reflections()[j]), g.reflections()[i]));
  out.subgroup_eq = g.subgroup_closure(gens) == kb;
  return out;
}

std::size_t two_sided_ideal_dim(const Group& g, const Subgroup& sub,
                                const std::vector<std::pair<ElemId, CycNumber>>& generators) {
  const std::size_t k = sub.order();
  int order = 1;
  for (const auto& [x, c] : generators) order = std::lcm(order, c.order());
  const CycNumber zero = CycNumber(0).embed(order);
  const auto gens = generating_set(g, sub);
  RowSpace<CycNumber> rs(k);
  std::deque<std::vector<CycNumber>> queue;
  auto add = [&](std::vector<CycNumber> v) {
    if (rs.insert(v)) queue.push_back(std::move(v));
  };
  for (const auto& [x, c] : generators) {
    std::vector<CycNumber> v(k, zero);
    v[index_in(sub, x)] += CycNumber(1).embed(order);
    v[index_in(sub, g.identity())] -= c.embed(order);
    add(std::move(v));
  }
  // Closing under left and right multiplication by generators of `sub` spans the ideal.
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (ElemId s : gens) {
      std::vector<CycNumber> left(k, zero), right(k, zero);
      for (std::size_t i = 0; i < k; ++i) {
        if (v[i].is_zero()) continue;
        left[index_in(sub, g.mul(s, sub.elements[i]))] = v[i];
        right[index_in(sub, g.mul(sub.elements[i], s))] = v[i];
      }
      add(std::move(left));
      add(std::move(right));
    }
  }
  return rs.rank();
}

std::size_t d0_ideal_dim(const Group& g, const Subgroup& stab, const DPData& dp, const CycNumber& mu) {
  std::vector<std::pair<ElemId, CycNumber>> gens;
  const CycNumber one = CycNumber(1).embed(6);
  for (auto [x, code] : dp.d0) gens.emplace_back(x, code == 0 ? one : (code > 0 ? mu : mu.inv()).embed(6));
  return two_sided_ideal_dim(g, stab, gens);
}

std::optional<std::vector<int>> chi_exponents(const Group& g, const Subgroup& kb, const Collection& b,
                                              const DPData& dp) {
  std::vector<std::pair<ElemId, int>> gens;
  for (int r : reflections_in(g, b)) gens.emplace_back(g.reflections()[r], 0);
  for (auto [i, j] : dp.p)
    gens.emplace_back(g.mul(g.inv(g.reflections()[j]), g.reflections()[i]), (mu_ratio_code(g, i, j) + 6) % 6);
  std::vector<int> val(kb.order(), -1);
  val[index_in(kb, g.identity())] = 0;
  std::deque<ElemId> queue{g.identity()};
  while (!queue.empty()) {
    ElemId x = queue.front();
    queue.pop_front();
    const int vx = val[index_in(kb, x)];
    for (auto [s, e] : gens) {
      ElemId y = g.mul(x, s);
      int& vy = val[index_in(kb, y)];
      const int want = (vx + e) % 6;
      if (vy < 0) {
        vy = want;
        queue.push_back(y);
      } else if (vy != want) {
        return std::nullopt;
      }
    }
  }
  ensure(std::none_of(val.begin(), val.end(), [](int v) { return v < 0; }), "K_B not generated by D0 elements");
  return val;
}

bool closed_form_admissible(const Group& g, const Collection& b) {
  require_imprimitive(g);
  if (b.size() <= 1) return true;
  std::vector<MonoHyp> hs;
  for (HypId h : b) hs.push_back(decode_hyperplane(g, h));
  if (!(g.m() == 2 && g.p() == 2))
    return std::none_of(hs.begin(), hs.end(), [](const MonoHyp& h) { return h.j < 0; });
  std::map<std::pair<int, int>, int> pairs;
  for (const auto& h : hs) ++pairs[{h.i, h.j}];
  bool any_doubled = false, all_doubled = true;
  for (const auto& [ij, c] : pairs) {
    if (c == 2) any_doubled = true;
    else all_doubled = false;
  }
  return !any_doubled || all_doubled;
}

CollectionAnalysis analyze_collection(const Group& g, const TransvTable& t, const Collection& b) {
  CollectionAnalysis a;
  a.b = b;
  a.stab = g.stabilizer(b);
  a.kb = k_subgroup(g, b);
  const std::size_t n = g.reflections().size();
  a.rel_bar = rel_bar(g, t, b);
  a.a1 = check_a1(a.rel_bar, n);
  a.a1_span = check_a1_span(a.rel_bar, n);
  a.dp = d_and_p(g, b, a.rel_bar);
  a.a2 = check_a2(g, b, a.rel_bar, a.dp, a.kb);
  ensure(!(a.a1 && a.a2.holds()), "A1 and A2 both hold");
  if (!a.a1 && !a.a2.holds()) throw Error(ErrorCode::InternalInconsistency, "neither A1 nor A2 holds for " + g.name());
  if (a.a2.holds())
    for (auto [i, j] : a.dp.p)
      if (g.reflection_class(i) != g.reflection_class(j)) a.conditional = true;
  return a;
}

bool conditional_supported(const Group& g) {
  return g.num_classes() == 2 && g.class_has_distinguished(0) != g.class_has_distinguished(1);
}

AdmissibilityRecord classify(const Group& g, const TransvTable& t, const OrbitRecord& orbit,
                             const FieldConfig& mu_cfg) {
  AdmissibilityRecord rec;
  rec.orbit = orbit;
  const Collection& b = orbit.representative;
  if (g.kind() == GroupKind::Imprimitive && !g.reducible()) rec.closed_form = closed_form_admissible(g, b);
  if (b.empty()) {
    rec.kb_order = 1;
    rec.a2_span = rec.a2_subgroup = true;
    rec.admissible_generic = rec.admissible_mu6 = true;
    rec.quotient_generic = rec.quotient_mu6 = g.order();
    return rec;
  }
  const CollectionAnalysis a = analyze_collection(g, t, b);
  rec.kb_order = a.kb.order();
  ensure(a.stab.order() == orbit.stab_order, "stabilizer order mismatch");
  rec.a1 = a.a1;
  rec.a1_span = a.a1_span;
  rec.a2_span = a.a2.span_eq;
  rec.a2_subgroup = a.a2.subgroup_eq;
  rec.conditional = a.conditional;
  if (a.conditional)
    for (auto [i, j] : a.dp.p)
      if (g.reflection_class(i) != g.reflection_class(j))
        rec.conditional_pair_orders.push_back(g.elem_order(g.mul(g.inv(g.reflections()[j]), g.reflections()[i])));
  std::sort(rec.conditional_pair_orders.begin(), rec.conditional_pair_orders.end());
  rec.conditional_pair_orders.erase(std::unique(rec.conditional_pair_orders.begin(), rec.conditional_pair_orders.end()),
                                    rec.conditional_pair_orders.end());
  const std::size_t q = a.stab.order() / a.kb.order();
  ensure(q * a.kb.order() == a.stab.order(), "|K_B| does not divide |Stab(B)|");
  if (rec.a1) return rec;
  rec.admissible_generic = !rec.conditional;
  rec.quotient_generic = rec.admissible_generic ? q : 0;
  if (!rec.conditional) {
    rec.admissible_mu6 = true;
    rec.quotient_mu6 = q;
  } else if (conditional_supported(g)) {
    const auto chi = chi_exponents(g, a.kb, b, a.dp);
    rec.chi_nontrivial = chi && std::any_of(chi->begin(), chi->end(), [](int v) { return v != 0; });
    rec.d0_dim = d0_ideal_dim(g, a.stab, a.dp, CycNumber::zeta(6, mu_cfg.exponent));
    rec.admissible_mu6 = *rec.d0_dim < a.stab.order();
    if (rec.admissible_mu6) {
      ensure(a.stab.order() - *rec.d0_dim == q, "D0 ideal codimension differs from |Stab(B)/K_B|");
      rec.quotient_mu6 = q;
    }
  }
  if (rec.closed_form) ensure(*rec.closed_form == rec.admissible_generic, "closed-form classification disagrees");
  return rec;
}

Classification classify_group(const Group& g, const TransvTable& t, const std::vector<OrbitRecord>& orbits,
                              const FieldConfig& mu_cfg, int workers) {
  Classification c;
  c.records.resize(orbits.size());
  c.member_kb_orders.resize(orbits.size());
  std::size_t next = 0;
  std::mutex mu;
  std::exception_ptr failure;
  auto work = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= orbits.size() || failure) return;
        i = next++;
      }
      try {
        auto rec = classify(g, t, orbits[i], mu_cfg);
        std::vector<std::size_t> kbs;
        for (const auto& m : orbits[i].members) kbs.push_back(m.empty() ? 1 : k_subgroup(g, m).order());
        for (auto k : kbs) ensure(k == rec.kb_order, "|K_B| differs inside an orbit");
        c.records[i] = std::move(rec);
        c.member_kb_orders[i] = std::move(kbs);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(orbits.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return c;
}

mpz_class dim_brauer(const Group& g, const Classification& c, const FieldConfig& cfg) {
  mpz_class basis = 0, table = 0;
  const mpz_class w = static_cast<unsigned long>(g.order());
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    const auto& rec = c.records[i];
    if (!rec.admissible(cfg)) continue;
    for (std::size_t k : c.member_kb_orders[i]) {
      ensure(g.order() % k == 0, "|K_B| does not divide |W|");
      basis += w / static_cast<unsigned long>(k);
    }
    const mpz_class os = static_cast<unsigned long>(rec.orbit.orbit_size);
    table += os * os * static_cast<unsigned long>(rec.quotient(cfg));
  }
  ensure(basis == table, "basis count differs from the table formula");
  return basis;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class pow_ui(long base, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// Sum over r >= 1 with 2r <= n of (n!/(r! 2^r (n-2r)!))^2 (n-2r)!.
mpz_class matching_sum(int n) {
  mpz_class s = 0;
  for (int r = 1; 2 * r <= n; ++r) {
    mpz_class c = factorial(n) / (factorial(r) * pow_ui(2, r) * factorial(n - 2 * r));
    s += c * c * factorial(n - 2 * r);
  }
  return s;
}

}  // namespace

mpz_class dim_gmpn_formula(int m, int p, int n) {
  if (m < 1 || p < 1 || m % p != 0 || n < 2) throw Error(ErrorCode::InvalidParameters, "need p | m and n >= 2");
  if (m == 2 && p == 2) throw Error(ErrorCode::InvalidParameters, "G(2,2,n) has its own formula");
  mpz_class d = factorial(n) * pow_ui(m, n) / p;
  if (p != m) d += factorial(n) * pow_ui(m, n - 1) * n;
  d += pow_ui(m, n + 1) / p * matching_sum(n);
  return d;
}

mpz_class dim_g22n_formula(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameters, "G(2,2,n) formula needs n >= 3");
  return factorial(n) * pow_ui(2, n - 1) + (pow_ui(2, n) + 1) * matching_sum(n);
}

bool kb_membership_gmpn(const Group& g, ElemId elem, const Collection& b, KbRule rule) {
  require_imprimitive(g);
  std::vector<int> used;
  const int shape = gmpn_shape(g, b, &used);
  if (b.empty() || shape == 0)
    throw Error(ErrorCode::InvalidParameters, "K_B characterization needs disjoint H_ij^k or doubled pairs");
  if (g.act(elem, b) != b) return false;
  const auto mono = std::get<MonomialElem>(g.element(elem));
  for (int k = 0; k < g.n(); ++k) {
    if (used[k]) continue;
    if (mono.perm[k] != k) return false;
    if (shape == 1 && mono.exps[k] != 0) return false;
  }
  if (shape != 1) return true;
  if (rule == KbRule::EntryProduct) return std::accumulate(mono.exps.begin(), mono.exps.end(), 0L) % g.m() == 0;
  // H_ij^k meets span(e_i, e_j) in the line of zeta^k e_i + e_j; images of
  // these lines are again such lines, and the scalar product telescopes.
  long total = 0;
  for (HypId h : b) {
    const MonoHyp a = decode_hyperplane(g, h);
    const MonoHyp t = decode_hyperplane(g, g.act(elem, h));
    // The image zeta^(k + e_i) e_perm(i) + zeta^(e_j) e_perm(j) is a multiple of
    // zeta^k' e_i' + e_j'; the scalar is its e_j' coefficient.
    total += mono.perm[a.j] == t.j ? mono.exps[a.j] : a.kappa + mono.exps[a.i];
  }
  return total % g.m() == 0;
}

std::optional<std::size_t> kb_order_formula(const Group& g, const Collection& b) {
  require_imprimitive(g);
  if (b.size() == 1 && decode_hyperplane(g, b[0]).j < 0) return static_cast<std::size_t>(g.m() / g.p());
  const int shape = gmpn_shape(g, b, nullptr);
  if (b.empty() || shape == 0) return std::nullopt;
  auto fact = [](std::size_t r) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= r; ++k) f *= k;
    return f;
  };
  if (shape == 1) {
    const std::size_t r = b.size();
    std::size_t v = (std::size_t{1} << r) * fact(r);
    for (std::size_t k = 1; k < r; ++k) v *= static_cast<std::size_t>(g.m());
    return v;
  }
  const std::size_t r = b.size() / 2;
  return (std::size_t{1} << (r + static_cast<std::size_t>(g.n()) - 1)) * fact(r);
}

}  // namespace bct
