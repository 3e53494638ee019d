#include "bct/brauer_module.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bct/error.hpp"

namespace bct {

SparseOp SparseOp::identity(std::size_t dim) {
  SparseOp op(dim);
  for (std::size_t i = 0; i < dim; ++i) op.cols_[i].emplace_back(i, LaurentScalar(1));
  return op;
}

void SparseOp::add(std::size_t row, std::size_t col, const LaurentScalar& v) {
  if (v.is_zero()) return;
  auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  } else {
    c.insert(it, Entry(row, v));
  }
}

LaurentScalar SparseOp::at(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : cols_[col])
    if (r == row) return v;
  return LaurentScalar();
}

bool SparseOp::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseOp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

std::vector<std::size_t> SparseOp::row_support() const {
  std::vector<std::size_t> rows;
  for (const auto& c : cols_)
    for (const auto& e : c) rows.push_back(e.first);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

FieldMatrix<LaurentScalar> SparseOp::dense() const {
  const auto n = static_cast<Eigen::Index>(dim());
  FieldMatrix<LaurentScalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = LaurentScalar();
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : cols_[c]) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
  return m;
}

SparseOp& SparseOp::operator+=(const SparseOp& o) {
  ensure(dim() == o.dim(), "operator size mismatch");
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : o.cols_[c]) add(r, c, v);
  return *this;
}

SparseOp& SparseOp::operator-=(const SparseOp& o) {
  ensure(dim() == o.dim(), "operator size mismatch");
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : o.cols_[c]) add(r, c, -v);
  return *this;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  ensure(a.dim() == b.dim(), "operator size mismatch");
  SparseOp out(a.dim());
  for (std::size_t c = 0; c < b.dim(); ++c) {
    std::map<std::size_t, LaurentScalar> acc;
    for (const auto& [k, bv] : b.cols_[c])
      for (const auto& [r, av] : a.cols_[k]) acc[r] += av * bv;
    for (auto& [r, v] : acc)
      if (!v.is_zero()) out.cols_[c].emplace_back(r, std::move(v));
  }
  return out;
}

SparseOp operator*(const LaurentScalar& s, const SparseOp& a) {
  SparseOp out(a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (const auto& [r, v] : a.cols_[c]) out.add(r, c, s * v);
  return out;
}

namespace {

std::size_t index_in(const Subgroup& s, ElemId e) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), e);
  ensure(it != s.elements.end() && *it == e, "element outside subgroup");
  return static_cast<std::size_t>(it - s.elements.begin());
}

Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.generators = g.generators();
  s.elements.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) s.elements[i] = static_cast<ElemId>(i);
  return s;
}

Subgroup trivial_group() {
  Subgroup s;
  s.elements = {0};
  return s;
}

void fill_cosets(const Group& g, StabRep& rep) {
  rep.coset_of.assign(g.order(), -1);
  for (ElemId x : rep.stab.elements) {
    if (rep.coset_of[x] >= 0) continue;
    const int id = static_cast<int>(rep.coset_reps.size());
    rep.coset_reps.push_back(x);
    for (ElemId k : rep.kb.elements) rep.coset_of[g.mul(x, k)] = id;
  }
  ensure(rep.degree() * rep.kb.order() == rep.stab.order(), "cosets do not partition Stab(B)");
}

}  // namespace

std::pair<std::size_t, CycNumber> StabRep::act(const Group& g, ElemId h, std::size_t i) const {
  const ElemId y = g.mul(h, coset_reps[i]);
  const int j = coset_of[y];
  ensure(j >= 0, "element outside Stab(B)");
  if (chi.empty()) return {static_cast<std::size_t>(j), CycNumber(1)};
  const ElemId k = g.mul(g.inv(coset_reps[j]), y);
  return {static_cast<std::size_t>(j), chi[index_in(kb, k)]};
}

FieldMatrix<LaurentScalar> StabRep::image(const Group& g, ElemId h) const {
  const auto d = static_cast<Eigen::Index>(degree());
  FieldMatrix<LaurentScalar> m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = LaurentScalar();
  for (std::size_t i = 0; i < degree(); ++i) {
    auto [j, c] = act(g, h, i);
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = LaurentScalar(c);
  }
  return m;
}

StabRep quotient_regular_rep(const Group& g, const TransvTable& t, const Collection& b, const FieldConfig& cfg) {
  StabRep rep;
  rep.b = b;
  if (b.empty()) {
    rep.stab = whole_group(g);
    rep.kb = trivial_group();
  } else {
    const CollectionAnalysis a = analyze_collection(g, t, b);
    if (a.a1) throw Error(ErrorCode::NotAdmissible, "collection satisfies A1");
    rep.stab = a.stab;
    rep.kb = a.kb;
    if (a.conditional) {
      if (!cfg.is_mu6() || !conditional_supported(g))
        throw Error(ErrorCode::NotAdmissible, "conditional collection needs the sixth-root field mode");
      const auto chi = chi_exponents(g, a.kb, b, a.dp);
      if (!chi) throw Error(ErrorCode::NotAdmissible, "no character of K_B matches D0_B");
      if (std::any_of(chi->begin(), chi->end(), [&](int v) { return (v * cfg.exponent) % 6 != 0; }))
        for (int v : *chi) rep.chi.push_back(CycNumber::zeta(6, static_cast<long>(v) * cfg.exponent));
    }
  }
  fill_cosets(g, rep);
  return rep;
}

StabRep trivial_rep(const Group& g, const TransvTable& t, const Collection& b) {
  StabRep rep;
  rep.b = b;
  if (b.empty()) {
    rep.stab = whole_group(g);
  } else {
    if (!t.is_collection(b)) throw Error(ErrorCode::InvalidParameters, "not a collection");
    rep.stab = g.stabilizer(b);
  }
  rep.kb = rep.stab;
  fill_cosets(g, rep);
  return rep;
}

std::vector<LaurentScalar> reflection_parameters(const Group& g, const FieldConfig& cfg) {
  std::vector<LaurentScalar> mu;
  const bool special = cfg.is_mu6() && conditional_supported(g);
  const int dist = g.class_has_distinguished(0) ? 0 : 1;
  for (std::size_t r = 0; r < g.reflections().size(); ++r) {
    const int c = g.reflection_class(static_cast<int>(r));
    if (!special) {
      mu.push_back(LaurentScalar::mu(c));
    } else if (c == dist) {
      mu.push_back(LaurentScalar::mu(dist));
    } else {
      mu.push_back(LaurentScalar(CycNumber::zeta(6, -cfg.exponent)) * LaurentScalar::mu(dist));
    }
  }
  return mu;
}

std::size_t InducedModule::block_of(const Collection& b) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), b);
  ensure(it != blocks.end() && *it == b, "collection outside the orbit");
  return static_cast<std::size_t>(it - blocks.begin());
}

std::pair<std::size_t, CycNumber> InducedModule::apply(const Group& g, ElemId w, std::size_t index) const {
  const std::size_t d = degree();
  const std::size_t k = index / d, i = index % d;
  const std::size_t k2 = block_of(g.act(w, blocks[k]));
  const ElemId h = g.mul(g.inv(coset_reps[k2]), g.mul(w, coset_reps[k]));
  auto [j, c] = v0.act(g, h, i);
  return {k2 * d + j, c};
}

SparseOp InducedModule::action(const Group& g, ElemId w) const {
  SparseOp op(dim());
  for (std::size_t idx = 0; idx < dim(); ++idx) {
    auto [to, c] = apply(g, w, idx);
    op.add(to, idx, LaurentScalar(c));
  }
  return op;
}

SparseOp InducedModule::theta_operator(const Group& g, const ThetaVector& x) const {
  const std::size_t n = g.reflections().size();
  ensure(x.size() == n + 1, "theta vector length mismatch");
  const auto rb = reflections_in(g, v0.b);
  SparseOp op(dim());
  for (std::size_t idx = 0; idx < dim(); ++idx) {
    if (x[n] != 0) op.add(idx, idx, LaurentScalar(x[n]));
    for (std::size_t s = 0; s < n; ++s) {
      if (x[s] == 0) continue;
      const bool in_rb = std::binary_search(rb.begin(), rb.end(), static_cast<int>(s));
      auto [to, c] = apply(g, g.reflections()[s], idx);
      LaurentScalar coef = LaurentScalar(x[s]) * LaurentScalar(c);
      if (!in_rb) coef *= mu[s];
      op.add(to, idx, coef);
    }
  }
  return op;
}

InducedModule induce(const Group& g, const TransvTable& t, const StabRep& v0, const FieldConfig& cfg) {
  InducedModule m;
  m.v0 = v0;
  m.cfg = cfg;
  m.blocks = g.orbit(v0.b);
  m.coset_reps.assign(m.blocks.size(), 0);
  std::vector<char> seen(m.blocks.size(), 0);
  for (ElemId w = 0; w < g.order(); ++w) {
    const std::size_t k = m.block_of(g.act(w, v0.b));
    if (!seen[k]) {
      seen[k] = 1;
      m.coset_reps[k] = w;
    }
  }
  m.mu = reflection_parameters(g, cfg);

  // Rel(B) must annihilate the embedded copy of V0, i.e. the first block.
  const std::size_t d = m.degree();
  const std::size_t b0 = m.block_of(v0.b);
  ensure(m.coset_reps[b0] == g.identity(), "first coset representative must be the identity");
  const std::size_t n = g.reflections().size();
  const auto rb = reflections_in(g, v0.b);
  for (const auto& rel : rel_set(g, t, v0.b)) {
    for (std::size_t i = 0; i < d; ++i) {
      std::map<std::size_t, LaurentScalar> acc;
      const std::size_t idx = b0 * d + i;
      if (rel.vec[n] != 0) acc[idx] += LaurentScalar(rel.vec[n]);
      for (std::size_t s = 0; s < n; ++s) {
        if (rel.vec[s] == 0) continue;
        auto [to, c] = m.apply(g, g.reflections()[s], idx);
        LaurentScalar coef = LaurentScalar(rel.vec[s]) * LaurentScalar(c);
        if (!std::binary_search(rb.begin(), rb.end(), static_cast<int>(s))) coef *= m.mu[s];
        acc[to] += coef;
      }
      for (const auto& [to, v] : acc)
        if (!v.is_zero()) throw Error(ErrorCode::NotAdmissiblePair, "Rel(B) does not annihilate V0");
    }
  }

  const auto& hyps = g.hyperplanes();
  m.eps.assign(hyps.size(), SparseOp(m.dim()));
  for (HypId h = 0; h < static_cast<HypId>(hyps.size()); ++h) {
    SparseOp& e = m.eps[h];
    for (std::size_t k = 0; k < m.blocks.size(); ++k) {
      const Collection& bk = m.blocks[k];
      if (std::binary_search(bk.begin(), bk.end(), h)) {
        for (std::size_t i = 0; i < d; ++i) e.add(k * d + i, k * d + i, LaurentScalar::delta());
        continue;
      }
      auto partner = std::find_if(bk.begin(), bk.end(), [&](HypId x) { return !t.transverse(x, h); });
      if (partner == bk.end()) continue;
      for (int s : t.mapped_by(*partner, h))
        for (std::size_t i = 0; i < d; ++i) {
          auto [to, c] = m.apply(g, g.reflections()[s], k * d + i);
          e.add(to, k * d + i, m.mu[s] * LaurentScalar(c));
        }
    }
  }
  return m;
}

RelationReport verify_defining_relations(const Group& g, const TransvTable& t, const InducedModule& m,
                                         int random_elements, std::uint64_t seed) {
  RelationReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && rep.first_failure.empty()) rep.first_failure = what;
    flag = false;
  };
  const auto& hyps = g.hyperplanes();
  const HypId nh = static_cast<HypId>(hyps.size());
  const LaurentScalar delta = LaurentScalar::delta();
  const std::size_t d = m.degree();

  for (HypId h = 0; h < nh; ++h) {
    ++rep.checks;
    if (m.eps[h] * m.eps[h] != delta * m.eps[h]) fail(rep.b1, "B1 fails for " + hyps[h].label);
    std::vector<std::size_t> expected;
    for (std::size_t k = 0; k < m.blocks.size(); ++k)
      if (std::binary_search(m.blocks[k].begin(), m.blocks[k].end(), h))
        for (std::size_t i = 0; i < d; ++i) expected.push_back(k * d + i);
    ++rep.checks;
    if (m.eps[h].row_support() != expected) fail(rep.image_blocks, "image blocks differ for " + hyps[h].label);
  }

  std::vector<ElemId> elements = g.generators();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_elements; ++i) elements.push_back(static_cast<ElemId>(rng() % g.order()));
  for (ElemId w : elements) {
    const SparseOp a = m.action(g, w);
    for (HypId h = 0; h < nh; ++h) {
      ++rep.checks;
      if (a * m.eps[h] != m.eps[g.act(w, h)] * a) fail(rep.b2, "B2 fails for " + hyps[h].label);
    }
  }

  for (std::size_t r = 0; r < g.reflections().size(); ++r) {
    const HypId h = g.reflection_hyperplane(static_cast<int>(r));
    ++rep.checks;
    if (m.action(g, g.reflections()[r]) * m.eps[h] != m.eps[h]) fail(rep.b3, "B3 fails for " + hyps[h].label);
  }

  std::vector<SparseOp> refl_ops;
  for (ElemId r : g.reflections()) refl_ops.push_back(m.action(g, r));
  for (HypId h1 = 0; h1 < nh; ++h1)
    for (HypId h2 = 0; h2 < nh; ++h2) {
      if (h1 == h2) continue;
      const SparseOp lhs = m.eps[h1] * m.eps[h2];
      ++rep.checks;
      if (t.transverse(h1, h2)) {
        if (h1 < h2 && lhs != m.eps[h2] * m.eps[h1])
          fail(rep.b4, "B4 fails for " + hyps[h1].label + ", " + hyps[h2].label);
        continue;
      }
      SparseOp sum(m.dim());
      for (int s : t.mapped_by(h2, h1)) sum += m.mu[s] * refl_ops[s];
      if (lhs != sum * m.eps[h2]) fail(rep.b5, "B5 fails for " + hyps[h1].label + ", " + hyps[h2].label);
    }
  return rep;
}

InducedModule perturbed(const InducedModule& m, HypId h) {
  InducedModule out = m;
  SparseOp& e = out.eps[h];
  for (std::size_t c = 0; c < e.dim(); ++c)
    if (!e.column(c).empty()) {
      const auto entry = e.column(c).front();
      e.add(entry.first, c, LaurentScalar(-2) * entry.second);
      return out;
    }
  throw Error(ErrorCode::InvalidParameters, "operator has no nonzero entry to perturb");
}

CensusResult semisimplicity_census(const Group& g, const TransvTable& t, const Classification& c,
                                   const FieldConfig& cfg, std::size_t ideal_limit) {
  CensusResult out;
  out.sum_of_squares = 0;
  for (const auto& rec : c.records) {
    if (!rec.admissible(cfg)) continue;
    std::size_t codim = rec.quotient(cfg);
    if (rec.orbit.cardinality == 0) {
      codim = g.order();  // Ann is zero
    } else if (rec.conditional) {
      ensure(rec.d0_dim.has_value(), "conditional orbit without ideal dimension");
      codim = rec.orbit.stab_order - *rec.d0_dim;
    } else if (rec.orbit.stab_order <= ideal_limit) {
      // Ann = (D0_B); all ratios are 1 here.
      const CollectionAnalysis a = analyze_collection(g, t, rec.orbit.representative);
      codim = rec.orbit.stab_order - d0_ideal_dim(g, a.stab, a.dp, CycNumber(1));
      ++out.ideal_checks;
    }
    ensure(codim == rec.quotient(cfg), "annihilator codimension differs from |Stab(B)/K_B|");
    const mpz_class os = static_cast<unsigned long>(rec.orbit.orbit_size);
    out.sum_of_squares += os * os * static_cast<unsigned long>(codim);
  }
  out.dimension = dim_brauer(g, c, cfg);
  ensure(out.sum_of_squares == out.dimension, "sum of squares differs from the dimension");
  return out;
}

}  // namespace bct
