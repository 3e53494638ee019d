#include "bct/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "bct/error.hpp"

namespace bct {

namespace {

constexpr std::size_t kMaxDegree = 65535;

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

// Coordinates are embedded in Q(zeta_order) so that vector keys are canonical.
std::vector<CycNumber> apply(const CycMatrix& m, const std::vector<CycNumber>& v, int order) {
  std::vector<CycNumber> out(v.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    CycNumber s;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) s += m(i, j) * v[j];
    out[i] = s.embed(order);
  }
  return out;
}

// Union-find over reflection indices.
int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

MonomialElem decode_monomial(const std::uint16_t* perm, int m, int n) {
  MonomialElem e;
  e.perm.resize(n);
  e.exps.resize(n);
  for (int j = 0; j < n; ++j) {
    int img = perm[j * m];
    e.perm[j] = img / m;
    e.exps[j] = img % m;
  }
  return e;
}

std::vector<std::uint16_t> encode_monomial(const MonomialElem& e, int m) {
  const int n = static_cast<int>(e.perm.size());
  std::vector<std::uint16_t> perm(static_cast<std::size_t>(n) * m);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < m; ++k)
      perm[j * m + k] = static_cast<std::uint16_t>(e.perm[j] * m + mod(k + e.exps[j], m));
  return perm;
}

}  // namespace

bool Subgroup::contains(ElemId e) const { return std::binary_search(elements.begin(), elements.end(), e); }

std::string vector_key(const std::vector<CycNumber>& v) {
  std::string key;
  for (const auto& x : v) {
    key += std::to_string(x.order());
    for (const auto& c : x.coeffs()) key += "," + c.str();
    key += ";";
  }
  return key;
}

std::vector<CycNumber> normalize_line(const std::vector<CycNumber>& v) {
  std::size_t i = 0;
  while (i < v.size() && v[i].is_zero()) ++i;
  if (i == v.size()) throw Error(ErrorCode::InvalidRoot, "zero vector has no line");
  CycNumber s = v[i].inv();
  std::vector<CycNumber> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] * s;
  return out;
}

CycMatrix reflection_from_root(const std::vector<CycNumber>& root, const CycNumber& eigenvalue) {
  bool nonzero = std::any_of(root.begin(), root.end(), [](const CycNumber& x) { return !x.is_zero(); });
  if (!nonzero) throw Error(ErrorCode::InvalidRoot, "root must be nonzero");
  if (eigenvalue.is_one() || eigenvalue.is_zero())
    throw Error(ErrorCode::InvalidRoot, "eigenvalue must be a nontrivial root of unity");
  const int d = static_cast<int>(root.size());
  CycNumber norm;
  for (const auto& x : root) norm += x * x.conj();
  CycNumber f = (CycNumber(1) - eigenvalue) / norm;
  CycMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = CycNumber(i == j ? 1 : 0) - f * root[i] * root[j].conj();
  return m;
}

// ---- hashing of permutations -------------------------------------------------

std::size_t Group::perm_hash(const std::uint16_t* perm) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < degree_; ++i) {
    h ^= perm[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

void Group::index_insert(ElemId id) {
  if (slots_.size() < 2 * (static_cast<std::size_t>(order_) + 1)) {
    std::size_t cap = 64;
    while (cap < 4 * (static_cast<std::size_t>(order_) + 1)) cap *= 2;
    slots_.assign(cap, 0);
    for (ElemId e = 0; e < id; ++e) {
      std::size_t s = perm_hash(&perms_[e * degree_]) & (cap - 1);
      while (slots_[s] != 0) s = (s + 1) & (cap - 1);
      slots_[s] = e + 1;
    }
  }
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = perm_hash(&perms_[static_cast<std::size_t>(id) * degree_]) & mask;
  while (slots_[s] != 0) s = (s + 1) & mask;
  slots_[s] = id + 1;
}

std::optional<ElemId> Group::index_find(const std::uint16_t* perm) const {
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = perm_hash(perm) & mask;
  while (slots_[s] != 0) {
    ElemId e = slots_[s] - 1;
    if (std::equal(perm, perm + degree_, &perms_[static_cast<std::size_t>(e) * degree_])) return e;
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

ElemId Group::push_perm(const std::vector<std::uint16_t>& perm) {
  ElemId id = static_cast<ElemId>(order_);
  perms_.insert(perms_.end(), perm.begin(), perm.end());
  ++order_;
  index_insert(id);
  return id;
}

ElemId Group::mul(ElemId a, ElemId b) const {
  const std::uint16_t* pa = &perms_[static_cast<std::size_t>(a) * degree_];
  const std::uint16_t* pb = &perms_[static_cast<std::size_t>(b) * degree_];
  std::array<std::uint16_t, 512> small;
  std::vector<std::uint16_t> big;
  std::uint16_t* out = small.data();
  if (degree_ > small.size()) {
    big.resize(degree_);
    out = big.data();
  }
  for (std::size_t x = 0; x < degree_; ++x) out[x] = pa[pb[x]];
  auto r = index_find(out);
  ensure(r.has_value(), "product left the enumerated group");
  return *r;
}

ElemId Group::power(ElemId a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElemId r = identity();
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int Group::elem_order(ElemId a) const {
  int k = 1;
  for (ElemId x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

// ---- construction --------------------------------------------------------------

Group Group::imprimitive(int m, int p, int n, std::size_t max_order) {
  if (m < 1 || p < 1 || m % p != 0)
    throw Error(ErrorCode::InvalidParameters, "G(m,p,n) needs p | m");
  if (n < 2) throw Error(ErrorCode::InvalidParameters, "G(m,p,n) needs n >= 2");
  std::size_t order = factorial(n);
  for (int i = 0; i < n; ++i) order *= static_cast<std::size_t>(m);
  order /= static_cast<std::size_t>(p);
  if (order > max_order)
    throw Error(ErrorCode::TooLarge, "group order " + std::to_string(order) + " exceeds cap " +
                                         std::to_string(max_order));
  if (static_cast<std::size_t>(n) * m > kMaxDegree) throw Error(ErrorCode::TooLarge, "permutation degree");

  Group g;
  g.kind_ = GroupKind::Imprimitive;
  g.name_ = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  g.m_ = m;
  g.p_ = p;
  g.n_ = n;
  g.rank_ = n;
  g.cyc_order_ = m;
  g.degree_ = static_cast<std::size_t>(n) * m;
  g.perms_.reserve(order * g.degree_);

  MonomialElem e;
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  e.exps.assign(n, 0);
  do {
    std::vector<int> a(n, 0);
    for (;;) {
      int s = 0;
      for (int j = 0; j + 1 < n; ++j) s += a[j];
      for (int last = 0; last < m; ++last) {
        if ((s + last) % p != 0) continue;
        a[n - 1] = last;
        e.exps = a;
        g.push_perm(encode_monomial(e, m));
      }
      int j = n - 2;
      while (j >= 0 && a[j] == m - 1) a[j--] = 0;
      if (j < 0) break;
      ++a[j];
    }
  } while (std::next_permutation(e.perm.begin(), e.perm.end()));
  ensure(g.order_ == order, "monomial enumeration count");
  g.finish_build();
  for (const auto& h : g.hyperplanes_) g.generators_.push_back(h.dist_reflection);
  return g;
}

bool Group::is_unitary_generator(const CycMatrix& m) const {
  return adjoint(m) * m == identity_matrix(static_cast<int>(m.rows()));
}

Group Group::from_matrices(const std::string& name, int cyclotomic_order,
                           const std::vector<CycMatrix>& generators, std::size_t max_order) {
  if (generators.empty()) throw Error(ErrorCode::InvalidGenerators, "no generators");
  const Eigen::Index d = generators[0].rows();
  Group g;
  g.kind_ = GroupKind::Matrix;
  g.name_ = name;
  g.rank_ = static_cast<int>(d);
  g.cyc_order_ = cyclotomic_order;

  std::vector<CycMatrix> gens;
  for (const auto& raw : generators) {
    if (raw.rows() != d || raw.cols() != d)
      throw Error(ErrorCode::InvalidGenerators, "generators must be square of equal size");
    CycMatrix mat;
    try {
      mat = embed_matrix(raw, cyclotomic_order);
    } catch (const Error& err) {
      throw Error(ErrorCode::InvalidGenerators, std::string("entry outside the declared field: ") + err.what());
    }
    if (determinant(mat).is_zero()) throw Error(ErrorCode::InvalidGenerators, "singular generator");
    if (!g.is_unitary_generator(mat))
      throw Error(ErrorCode::InvalidGenerators,
                  "generator is not unitary for the standard hermitian form; renormalize the input");
    gens.push_back(std::move(mat));
  }

  // Faithful action on the orbit of the standard basis.
  std::unordered_map<std::string, std::uint32_t> point_index;
  std::deque<std::uint32_t> queue;
  for (Eigen::Index i = 0; i < d; ++i) {
    std::vector<CycNumber> v(d, CycNumber(0).embed(cyclotomic_order));
    v[i] = CycNumber(1).embed(cyclotomic_order);
    point_index.emplace(vector_key(v), static_cast<std::uint32_t>(g.points_.size()));
    queue.push_back(static_cast<std::uint32_t>(g.points_.size()));
    g.points_.push_back(std::move(v));
  }
  std::vector<std::vector<std::uint32_t>> gen_images(gens.size());
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto img = apply(gens[k], g.points_[x], cyclotomic_order);
      auto key = vector_key(img);
      auto it = point_index.find(key);
      std::uint32_t id;
      if (it == point_index.end()) {
        id = static_cast<std::uint32_t>(g.points_.size());
        if (id >= kMaxDegree) throw Error(ErrorCode::TooLarge, "point orbit too large");
        point_index.emplace(key, id);
        g.points_.push_back(std::move(img));
        queue.push_back(id);
      } else {
        id = it->second;
      }
      if (gen_images[k].size() <= x) gen_images[k].resize(x + 1);
      gen_images[k][x] = id;
    }
  }
  g.degree_ = g.points_.size();
  for (auto& gi : gen_images) gi.resize(g.degree_);

  std::vector<std::uint16_t> id_perm(g.degree_);
  std::iota(id_perm.begin(), id_perm.end(), 0);
  g.push_perm(id_perm);
  g.matrices_.push_back(identity_matrix(static_cast<int>(d)));
  if (cyclotomic_order > 1) g.matrices_[0] = embed_matrix(g.matrices_[0], cyclotomic_order);

  std::vector<std::uint16_t> buf(g.degree_);
  for (ElemId x = 0; x < g.order_; ++x) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::uint16_t* px = &g.perms_[static_cast<std::size_t>(x) * g.degree_];
      for (std::size_t pt = 0; pt < g.degree_; ++pt) buf[pt] = static_cast<std::uint16_t>(gen_images[k][px[pt]]);
      if (g.index_find(buf.data())) continue;
      if (g.order_ >= max_order)
        throw Error(ErrorCode::TooLarge, "closure exceeds cap " + std::to_string(max_order));
      g.push_perm(buf);
      g.matrices_.push_back(gens[k] * g.matrices_[x]);
    }
  }
  for (const auto& mat : gens) g.generators_.push_back(*g.find(MatrixElem{mat}));
  g.finish_build();
  return g;
}

std::optional<ElemId> Group::find(const GroupElem& ge) const {
  if (const auto* me = std::get_if<MonomialElem>(&ge)) {
    if (kind_ != GroupKind::Imprimitive || static_cast<int>(me->perm.size()) != n_ ||
        me->exps.size() != me->perm.size())
      return std::nullopt;
    std::vector<int> sorted = me->perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n_; ++i)
      if (sorted[i] != i) return std::nullopt;
    long s = 0;
    for (int x : me->exps) s += x;
    if (mod(s, p_) != 0) return std::nullopt;
    return index_find(encode_monomial(*me, m_).data());
  }
  const auto& mat = std::get<MatrixElem>(ge).entries;
  if (kind_ == GroupKind::Imprimitive) {
    // Read a monomial matrix back into monomial form.
    if (mat.rows() != n_ || mat.cols() != n_) return std::nullopt;
    MonomialElem me;
    me.perm.assign(n_, -1);
    me.exps.assign(n_, 0);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) {
        if (mat(i, j).is_zero()) continue;
        if (me.perm[j] != -1) return std::nullopt;
        me.perm[j] = i;
        int k = 0;
        while (k < m_ && !(CycNumber::zeta(m_, k) == mat(i, j))) ++k;
        if (k == m_) return std::nullopt;
        me.exps[j] = k;
      }
    return find(GroupElem(me));
  }
  if (mat.rows() != rank_ || mat.cols() != rank_) return std::nullopt;
  CycMatrix emb;
  try {
    emb = embed_matrix(mat, cyc_order_);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::unordered_map<std::string, std::uint16_t> index;
  for (std::size_t i = 0; i < points_.size(); ++i) index.emplace(vector_key(points_[i]), static_cast<std::uint16_t>(i));
  std::vector<std::uint16_t> perm(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    auto it = index.find(vector_key(apply(emb, points_[i], cyc_order_)));
    if (it == index.end()) return std::nullopt;
    perm[i] = it->second;
  }
  auto r = index_find(perm.data());
  if (r && !(matrices_[*r] == emb)) return std::nullopt;
  return r;
}

GroupElem Group::element(ElemId a) const {
  if (kind_ == GroupKind::Imprimitive) return decode_monomial(&perms_[static_cast<std::size_t>(a) * degree_], m_, n_);
  return MatrixElem{matrices_[a]};
}

CycMatrix Group::matrix(ElemId a) const {
  if (kind_ == GroupKind::Matrix) return matrices_[a];
  MonomialElem e = decode_monomial(&perms_[static_cast<std::size_t>(a) * degree_], m_, n_);
  CycMatrix mat(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) mat(i, j) = CycNumber(0).embed(m_);
  for (int j = 0; j < n_; ++j) mat(e.perm[j], j) = CycNumber::zeta(m_, e.exps[j]);
  return mat;
}

// Hyperplane of a monomial reflection in the canonical numbering:
// H_i first (when p != m), then H_ij^k for i < j, k = 0..m-1.
std::optional<HypId> Group::monomial_hyperplane(const MonomialElem& e, std::vector<CycNumber>* root,
                                                std::string* label) const {
  const int n = n_, m = m_;
  std::vector<int> moved;
  for (int j = 0; j < n; ++j)
    if (e.perm[j] != j) moved.push_back(j);
  const int offset = p_ != m_ ? n : 0;
  if (moved.empty()) {
    int nz = -1, count = 0;
    for (int j = 0; j < n; ++j)
      if (e.exps[j] != 0) {
        nz = j;
        ++count;
      }
    if (count != 1) return std::nullopt;
    if (root) {
      root->assign(n, CycNumber(0).embed(m));
      (*root)[nz] = CycNumber(1).embed(m);
    }
    if (label) *label = "H_" + std::to_string(nz + 1);
    return nz;
  }
  if (moved.size() != 2) return std::nullopt;
  int i = moved[0], j = moved[1];
  if (e.perm[i] != j || e.perm[j] != i) return std::nullopt;
  if (mod(e.exps[i] + e.exps[j], m) != 0) return std::nullopt;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j && e.exps[k] != 0) return std::nullopt;
  // Column j holds zeta^kappa in row i, so this is (ij)_kappa with hyperplane z_i = zeta^kappa z_j.
  int kappa = e.exps[j];
  int pair = 0;
  for (int a = 0; a < i; ++a) pair += n - 1 - a;
  pair += j - i - 1;
  if (root) {
    root->assign(n, CycNumber(0).embed(m));
    (*root)[i] = CycNumber(1).embed(m);
    (*root)[j] = -CycNumber::zeta(m, -kappa);
  }
  if (label)
    *label = "H_" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(kappa);
  return offset + pair * m + kappa;
}

void Group::detect_reflections() {
  const int d = rank_;
  std::vector<std::vector<ElemId>> members;
  std::vector<std::vector<CycNumber>> roots;
  std::vector<std::string> labels;
  if (kind_ == GroupKind::Imprimitive) {
    const int count = (p_ != m_ ? n_ : 0) + n_ * (n_ - 1) / 2 * m_;
    members.resize(count);
    roots.resize(count);
    labels.resize(count);
    for (ElemId a = 1; a < order_; ++a) {
      auto e = decode_monomial(&perms_[static_cast<std::size_t>(a) * degree_], m_, n_);
      std::vector<CycNumber> root;
      std::string label;
      auto h = monomial_hyperplane(e, &root, &label);
      if (!h) continue;
      if (members[*h].empty()) {
        roots[*h] = root;
        labels[*h] = label;
      }
      members[*h].push_back(a);
    }
    for (const auto& mem : members) ensure(!mem.empty(), "missing monomial hyperplane");
  } else {
    std::unordered_map<std::string, int> by_key;
    const CycMatrix id = matrices_[0];
    for (ElemId a = 1; a < order_; ++a) {
      CycMatrix diff = matrices_[a] - id;
      if (bct::rank(diff) != 1) continue;
      std::vector<CycNumber> col;
      for (Eigen::Index j = 0; j < d && col.empty(); ++j) {
        bool nz = false;
        for (Eigen::Index i = 0; i < d; ++i) nz = nz || !diff(i, j).is_zero();
        if (!nz) continue;
        col.resize(d);
        for (Eigen::Index i = 0; i < d; ++i) col[i] = diff(i, j);
      }
      auto line = normalize_line(col);
      auto key = vector_key(line);
      auto it = by_key.find(key);
      int h;
      if (it == by_key.end()) {
        h = static_cast<int>(members.size());
        by_key.emplace(key, h);
        members.emplace_back();
        roots.push_back(line);
        labels.push_back("H#" + std::to_string(h));
      } else {
        h = it->second;
      }
      members[h].push_back(a);
    }
  }

  refl_index_.assign(order_, -1);
  for (std::size_t h = 0; h < members.size(); ++h) {
    Hyperplane hp;
    hp.id = static_cast<HypId>(h);
    hp.order_m = static_cast<int>(members[h].size()) + 1;
    hp.root = roots[h];
    hp.label = labels[h];
    CycNumber target = CycNumber::zeta(hp.order_m);
    bool found = false;
    for (ElemId r : members[h]) {
      CycNumber eig = trace(matrix(r)) - CycNumber(d - 1);
      if (eig == target) {
        hp.dist_reflection = r;
        found = true;
        break;
      }
    }
    ensure(found, "no distinguished reflection for hyperplane " + hp.label);
    std::vector<int> idx;
    ElemId x = hp.dist_reflection;
    for (int k = 1; k < hp.order_m; ++k) {
      ensure(std::find(members[h].begin(), members[h].end(), x) != members[h].end(),
             "powers of the distinguished reflection leave the hyperplane");
      int ri = static_cast<int>(reflections_.size());
      reflections_.push_back(x);
      refl_hyp_.push_back(hp.id);
      refl_index_[x] = ri;
      idx.push_back(ri);
      x = mul(x, hp.dist_reflection);
    }
    ensure(x == identity(), "distinguished reflection order mismatch");
    hyp_refls_.push_back(idx);
    hyperplanes_.push_back(std::move(hp));
  }
}

void Group::finish_build() {
  inverse_.assign(order_, 0);
  std::vector<std::uint16_t> buf(degree_);
  for (ElemId a = 0; a < order_; ++a) {
    const std::uint16_t* pa = &perms_[static_cast<std::size_t>(a) * degree_];
    for (std::size_t x = 0; x < degree_; ++x) buf[pa[x]] = static_cast<std::uint16_t>(x);
    auto r = index_find(buf.data());
    ensure(r.has_value(), "inverse missing from enumeration");
    inverse_[a] = *r;
  }
  detect_reflections();

  // Conjugacy classes of reflections over the whole element list.
  const int nr = static_cast<int>(reflections_.size());
  std::vector<int> parent(nr);
  std::iota(parent.begin(), parent.end(), 0);
  for (ElemId w = 0; w < order_; ++w)
    for (int r = 0; r < nr; ++r) {
      int c = refl_index_[conjugate(w, reflections_[r])];
      ensure(c >= 0, "conjugate of a reflection is not a reflection");
      int a = find_root(parent, r), b = find_root(parent, c);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  refl_class_.assign(nr, -1);
  std::map<int, int> class_of_root;
  for (int r = 0; r < nr; ++r) {
    int root = find_root(parent, r);
    auto it = class_of_root.find(root);
    if (it == class_of_root.end()) it = class_of_root.emplace(root, static_cast<int>(class_of_root.size())).first;
    refl_class_[r] = it->second;
  }
  num_classes_ = static_cast<int>(class_of_root.size());
  class_dist_.assign(num_classes_, false);
  for (const auto& h : hyperplanes_) class_dist_[refl_class_[refl_index_[h.dist_reflection]]] = true;

  // Action on hyperplanes through conjugation of distinguished reflections.
  const std::size_t nh = hyperplanes_.size();
  hyp_action_.assign(order_ * nh, 0);
  for (ElemId w = 0; w < order_; ++w)
    for (std::size_t h = 0; h < nh; ++h) hyp_action_[w * nh + h] = act_by_conjugation(w, static_cast<HypId>(h));
}

HypId Group::act_by_conjugation(ElemId w, HypId h) const {
  ElemId c = conjugate(w, hyperplanes_[h].dist_reflection);
  int ri = refl_index_[c];
  ensure(ri >= 0, "conjugate of a distinguished reflection is not a reflection");
  HypId img = refl_hyp_[ri];
  ensure(hyperplanes_[img].dist_reflection == c, "conjugate is not the distinguished reflection of its hyperplane");
  return img;
}

std::optional<HypId> Group::find_hyperplane_by_root(const std::vector<CycNumber>& v) const {
  auto line = normalize_line(v);
  for (const auto& h : hyperplanes_) {
    if (h.root.size() != line.size()) continue;
    bool eq = true;
    for (std::size_t i = 0; i < line.size() && eq; ++i) eq = h.root[i] == line[i];
    if (eq) return h.id;
  }
  return std::nullopt;
}

Collection Group::act(ElemId w, const Collection& b) const {
  Collection out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = act(w, b[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Group::stabilizer(const Collection& b) const {
  Subgroup s;
  for (ElemId w = 0; w < order_; ++w)
    if (act(w, b) == b) s.elements.push_back(w);
  s.generators = s.elements;
  return s;
}

std::vector<Collection> Group::orbit(const Collection& b) const {
  std::set<Collection> seen;
  for (ElemId w = 0; w < order_; ++w) seen.insert(act(w, b));
  return {seen.begin(), seen.end()};
}

Subgroup Group::subgroup_closure(const std::vector<ElemId>& gens) const {
  Subgroup s;
  s.generators = gens;
  std::vector<char> in(order_, 0);
  std::vector<ElemId> elems{identity()};
  in[identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (ElemId g : gens) {
      ElemId y = mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  s.elements = std::move(elems);
  return s;
}

}  // namespace bct
