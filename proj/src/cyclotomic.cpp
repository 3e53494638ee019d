#include "bct/cyclotomic.hpp"

#include <ostream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "bct/error.hpp"

namespace bct {

namespace {

// Per-order reduction data: the reduced form of zeta_n^k for 0 <= k < n.
struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<std::vector<long>> power;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // Both constant-term first; den is monic.
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<const FieldData> field(int n) {
  static std::map<int, std::shared_ptr<const FieldData>> cache;
  if (n <= 0) throw Error(ErrorCode::InvalidParameters, "cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const std::vector<long>& phi_poly = cyclotomic_polynomial(n);
  auto f = std::make_shared<FieldData>();
  f->n = n;
  f->phi = static_cast<int>(phi_poly.size()) - 1;
  f->power.assign(n, std::vector<long>(f->phi, 0));
  std::vector<long> cur(f->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->power[k] = cur;
    long top = cur[f->phi - 1];
    for (int j = f->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < f->phi; ++j) cur[j] -= top * phi_poly[j];
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(n, std::move(f)).first->second;
}

std::vector<Rational> reduce_powers(const FieldData& f, const std::vector<Rational>& acc) {
  std::vector<Rational> out(f.phi);
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k].is_zero()) continue;
    const auto& row = f.power[k % f.n];
    for (int j = 0; j < f.phi; ++j) {
      if (row[j] == 0) continue;
      if (row[j] == 1) out[j] += acc[k];
      else if (row[j] == -1) out[j] -= acc[k];
      else out[j] += acc[k] * Rational(row[j]);
    }
  }
  return out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<long>> cache;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(n, std::move(p)).first->second;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

CycNumber CycNumber::zeta(int n, long k) {
  auto f = field(n);
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(f->phi);
  for (int j = 0; j < f->phi; ++j) c[j] = Rational(f->power[e][j]);
  return CycNumber(n, std::move(c));
}

CycNumber CycNumber::from_powers(int n, const std::vector<Rational>& coeffs) {
  auto f = field(n);
  return CycNumber(n, reduce_powers(*f, coeffs));
}

CycNumber CycNumber::from_reduced(int n, std::vector<Rational> coeffs) {
  auto f = field(n);
  if (static_cast<int>(coeffs.size()) != f->phi)
    throw Error(ErrorCode::ParseError, "coefficient vector length must equal phi(order)");
  return CycNumber(n, std::move(coeffs));
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycNumber::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> CycNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return std::nullopt;
  return coeffs_[0];
}

CycNumber CycNumber::embed(int target) const {
  if (target <= 0 || target % order_ != 0)
    throw Error(ErrorCode::OrderMismatch, "cannot embed order " + std::to_string(order_) +
                                              " into order " + std::to_string(target));
  if (target == order_) return *this;
  int step = target / order_;
  std::vector<Rational> acc(static_cast<std::size_t>(order_) * step);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) acc[k * step] = coeffs_[k];
  return from_powers(target, acc);
}

CycNumber CycNumber::conj() const {
  if (order_ <= 2) return *this;
  std::vector<Rational> acc(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) acc[(order_ - k) % order_] = coeffs_[k];
  return from_powers(order_, acc);
}

CycNumber CycNumber::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic number");
  const int phi = static_cast<int>(coeffs_.size());
  if (phi == 1) return CycNumber(order_, {coeffs_[0].inv()});
  // Solve (a * x) = 1 for the coefficient vector x: column j of M is a * zeta^j.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    CycNumber col = *this * zeta(order_, j);
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (piv < phi && m[piv][c].is_zero()) ++piv;
    ensure(piv < phi, "singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[c]);
    Rational s = m[c][c].inv();
    for (int j = c; j <= phi; ++j) m[c][j] *= s;
    for (int i = 0; i < phi; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (int j = c; j <= phi; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(phi);
  for (int i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycNumber(order_, std::move(x));
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.order_ == order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  int n = lcm_int(order_, o.order_);
  *this = embed(n);
  return *this += o.embed(n);
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  if (o.order_ == order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  int n = lcm_int(order_, o.order_);
  *this = embed(n);
  return *this -= o.embed(n);
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (o.order_ != order_) {
    int n = lcm_int(order_, o.order_);
    *this = embed(n);
    return *this *= o.embed(n);
  }
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> acc(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      acc[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce_powers(*field(order_), acc);
  return *this;
}

CycNumber operator-(CycNumber a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  int n = lcm_int(a.order_, b.order_);
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

std::size_t CycNumber::hash() const {
  std::size_t h = static_cast<std::size_t>(order_);
  for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
  return h;
}

std::string CycNumber::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.str();
    } else {
      std::string base = "z" + std::to_string(order_) + (k > 1 ? "^" + std::to_string(k) : "");
      if (c.is_one()) term = base;
      else if (c == Rational(-1)) term = "-" + base;
      else term = c.str() + "*" + base;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.str(); }

}  // namespace bct
