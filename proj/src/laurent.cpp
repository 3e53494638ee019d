#include "bct/laurent.hpp"

#include <ostream>
#include <algorithm>
#include <map>

#include "bct/error.hpp"

namespace bct {

namespace {

void trim(LaurentScalar::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

LaurentScalar::Exponents add_exponents(const LaurentScalar::Exponents& a,
                                       const LaurentScalar::Exponents& b) {
  LaurentScalar::Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

}  // namespace

LaurentScalar::LaurentScalar(const CycNumber& c) {
  if (!c.is_zero()) terms_.emplace_back(Exponents{}, c);
}

LaurentScalar LaurentScalar::monomial(Exponents e, const CycNumber& c) {
  trim(e);
  LaurentScalar r;
  if (!c.is_zero()) r.terms_.emplace_back(std::move(e), c);
  return r;
}

LaurentScalar LaurentScalar::mu(int cls) {
  Exponents e(static_cast<std::size_t>(cls) + 2, 0);
  e[cls + 1] = 1;
  return monomial(std::move(e));
}

void LaurentScalar::add_term(const Exponents& e, const CycNumber& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, Term(e, c));
  }
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  if (terms_.empty()) return *this = o;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    CycNumber c = a.terms_[0].second * b.terms_[0].second;
    return LaurentScalar::monomial(add_exponents(a.terms_[0].first, b.terms_[0].first), c);
  }
  std::map<LaurentScalar::Exponents, CycNumber> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto e = add_exponents(ea, eb);
      auto it = acc.find(e);
      if (it == acc.end()) acc.emplace(std::move(e), ca * cb);
      else it->second += ca * cb;
    }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(e, c);
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar operator-(LaurentScalar a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return false;
    if (a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

std::string LaurentScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += i == 0 ? "*d" : "*mu" + std::to_string(i - 1);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

LaurentScalar substitute(const LaurentScalar& x, const std::vector<LaurentScalar>& images) {
  for (const auto& img : images)
    if (img.terms().size() != 1)
      throw Error(ErrorCode::InvalidParameters, "substitution image must be a single term");
  LaurentScalar out;
  for (const auto& [e, c] : x.terms()) {
    LaurentScalar term(c);
    LaurentScalar::Exponents kept(e.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (v >= images.size()) {
        kept[v] = e[v];
        continue;
      }
      if (e[v] == 0) continue;
      const auto& [ie, ic] = images[v].terms()[0];
      LaurentScalar::Exponents pe(ie.size());
      for (std::size_t i = 0; i < ie.size(); ++i) pe[i] = ie[i] * e[v];
      CycNumber pc = 1;
      CycNumber base = e[v] > 0 ? ic : ic.inv();
      for (int k = 0; k < std::abs(e[v]); ++k) pc *= base;
      term *= LaurentScalar::monomial(pe, pc);
    }
    term *= LaurentScalar::monomial(kept);
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.str(); }

}  // namespace bct
