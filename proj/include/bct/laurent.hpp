#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bct/cyclotomic.hpp"

namespace bct {

// Laurent polynomial in delta (slot 0) and the class parameters mu_c (slot 1 + c)
// with cyclotomic coefficients. Exponent tuples drop trailing zeros, so the
// constant monomial is the empty tuple and tuples of any length interoperate.
class LaurentScalar {
 public:
  using Exponents = std::vector<int>;
  using Term = std::pair<Exponents, CycNumber>;

  LaurentScalar() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  LaurentScalar(I v) : LaurentScalar(CycNumber(v)) {}
  LaurentScalar(const CycNumber& c);
  LaurentScalar(const Rational& r) : LaurentScalar(CycNumber(r)) {}

  static LaurentScalar monomial(Exponents e, const CycNumber& c = CycNumber(1));
  static LaurentScalar delta() { return monomial({1}); }
  static LaurentScalar mu(int cls);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(LaurentScalar a);

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_term(const Exponents& e, const CycNumber& c);
  std::vector<Term> terms_;  // sorted by exponent tuple, no zero coefficients
};

// Ring map sending variable v to the unit monomial images[v]; variables beyond
// images.size() are left unchanged. Images must be single terms so that negative
// exponents stay meaningful.
LaurentScalar substitute(const LaurentScalar& x, const std::vector<LaurentScalar>& images);

std::ostream& operator<<(std::ostream& os, const LaurentScalar& x);

}  // namespace bct
