#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bct/rational.hpp"

namespace bct {

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

// Element of Q(zeta_n), stored as phi(n) rational coefficients of
// 1, zeta_n, ..., zeta_n^(phi(n)-1) after reduction modulo Phi_n.
// Binary operations on different orders work in the lcm field.
class CycNumber {
 public:
  CycNumber() : order_(1), coeffs_(1) {}
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  CycNumber(I v) : order_(1), coeffs_{Rational(v)} {}
  CycNumber(const Rational& r) : order_(1), coeffs_{r} {}

  // zeta_n^k, any integer k.
  static CycNumber zeta(int n, long k = 1);
  // Sum of coeffs[k] * zeta_n^k for k < coeffs.size(); any length is reduced.
  static CycNumber from_powers(int n, const std::vector<Rational>& coeffs);
  // Takes an already reduced vector of length phi(n).
  static CycNumber from_reduced(int n, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  // Value-preserving inclusion Q(zeta_n) -> Q(zeta_target); needs n | target.
  CycNumber embed(int target) const;
  // Complex conjugation zeta -> zeta^-1.
  CycNumber conj() const;
  CycNumber inv() const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o) { return *this *= o.inv(); }

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend CycNumber operator-(CycNumber a);

  // Value equality; operands of different orders are compared in the lcm field.
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  // Hash of (order, coeffs): consistent with == only among equal orders.
  std::size_t hash() const;
  // Human readable, e.g. "1 + 2*z3^1" with zN meaning zeta_N.
  std::string str() const;

 private:
  CycNumber(int n, std::vector<Rational> c) : order_(n), coeffs_(std::move(c)) {}
  int order_;
  std::vector<Rational> coeffs_;
};

int lcm_int(int a, int b);

std::ostream& operator<<(std::ostream& os, const CycNumber& c);

}  // namespace bct
