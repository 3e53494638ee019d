#include "bct/rational.hpp"

#include <ostream>
#include <functional>

#include "bct/error.hpp"

namespace bct {

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string str(s);
  auto slash = str.find('/');
  mpz_class n, d = 1;
  try {
    if (slash == std::string::npos) {
      n = mpz_class(str, 10);
    } else {
      n = mpz_class(str.substr(0, slash), 10);
      d = mpz_class(str.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + str + "'");
  }
  return Rational(n, d);
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational");
  Rational r;
  r.v_ = 1 / v_;
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  // Small values hash from their machine words; large ones from the decimal text.
  const mpz_class& n = v_.get_num();
  const mpz_class& d = v_.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    std::size_t h = std::hash<long>{}(n.get_si());
    return h * 1000003u ^ std::hash<long>{}(d.get_si());
  }
  return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bct
