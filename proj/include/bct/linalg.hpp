#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

#include "bct/cyclotomic.hpp"
#include "bct/error.hpp"
#include "bct/laurent.hpp"
#include "bct/rational.hpp"

namespace Eigen {

// Exact scalars: no precision, no vectorization, construction required.
template <class T>
struct BctExactTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<bct::Rational> : BctExactTraits<bct::Rational> {};
template <>
struct NumTraits<bct::CycNumber> : BctExactTraits<bct::CycNumber> {};
template <>
struct NumTraits<bct::LaurentScalar> : BctExactTraits<bct::LaurentScalar> {};

}  // namespace Eigen

namespace bct {

template <class T>
using FieldMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using FieldVector = std::vector<T>;

using RationalMatrix = FieldMatrix<Rational>;
using CycMatrix = FieldMatrix<CycNumber>;

namespace detail {
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const CycNumber& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inv(); }
inline CycNumber inverse(const CycNumber& x) { return x.inv(); }
}  // namespace detail

// Incrementally maintained reduced row echelon basis of a subspace of T^dim.
// Rows are kept fully reduced with leading coefficient 1.
template <class T>
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<FieldVector<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Remainder of v after elimination against the basis; zero iff v is in the span.
  FieldVector<T> reduce(FieldVector<T> v) const {
    check_len(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (detail::is_zero(v[p])) continue;
      T f = v[p];
      const auto& row = rows_[r];
      for (std::size_t j = p; j < dim_; ++j)
        if (!detail::is_zero(row[j])) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const FieldVector<T>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!detail::is_zero(x)) return false;
    return true;
  }

  // Adds v to the spanning set; returns true iff the rank grew.
  bool insert(FieldVector<T> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && detail::is_zero(v[p])) ++p;
    if (p == dim_) return false;
    T s = detail::inverse(v[p]);
    for (std::size_t j = p; j < dim_; ++j)
      if (!detail::is_zero(v[j])) v[j] *= s;
    for (auto& row : rows_) {
      if (detail::is_zero(row[p])) continue;
      T f = row[p];
      for (std::size_t j = p; j < dim_; ++j)
        if (!detail::is_zero(v[j])) row[j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

 private:
  void check_len(const FieldVector<T>& v) const {
    if (v.size() != dim_) throw Error(ErrorCode::InvalidParameters, "vector length mismatch");
  }
  std::size_t dim_;
  std::vector<FieldVector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
struct RrefResult {
  FieldMatrix<T> basis;  // rank x cols, reduced row echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <class Derived>
FieldVector<typename Derived::Scalar> row_vector(const Eigen::MatrixBase<Derived>& m, Eigen::Index i) {
  FieldVector<typename Derived::Scalar> v(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) v[j] = m(i, j);
  return v;
}

template <class Derived>
RowSpace<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& m) {
  RowSpace<typename Derived::Scalar> rs(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) rs.insert(row_vector(m, i));
  return rs;
}

template <class Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  auto rs = row_space(m);
  RrefResult<T> out;
  out.rank = rs.rank();
  out.pivots = rs.pivots();
  out.basis = FieldMatrix<T>(static_cast<Eigen::Index>(rs.rank()), m.cols());
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.basis(i, j) = rs.rows()[i][j];
  return out;
}

template <class Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  return row_space(m).rank();
}

template <class Derived>
bool in_span(const FieldVector<typename Derived::Scalar>& v, const Eigen::MatrixBase<Derived>& basis) {
  if (static_cast<Eigen::Index>(v.size()) != basis.cols())
    throw Error(ErrorCode::InvalidParameters, "in_span: length mismatch");
  return row_space(basis).contains(v);
}

template <class T>
FieldMatrix<T> matrix_from_rows(const std::vector<FieldVector<T>>& rows, std::size_t cols) {
  FieldMatrix<T> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidParameters, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Conjugate transpose under zeta -> zeta^-1.
CycMatrix adjoint(const CycMatrix& m);
CycMatrix identity_matrix(int n);
// Embeds every entry into Q(zeta_order).
CycMatrix embed_matrix(const CycMatrix& m, int order);
CycNumber trace(const CycMatrix& m);
CycNumber determinant(const CycMatrix& m);

}  // namespace bct
