#include "bct/lattice.hpp"

#include <utility>

#include "bct/error.hpp"

namespace bct {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidParameters, "ragged integer rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidParameters, "integer product shape");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_i -= q * row_j
void sub_row(IntMatrix& m, std::size_t i, std::size_t j, const mpz_class& q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(j, c) != 0) m(i, c) -= q * m(j, c);
}

// col_i -= q * col_j
void sub_col(IntMatrix& m, std::size_t i, std::size_t j, const mpz_class& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, j) != 0) m(r, i) -= q * m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f;
  IntMatrix& d = f.D;
  d = a;
  f.S = IntMatrix::identity(a.rows());
  f.T = IntMatrix::identity(a.cols());
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Minimal-absolute-value pivot in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    mpz_class best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        mpz_class v = abs(d(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(f.S, t, pi);
    swap_cols(d, t, pj);
    swap_cols(f.T, t, pj);
    for (;;) {
      bool changed = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        sub_row(d, i, t, q);
        sub_row(f.S, i, t, q);
        if (d(i, t) != 0) {
          changed = true;
          if (abs(d(i, t)) < abs(d(t, t))) {
            swap_rows(d, t, i);
            swap_rows(f.S, t, i);
          }
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        sub_col(d, j, t, q);
        sub_col(f.T, j, t, q);
        if (d(t, j) != 0) {
          changed = true;
          if (abs(d(t, j)) < abs(d(t, t))) {
            swap_cols(d, t, j);
            swap_cols(f.T, t, j);
          }
        }
      }
      if (changed) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            sub_row(d, t, i, -1);
            sub_row(f.S, t, i, -1);
            fixed = false;
            break;
          }
        }
      if (fixed) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) f.S(t, c) = -f.S(t, c);
    }
  }
  f.rank = t;
  return f;
}

IntegerLattice::IntegerLattice(const std::vector<std::vector<long>>& generators, std::size_t dim)
    : dim_(dim), snf_(smith_normal_form(IntMatrix::from_rows(generators, dim))) {}

bool IntegerLattice::contains(const std::vector<long>& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::InvalidParameters, "lattice vector length mismatch");
  for (std::size_t j = 0; j < dim_; ++j) {
    mpz_class x = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] != 0) x += v[i] * snf_.T(i, j);
    if (j < snf_.rank) {
      if (mpz_divisible_p(x.get_mpz_t(), snf_.D(j, j).get_mpz_t()) == 0) return false;
    } else if (x != 0) {
      return false;
    }
  }
  return true;
}

bool z_span_member(const std::vector<long>& v, const std::vector<std::vector<long>>& lattice) {
  return IntegerLattice(lattice, v.size()).contains(v);
}

}  // namespace bct
