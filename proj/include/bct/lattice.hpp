#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace bct {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

struct SmithForm {
  IntMatrix S, D, T;  // S * A * T = D
  std::size_t rank = 0;
};

// Elementary row/column reduction with minimal-absolute-value pivots.
// D is diagonal with nonnegative entries d_1 | d_2 | ... | d_rank.
SmithForm smith_normal_form(const IntMatrix& a);

// True iff v is an integer combination of the vectors in L.
bool z_span_member(const std::vector<long>& v, const std::vector<std::vector<long>>& lattice);

// Batch form: one SNF of L, many membership queries.
class IntegerLattice {
 public:
  IntegerLattice(const std::vector<std::vector<long>>& generators, std::size_t dim);
  bool contains(const std::vector<long>& v) const;

 private:
  std::size_t dim_;
  SmithForm snf_;
};

}  // namespace bct
