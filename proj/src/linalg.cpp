#include "bct/linalg.hpp"

namespace bct {

CycMatrix adjoint(const CycMatrix& m) {
  CycMatrix a(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(j, i) = m(i, j).conj();
  return a;
}

CycMatrix identity_matrix(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = CycNumber(i == j ? 1 : 0);
  return m;
}

CycMatrix embed_matrix(const CycMatrix& m, int order) {
  CycMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embed(order);
  return out;
}

CycNumber trace(const CycMatrix& m) {
  CycNumber t;
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

CycNumber determinant(const CycMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidParameters, "determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  std::vector<std::vector<CycNumber>> a(n, std::vector<CycNumber>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);
  CycNumber det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return CycNumber(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    CycNumber inv = a[c][c].inv();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      CycNumber f = a[i][c] * inv;
      for (Eigen::Index j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace bct
