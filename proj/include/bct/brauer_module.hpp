#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bct/admissibility.hpp"
#include "bct/laurent.hpp"
#include "bct/linalg.hpp"

namespace bct {

// Square operator with Laurent-scalar entries, stored by columns. The module
// operators are monomial or nearly so, which keeps products cheap at sizes
// where dense exact matrices are not.
class SparseOp {
 public:
  using Entry = std::pair<std::size_t, LaurentScalar>;

  SparseOp() = default;
  explicit SparseOp(std::size_t dim) : cols_(dim) {}
  static SparseOp identity(std::size_t dim);

  std::size_t dim() const { return cols_.size(); }
  // Accumulates v into entry (row, col).
  void add(std::size_t row, std::size_t col, const LaurentScalar& v);
  const std::vector<Entry>& column(std::size_t c) const { return cols_[c]; }
  LaurentScalar at(std::size_t row, std::size_t col) const;
  bool is_zero() const;
  std::size_t nonzeros() const;
  // Rows holding a nonzero entry.
  std::vector<std::size_t> row_support() const;
  FieldMatrix<LaurentScalar> dense() const;

  SparseOp& operator+=(const SparseOp& o);
  SparseOp& operator-=(const SparseOp& o);
  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator*(const LaurentScalar& c, const SparseOp& a);
  friend bool operator==(const SparseOp& a, const SparseOp& b) { return a.cols_ == b.cols_; }
  friend bool operator!=(const SparseOp& a, const SparseOp& b) { return !(a == b); }

 private:
  std::vector<std::vector<Entry>> cols_;  // sorted by row, no zero entries
};

// The module Ind_{K_B}^{Stab(B)} chi: basis e_i = x_i (x) 1 over left cosets x_i K_B,
// with h e_i = chi(k) e_j for h x_i = x_j k. For trivial chi this is the regular
// representation of Stab(B)/K_B pulled back to Stab(B).
struct StabRep {
  Collection b;
  Subgroup stab;
  Subgroup kb;
  std::vector<ElemId> coset_reps;  // smallest element of each coset
  std::vector<int> coset_of;       // by element id; -1 outside Stab(B)
  std::vector<CycNumber> chi;      // on kb.elements; empty when trivial

  std::size_t degree() const { return coset_reps.size(); }
  // h e_i = c e_j, returned as (j, c); h must lie in Stab(B).
  std::pair<std::size_t, CycNumber> act(const Group& g, ElemId h, std::size_t i) const;
  FieldMatrix<LaurentScalar> image(const Group& g, ElemId h) const;
};

// Throws NotAdmissible when B is not admissible for cfg (conditional B in generic
// mode included), or when chi does not exist.
StabRep quotient_regular_rep(const Group& g, const TransvTable& t, const Collection& b,
                             const FieldConfig& cfg = FieldConfig::generic());

// The trivial representation of Stab(B), stored with a single coset. It is
// admissible exactly when Rel(B) kills it, which induce checks.
StabRep trivial_rep(const Group& g, const TransvTable& t, const Collection& b);

// The parameter mu_s per reflection: one formal variable per class in generic mode;
// in sixth-root mode mu_other = zeta_6^-e mu_dist.
std::vector<LaurentScalar> reflection_parameters(const Group& g, const FieldConfig& cfg);

// V = sum over B' in the orbit of V^{B'}, V^{B'} = c_k V0 with c_k B = B'.
struct InducedModule {
  StabRep v0;
  FieldConfig cfg;
  std::vector<Collection> blocks;  // orbit of B, sorted
  std::vector<ElemId> coset_reps;  // c_k
  std::vector<LaurentScalar> mu;   // per reflection index
  std::vector<SparseOp> eps;       // per hyperplane

  std::size_t degree() const { return v0.degree(); }
  std::size_t dim() const { return blocks.size() * degree(); }
  std::size_t block_of(const Collection& b) const;
  // w (k, i) = c (k', i'), as (k' * degree + i', c).
  std::pair<std::size_t, CycNumber> apply(const Group& g, ElemId w, std::size_t index) const;
  SparseOp action(const Group& g, ElemId w) const;
  // Operator of sum x[s] theta(s) + x[N] on V, theta(s) = mu_s s off R_B.
  SparseOp theta_operator(const Group& g, const ThetaVector& x) const;
};

// Checks Rel(B) V0^ = 0 first and throws NotAdmissiblePair if it fails.
InducedModule induce(const Group& g, const TransvTable& t, const StabRep& v0,
                     const FieldConfig& cfg = FieldConfig::generic());

struct RelationReport {
  bool b1 = true, b2 = true, b3 = true, b4 = true, b5 = true;
  bool image_blocks = true;  // eps(H) V = sum of V^{B'} over B' containing H
  std::size_t checks = 0;
  std::string first_failure;
  bool all() const { return b1 && b2 && b3 && b4 && b5 && image_blocks; }
};

// B2 runs on the group generators and on `random_elements` further elements.
RelationReport verify_defining_relations(const Group& g, const TransvTable& t, const InducedModule& m,
                                         int random_elements = 10, std::uint64_t seed = 1);

// Negative control: flips the sign of the first nonzero entry of eps(H).
InducedModule perturbed(const InducedModule& m, HypId h);

struct CensusResult {
  mpz_class sum_of_squares;
  mpz_class dimension;
  std::size_t ideal_checks = 0;  // orbits whose annihilator codimension was recomputed
};

// Sum over admissible orbits of |orbit|^2 dim(K Stab(B)/Ann), against dim_brauer.
// For stabilizers up to `ideal_limit` elements the codimension of Ann = Aug(K_B)
// is recomputed by ideal closure.
CensusResult semisimplicity_census(const Group& g, const TransvTable& t, const Classification& c,
                                   const FieldConfig& cfg, std::size_t ideal_limit = 160);

}  // namespace bct
