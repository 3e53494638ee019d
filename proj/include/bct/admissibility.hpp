#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "bct/group.hpp"
#include "bct/transversality.hpp"

namespace bct {

// Coordinates over the basis Theta_B: position r < N stands for theta(R[r]),
// position N for 1.
using ThetaVector = std::vector<long>;

struct FieldConfig {
  enum class Mode { Generic, MuSixthRoot };
  Mode mode = Mode::Generic;
  int exponent = 1;  // mu = zeta_6^exponent in MuSixthRoot mode
  static FieldConfig generic() { return {}; }
  static FieldConfig mu6(int e = 1) { return {Mode::MuSixthRoot, ((e % 6) + 6) % 6}; }
  bool is_mu6() const { return mode == Mode::MuSixthRoot; }
};

// A relation together with the group elements it is supported on.
struct RelElement {
  ThetaVector vec;
  std::vector<ElemId> support;
};

Subgroup k_subgroup(const Group& g, const Collection& b);
std::vector<int> reflections_in(const Group& g, const Collection& b);

// Rel(B) = (R_B - 1) together with all sigma^H_{H1,H2}.
std::vector<RelElement> rel_set(const Group& g, const TransvTable& t, const Collection& b);
// Projections of Rel(B) onto the cosets of Stab(B), straight from the definition.
std::vector<ThetaVector> rel_bar(const Group& g, const TransvTable& t, const Collection& b);
// The same set built through the per-(B,B') tables F(B,B').
std::vector<ThetaVector> rel_bar_tables(const Group& g, const TransvTable& t, const Collection& b);

struct DPData {
  std::vector<ThetaVector> d;           // D_B, one vector per unordered pair
  std::vector<std::pair<int, int>> p;   // P_B, ordered pairs of reflection indices
  std::vector<std::pair<ElemId, int>> d0;  // D0_B as (s2^-1 s1, ratio code); code 0 for 1, +1 for mu, -1 for mu^-1
};
DPData d_and_p(const Group& g, const Collection& b, const std::vector<ThetaVector>& rel_bar_list);

// Literal membership of a unit vector theta(s) in the list.
bool check_a1(const std::vector<ThetaVector>& rel_bar_list, std::size_t n_refl);
// Stricter diagnostic: a unit vector in the Q-span.
bool check_a1_span(const std::vector<ThetaVector>& rel_bar_list, std::size_t n_refl);
struct A2Result {
  bool span_eq = false;
  bool subgroup_eq = false;
  bool holds() const { return span_eq && subgroup_eq; }
};
A2Result check_a2(const Group& g, const Collection& b, const std::vector<ThetaVector>& rel_bar_list,
                  const DPData& dp, const Subgroup& kb);

// Ratio mu_{s2}/mu_{s1} as a power of mu = mu_dist / mu_other.
int mu_ratio_code(const Group& g, int s1, int s2);

// Dimension of the two-sided ideal of the group algebra of `sub` generated by
// the elements x - c for the given (x, c).
std::size_t two_sided_ideal_dim(const Group& g, const Subgroup& sub,
                                const std::vector<std::pair<ElemId, CycNumber>>& generators);
// Dimension of the two-sided ideal of Q(zeta_6) Stab(B) generated by D0_B.
std::size_t d0_ideal_dim(const Group& g, const Subgroup& stab, const DPData& dp, const CycNumber& mu);
// The character K_B -> U_6 sending R_B to 1 and s2^-1 s1 to its mu-ratio, as
// exponents of a primitive sixth root; nullopt if the assignment is inconsistent.
std::optional<std::vector<int>> chi_exponents(const Group& g, const Subgroup& kb, const Collection& b,
                                              const DPData& dp);

struct AdmissibilityRecord {
  OrbitRecord orbit;
  std::size_t kb_order = 0;
  bool a1 = false;
  bool a1_span = false;  // diagnostic
  bool a2_span = false;
  bool a2_subgroup = false;
  bool conditional = false;
  bool admissible_generic = false;
  bool admissible_mu6 = false;
  std::size_t quotient_generic = 0;  // |Stab|/|K_B| when admissible, else 0
  std::size_t quotient_mu6 = 0;
  std::optional<std::size_t> d0_dim;  // conditional collections only
  bool chi_nontrivial = false;
  std::vector<int> conditional_pair_orders;  // orders of s2^-1 s1 over cross-class pairs
  std::optional<bool> closed_form;  // G(m,p,n) classification
  bool a1_divergence() const { return a1 != a1_span; }
  bool admissible(const FieldConfig& cfg) const { return cfg.is_mu6() ? admissible_mu6 : admissible_generic; }
  std::size_t quotient(const FieldConfig& cfg) const { return cfg.is_mu6() ? quotient_mu6 : quotient_generic; }
};

// Everything the A1/A2 tests derive from one collection.
struct CollectionAnalysis {
  Collection b;
  Subgroup stab;
  Subgroup kb;
  std::vector<ThetaVector> rel_bar;
  DPData dp;
  bool a1 = false;
  bool a1_span = false;
  A2Result a2;
  bool conditional = false;  // A2 holds and P_B has a pair from distinct reflection classes
};
CollectionAnalysis analyze_collection(const Group& g, const TransvTable& t, const Collection& b);
// Conditional collections are handled when there are two reflection classes and
// exactly one contains distinguished reflections.
bool conditional_supported(const Group& g);

// Closed-form admissibility for G(m,p,n); throws InvalidParameters for matrix groups.
bool closed_form_admissible(const Group& g, const Collection& b);

AdmissibilityRecord classify(const Group& g, const TransvTable& t, const OrbitRecord& orbit,
                             const FieldConfig& mu_cfg = FieldConfig::mu6());

struct Classification {
  std::vector<AdmissibilityRecord> records;
  std::vector<std::vector<std::size_t>> member_kb_orders;  // |K_B| for every orbit member
};

// Per-orbit work runs on up to `workers` threads.
Classification classify_group(const Group& g, const TransvTable& t, const std::vector<OrbitRecord>& orbits,
                              const FieldConfig& mu_cfg = FieldConfig::mu6(), int workers = 1);

// Sum of |W|/|K_B| over all admissible collections, asserted equal to
// |W| + sum over orbits of |orbit|^2 * |Stab/K_B|.
mpz_class dim_brauer(const Group& g, const Classification& c, const FieldConfig& cfg);

mpz_class dim_gmpn_formula(int m, int p, int n);
mpz_class dim_g22n_formula(int n);

// Matrix characterization of K_B for G(m,p,n). For disjoint H_ij^k the
// LineScalars rule asks that the scalars by which the element acts on the lines
// H ∩ span(e_i, e_j), H in B, multiply to 1. EntryProduct asks that the
// nonzero entries multiply to 1; the two agree for odd m, and for even m only
// LineScalars matches K_B.
enum class KbRule { LineScalars, EntryProduct };
bool kb_membership_gmpn(const Group& g, ElemId elem, const Collection& b, KbRule rule = KbRule::LineScalars);
// Closed-form |K_B| for the two collection shapes; nullopt for other shapes.
std::optional<std::size_t> kb_order_formula(const Group& g, const Collection& b);

}  // namespace bct
