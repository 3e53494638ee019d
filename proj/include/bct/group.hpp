#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bct/cyclotomic.hpp"
#include "bct/linalg.hpp"

namespace bct {

inline constexpr std::size_t kDefaultMaxOrder = 200000;

// Column j of the monomial matrix carries zeta_m^exps[j] in row perm[j].
struct MonomialElem {
  std::vector<int> perm;
  std::vector<int> exps;
  friend bool operator==(const MonomialElem&, const MonomialElem&) = default;
};

struct MatrixElem {
  CycMatrix entries;
};

using GroupElem = std::variant<MonomialElem, MatrixElem>;

using ElemId = std::uint32_t;
using HypId = int;
// Sorted hyperplane ids, pairwise transverse.
using Collection = std::vector<HypId>;

enum class GroupKind { Imprimitive, Matrix };

struct Hyperplane {
  HypId id = 0;
  ElemId dist_reflection = 0;
  std::vector<CycNumber> root;
  int order_m = 2;
  std::string label;
};

struct Subgroup {
  std::vector<ElemId> generators;
  std::vector<ElemId> elements;  // sorted ids
  std::size_t order() const { return elements.size(); }
  bool contains(ElemId e) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

// r(v) = v - (1 - alpha) <v,u>/<u,u> u for the standard hermitian form.
CycMatrix reflection_from_root(const std::vector<CycNumber>& root, const CycNumber& eigenvalue);

// Finite complex reflection group with all elements enumerated. Elements are
// addressed by dense ids (identity = 0) and multiplied through a faithful
// permutation action on a finite set of vectors. Immutable once built.
class Group {
 public:
  static Group imprimitive(int m, int p, int n, std::size_t max_order = kDefaultMaxOrder);
  static Group from_matrices(const std::string& name, int cyclotomic_order,
                             const std::vector<CycMatrix>& generators,
                             std::size_t max_order = kDefaultMaxOrder);

  const std::string& name() const { return name_; }
  GroupKind kind() const { return kind_; }
  int m() const { return m_; }
  int p() const { return p_; }
  int n() const { return n_; }
  int rank() const { return rank_; }
  int cyclotomic_order() const { return cyc_order_; }
  // G(2,2,2) is accepted but is not irreducible.
  bool reducible() const { return kind_ == GroupKind::Imprimitive && m_ == 2 && p_ == 2 && n_ == 2; }

  std::size_t order() const { return order_; }
  ElemId identity() const { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  // w x w^-1
  ElemId conjugate(ElemId w, ElemId x) const { return mul(mul(w, x), inverse_[w]); }
  ElemId power(ElemId a, long k) const;
  int elem_order(ElemId a) const;
  std::optional<ElemId> find(const GroupElem& g) const;
  GroupElem element(ElemId a) const;
  CycMatrix matrix(ElemId a) const;
  // Generating set: the input matrices, or the distinguished reflections for G(m,p,n).
  const std::vector<ElemId>& generators() const { return generators_; }

  // Reflection list R, ordered by hyperplane id and then by power of the
  // distinguished reflection.
  const std::vector<ElemId>& reflections() const { return reflections_; }
  int reflection_index(ElemId a) const { return refl_index_[a]; }
  HypId reflection_hyperplane(int r) const { return refl_hyp_[r]; }
  int reflection_class(int r) const { return refl_class_[r]; }
  int num_classes() const { return num_classes_; }
  // True iff the class contains a distinguished reflection.
  bool class_has_distinguished(int c) const { return class_dist_[c]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t num_hyperplanes() const { return hyperplanes_.size(); }
  const std::vector<int>& reflections_on(HypId h) const { return hyp_refls_[h]; }

  // Cached action on hyperplanes.
  HypId act(ElemId w, HypId h) const { return hyp_action_[static_cast<std::size_t>(w) * hyperplanes_.size() + h]; }
  // Literal rule: conjugate the distinguished reflection and look it up.
  HypId act_by_conjugation(ElemId w, HypId h) const;
  std::optional<HypId> find_hyperplane_by_root(const std::vector<CycNumber>& v) const;

  Collection act(ElemId w, const Collection& b) const;
  Subgroup stabilizer(const Collection& b) const;
  std::vector<Collection> orbit(const Collection& b) const;
  Subgroup subgroup_closure(const std::vector<ElemId>& gens) const;

  // Sanity check of the Hermitian setting used for roots.
  bool is_unitary_generator(const CycMatrix& m) const;

 private:
  Group() = default;
  void index_insert(ElemId id);
  std::optional<ElemId> index_find(const std::uint16_t* perm) const;
  std::size_t perm_hash(const std::uint16_t* perm) const;
  ElemId push_perm(const std::vector<std::uint16_t>& perm);
  void finish_build();
  void detect_reflections();
  std::optional<HypId> monomial_hyperplane(const MonomialElem& e, std::vector<CycNumber>* root,
                                           std::string* label) const;

  std::string name_;
  GroupKind kind_ = GroupKind::Matrix;
  int m_ = 0, p_ = 0, n_ = 0;
  int rank_ = 0;
  int cyc_order_ = 1;
  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::vector<std::uint16_t> perms_;
  std::vector<ElemId> slots_;  // open addressing, value = id + 1, 0 = empty
  std::vector<ElemId> inverse_;
  std::vector<CycMatrix> matrices_;                 // matrix groups only
  std::vector<std::vector<CycNumber>> points_;      // matrix groups only
  std::vector<ElemId> generators_;

  std::vector<ElemId> reflections_;
  std::vector<int> refl_index_;
  std::vector<HypId> refl_hyp_;
  std::vector<int> refl_class_;
  std::vector<bool> class_dist_;
  int num_classes_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::vector<int>> hyp_refls_;
  std::vector<HypId> hyp_action_;
};

std::string vector_key(const std::vector<CycNumber>& v);
// Scales v so that its first nonzero coordinate is 1.
std::vector<CycNumber> normalize_line(const std::vector<CycNumber>& v);

}  // namespace bct
