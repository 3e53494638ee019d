#pragma once

#include <optional>
#include <vector>

#include "bct/group.hpp"

namespace bct {

// Root-span decider: H1, H2 are transverse iff no other root lies in span(a1, a2).
bool is_transverse_roots(const Group& g, HypId h1, HypId h2);
// Combinatorial rule for G(m,p,n); nullopt for matrix groups.
std::optional<bool> is_transverse_rule(const Group& g, HypId h1, HypId h2);
// Fast path for imprimitive groups, asserted equal to the root decider.
bool is_transverse(const Group& g, HypId h1, HypId h2);

// Per ordered hyperplane pair: transverse flag, or the reflections (indices into
// Group::reflections) mapping the first to the second.
class TransvTable {
 public:
  TransvTable() = default;
  static TransvTable build(const Group& g);
  // Rebuilds from cached transverse flags; the mapping lists are recomputed.
  static TransvTable from_flags(const Group& g, const std::vector<char>& flags);

  std::size_t size() const { return n_; }
  bool transverse(HypId a, HypId b) const { return flags_[a * n_ + b] != 0; }
  const std::vector<int>& mapped_by(HypId from, HypId to) const { return mapped_[from * n_ + to]; }
  const std::vector<char>& flags() const { return flags_; }
  // Transverse with every member of b (true for the empty collection).
  bool transverse_with(HypId h, const Collection& b) const;
  bool is_collection(const Collection& b) const;

 private:
  void fill_mappings(const Group& g);
  std::size_t n_ = 0;
  std::vector<char> flags_;
  std::vector<std::vector<int>> mapped_;
};

struct OrbitRecord {
  Collection representative;  // lexicographically minimal member
  std::size_t orbit_size = 0;
  std::size_t stab_order = 0;
  std::size_t cardinality = 0;
  std::vector<Collection> members;  // sorted
};

// All transverse collections, empty first, in lexicographic order.
std::vector<Collection> enumerate_collections(const Group& g, const TransvTable& t);
// Orbits sorted by (cardinality, representative).
std::vector<OrbitRecord> collection_orbits(const Group& g, const TransvTable& t);
// {sB : s a reflection}, sorted and deduplicated.
std::vector<Collection> small_orbit(const Group& g, const Collection& b);

}  // namespace bct
