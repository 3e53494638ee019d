#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bct/admissibility.hpp"
#include "bct/brauer_module.hpp"

namespace bct {

// True iff the union of wB over the support is a transverse collection.
bool bar_condition(const Group& g, const TransvTable& t, const std::vector<ElemId>& support, const Collection& b);

// (a1) H not in B, (a2) H not transverse with B, (a3) for every H' in B not
// transverse with H, all reflections mapping H' to H send B to one collection.
bool acceptable_hyperplane(const Group& g, const TransvTable& t, const Collection& b, HypId h);
// Unordered pairs (H' < H'') of acceptable hyperplanes lying in a common sB, s a reflection.
std::vector<std::pair<HypId, HypId>> acceptable_pairs(const Group& g, const TransvTable& t, const Collection& b);

// tau^{H',H''}_H = sum over R_{H->H'} of mu_s s minus the sum over R_{H->H''}.
struct TauVector {
  HypId h = 0, h1 = 0, h2 = 0;
  ThetaVector vec;
  std::vector<ElemId> support;
};
// One entry per acceptable pair and H in B non-transverse with both.
std::vector<TauVector> rel_tau(const Group& g, const TransvTable& t, const Collection& b);

struct FCheck {
  bool f1 = false;
  bool f2a = false;
  bool f2b = false;  // vacuously true when A2 fails
  bool a2 = false;
  std::size_t tau_count = 0;
  bool f2() const { return f2a && f2b; }
  bool passes() const { return f1 || f2(); }
};
// F2b tests D_B against the integer span of Rel-bar together with Rel_tau.
FCheck check_f(const Group& g, const TransvTable& t, const Collection& b);

struct G26Report {
  std::size_t o1_size = 0, o2_size = 0;
  bool exactly_three = false;       // every O1 hyperplane has 3 transverse partners, all in O2
  bool distinct_triples = false;
  bool o2_non_transverse = false;
  std::size_t pair_count = 0;
  std::size_t pair_orbits = 0;
  bool t2_links = false;            // t2 and t2^2 carry {H3, H12} to the other two pairs through H3
  std::vector<HypId> h3_partners;
  bool all() const {
    return o1_size == 12 && o2_size == 9 && exactly_three && distinct_triples && o2_non_transverse &&
           pair_count == 36 && pair_orbits == 1 && t2_links;
  }
};
// Throws InvalidParameters unless g26_shape(g) holds and the hyperplanes split
// into the orbits of H_3 and H_12.
G26Report g26_geometry_suite(const Group& g, const TransvTable& t);

enum class Verdict { Free, NotFree, Undetermined };
const char* verdict_name(Verdict v);

struct OrbitFreeness {
  Collection representative;
  FCheck f;
};

struct FreenessReport {
  Verdict verdict = Verdict::Undetermined;
  std::string route;  // imprimitive, certificate, dimension-jump, geometric
  std::string basis;
  mpz_class dim_generic, dim_mu6;
  bool dichotomy = true;  // F1 or F2 on every orbit representative
  std::vector<OrbitFreeness> orbits;
  std::optional<G26Report> g26;
};

// Matrix group of order 1296 and rank 3 with 21 hyperplanes.
bool g26_shape(const Group& g);

// G26 takes the geometric route, since the F-dichotomy is not claimed there.
FreenessReport freeness_verdict(const Group& g, const TransvTable& t, const std::vector<OrbitRecord>& orbits,
                                const Classification& c);

// Operator of an element of the span of Theta_B on the block of B, restricted to
// the columns of that block; zero means the element kills e_B V.
bool annihilates_block(const Group& g, const InducedModule& m, const ThetaVector& x);

}  // namespace bct
