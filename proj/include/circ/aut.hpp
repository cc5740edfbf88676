#ifndef CIRC_AUT_HPP
#define CIRC_AUT_HPP

// Exact automorphism groups of circulant (di)graphs and the verdicts derived
// from them.
//
// The group is <rho, Stab(0)>. Generators of Stab(0) come from a
// backtracking search over point images, pruned by equitable refinement on
// out/in-neighbour counts. Levels of the first refinement path are processed
// deepest first, so the generators found form a strong generating set for
// the base (0, b_1, ..., b_k) and |Aut| = n * prod |orbit_i|.

#include <optional>
#include <vector>

#include "circ/bigint.hpp"
#include "circ/connection_set.hpp"
#include "circ/perm.hpp"

namespace circ {

inline constexpr int kDefaultAutCeiling = 64;

struct AutomorphismData {
  int degree = 0;
  std::vector<int> base;                           // 0, b_1, ..., b_k
  std::vector<int> orbit_sizes;                    // n, |orbit of b_1|, ...
  std::vector<Permutation> stabilizer_generators;  // generate Stab(0)

  BigInt order() const;
  // Stab(0) order, saturated at 2^62.
  long long stabilizer_order_saturated() const;
  PermGroup group() const;
  bool normalizes_regular_cycle() const;
};

// Throws ResourceError if the order exceeds ceiling.
AutomorphismData compute_automorphisms(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);

PermGroup aut_group(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);
BigInt aut_order(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);

bool is_normal(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);
bool is_drr(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);
bool is_small(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);

// a*S = S. Throws InvalidArgument for non-units.
bool admits_multiplier(const ConnectionSet& s, int a);

// Permutations (i, j) -> (i, sigma(j)) of Z_{n/m} x Z_m, used to test for a
// 1 x S_m subgroup.
Permutation inner_transposition(int n, int m);
Permutation inner_cycle(int n, int m);

// Aut contains every permutation acting only on the Z_m coordinate. Throws
// InvalidArgument unless m >= 4, m | n, gcd(m, n/m) = 1.
bool contains_one_cross_sym(const ConnectionSet& s, int m, int ceiling = kDefaultAutCeiling);

struct ClassificationRecord {
  ConnectionSet set;
  bool is_graph = false;
  BigInt aut_order;
  bool is_drr = false;
  bool is_small = false;
  bool is_normal = false;
  std::optional<GwWitness> gw;
  std::optional<DwWitness> dw;
  bool is_sdw = false;
};

ClassificationRecord classify(const ConnectionSet& s, int ceiling = kDefaultAutCeiling);

}  // namespace circ

#endif  // CIRC_AUT_HPP
