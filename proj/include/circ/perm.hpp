#ifndef CIRC_PERM_HPP
#define CIRC_PERM_HPP

// Permutations of {0..n-1} and permutation groups given by generators,
// stored as a stabilizer chain.

#include <span>
#include <vector>

#include "circ/bigint.hpp"
#include "circ/zn.hpp"

namespace circ {

class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a bijection on {0..size-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // (p * q)(x) = p(q(x)): q is applied first.
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  bool operator==(const Permutation&) const = default;

  // True iff this is x -> x + k (mod degree) for some k.
  bool is_rotation() const;

 private:
  std::vector<int> images_;
};

Permutation rho(int n);
Permutation iota(int n);
Permutation unit_perm(int a, int n);

// A finitely generated permutation group with a stabilizer chain.
//
// group_from_generators runs deterministic Schreier-Sims with base
// 0, 1, ..., n-2 (levels whose fundamental orbit is a single point are
// kept). from_strong_generating_set trusts that the given generators form a
// strong generating set for the given base and only builds transversals.
class PermGroup {
 public:
  static PermGroup group_from_generators(std::span<const Permutation> gens);
  static PermGroup from_strong_generating_set(std::vector<int> base,
                                              std::vector<Permutation> gens, int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  std::vector<int> orbit_sizes() const;

  BigInt order() const;
  bool contains(const Permutation& p) const;

  // True iff every generator s satisfies s*rho*s^-1 in <rho>. Throws
  // InvalidArgument if rho is not a member.
  bool normalizes_regular_cycle() const;

  // True iff every generator maps each cell onto a cell. Throws
  // InvalidArgument if cells do not partition {0..n-1}.
  bool is_block_partition(const Partition& cells) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> strong_gens;
    std::vector<int> orbit;                   // orbit points in discovery order
    std::vector<int> position;                // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;     // indexed like orbit: base_point -> orbit[i]
    std::vector<Permutation> transversal_inv;
    std::vector<std::vector<char>> checked;   // [orbit idx][gen idx] Schreier generator sifted
  };

  explicit PermGroup(int degree) : degree_(degree) {}

  void rebuild_orbit(std::size_t level);
  void add_strong_generator(std::size_t level, const Permutation& g);
  // Sifts g from `start`. Returns the level where sifting stopped (levels_.size()
  // when it passed every level) and leaves the residue in g.
  std::size_t sift(Permutation& g, std::size_t start) const;

  int degree_;
  std::vector<int> base_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

inline PermGroup group_from_generators(std::span<const Permutation> gens) {
  return PermGroup::group_from_generators(gens);
}

// Group order by explicit closure; an independent oracle for degree <= 8.
long long naive_group_order(std::span<const Permutation> gens);

}  // namespace circ

#endif  // CIRC_PERM_HPP
