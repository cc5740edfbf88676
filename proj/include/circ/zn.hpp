#ifndef CIRC_ZN_HPP
#define CIRC_ZN_HPP

// Arithmetic of the cyclic group Z_n: factorization, divisors, units,
// the subgroup lattice (one subgroup per divisor), cosets and orbits of
// multiplicative actions.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace circ {

// Order of a cyclic group. Orders 1 and 2 are rejected: negation is the
// identity there and the dihedral/regular distinction collapses.
class Modulus {
 public:
  explicit Modulus(int n);

  int value() const { return n_; }
  operator int() const { return n_; }  // NOLINT(google-explicit-constructor)

  int reduce(long long x) const {
    long long r = x % n_;
    return static_cast<int>(r < 0 ? r + n_ : r);
  }

 private:
  int n_;
};

// Cells of a partition of Z_n. Each cell is sorted ascending and cells are
// ordered by their minimum element.
using Partition = std::vector<std::vector<int>>;

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

// Prime decomposition with strictly increasing primes. Requires n >= 2.
std::vector<PrimePower> factorize(std::uint64_t n);

// All divisors of n in ascending order. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Distinct prime divisors of n in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_divisor(std::uint64_t n);  // n >= 2
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Multiplication by a unit a of Z_n; a bijection fixing 0.
class UnitAction {
 public:
  UnitAction(int a, Modulus n);

  int multiplier() const { return a_; }
  const Modulus& modulus() const { return n_; }
  int operator()(int i) const {
    return static_cast<int>((static_cast<long long>(a_) * i) % n_.value());
  }

 private:
  int a_;
  Modulus n_;
};

// Least t >= 1 with a^t = 1 (mod n). Throws InvalidArgument for non-units.
int unit_order(int a, Modulus n);

// All units of Z_n in ascending order.
std::vector<int> units(Modulus n);

// The unique subgroup of Z_n of order d, i.e. the multiples of n/d.
class CyclicSubgroup {
 public:
  CyclicSubgroup(int d, Modulus n);

  int order() const { return d_; }
  int index() const { return n_.value() / d_; }
  int generator() const { return index(); }
  const Modulus& modulus() const { return n_; }
  bool contains(int x) const { return n_.reduce(x) % index() == 0; }
  std::vector<int> elements() const;

 private:
  int d_;
  Modulus n_;
};

inline CyclicSubgroup subgroup_of_order(int d, Modulus n) {
  return CyclicSubgroup(d, n);
}

// Cosets of sub in Z_n: index() cells of size order(), cell r = r + sub.
Partition coset_partition(const CyclicSubgroup& sub);

// Orbits of the group generated by the maps i -> a*i. Breadth-first
// closure; {0} is always its own cell.
Partition multiplicative_orbits(std::span<const UnitAction> gens, Modulus n);

// Z_n -> Z_{n/m} x Z_m by componentwise reduction, for coprime m, n/m.
class CrtSplit {
 public:
  CrtSplit(Modulus n, int m);

  int outer_order() const { return k_; }  // n/m
  int inner_order() const { return m_; }
  std::pair<int, int> split(int x) const;
  int join(int i, int j) const;

 private:
  int n_;
  int k_;
  int m_;
  std::vector<int> join_table_;  // join_table_[i*m + j]
};

inline CrtSplit crt_split(Modulus n, int m) { return CrtSplit(n, m); }

}  // namespace circ

#endif  // CIRC_ZN_HPP
