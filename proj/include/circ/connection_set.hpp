#ifndef CIRC_CONNECTION_SET_HPP
#define CIRC_CONNECTION_SET_HPP

// Connection sets of circulant (di)graphs and the syntactic classes built
// from them: generalized wreath (GW), deleted wreath type (DW) and strictly
// deleted wreath (SDW).
//
// Arc orientation: arc(u, v) holds iff v - u is in S. The opposite
// convention (u - v in S) maps the digraph of S to the digraph of -S, which
// is a bijection on connection sets preserving every class counted here.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circ/zn.hpp"

namespace circ {

// Largest order representable: members live in one 64-bit word.
inline constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

// Bitmask of x -> x + t on Z_n.
inline Mask rotate(Mask m, int t, int n) {
  t %= n;
  if (t == 0) return m;
  return ((m << t) | (m >> (n - t))) & full_mask(n);
}

// Bitmask of the order-d subgroup of Z_n.
Mask subgroup_mask(int d, int n);

class ConnectionSet {
 public:
  // Throws InvalidArgument if 0 (mod n) is a member or a member is out of
  // range, and ResourceError if n exceeds kMaxOrder.
  ConnectionSet(Modulus n, const std::vector<int>& members);
  static ConnectionSet from_mask(Modulus n, Mask bits);
  static ConnectionSet empty(Modulus n) { return from_mask(n, 0); }
  static ConnectionSet complete(Modulus n) { return from_mask(n, full_mask(n) & ~Mask{1}); }

  // "n:e1,e2,..." with distinct members in 1..n-1, any order; "9:" is empty.
  // to_string lists members ascending.
  static ConnectionSet parse(std::string_view text);
  std::string to_string() const;

  int order() const { return n_.value(); }
  const Modulus& modulus() const { return n_; }
  Mask bits() const { return bits_; }
  bool contains(int x) const { return (bits_ >> n_.reduce(x)) & 1U; }
  int size() const;
  std::vector<int> members() const;

  bool is_graph() const;  // S = -S
  bool arc(int u, int v) const { return contains(v - u); }
  ConnectionSet complement() const;
  ConnectionSet scale(int unit) const;
  ConnectionSet negate() const;

  bool operator==(const ConnectionSet&) const = default;
  auto operator<=>(const ConnectionSet& o) const {
    if (auto c = n_.value() <=> o.n_.value(); c != 0) return c;
    return bits_ <=> o.bits_;
  }

 private:
  ConnectionSet(Modulus n, Mask bits) : n_(n), bits_(bits) {}

  Modulus n_;
  Mask bits_;
};

// outer on Z_k, inner on Z_b -> {k*t : t in inner} u {x in Z_kb : x mod k in outer}.
ConnectionSet wreath(const ConnectionSet& outer, const ConnectionSet& inner);

// Subgroups 1 < K <= H < Z_n (given by their orders) with S \ H a union of
// K-cosets.
struct GwWitness {
  int k;
  int h;
  bool operator==(const GwWitness&) const = default;
};

// Divisor m >= 4 of n, gcd(m, n/m) = 1, meeting the order-m subgroup H and
// its cosets in the admissible patterns.
struct DwWitness {
  int m;
  bool operator==(const DwWitness&) const = default;
};

struct PrimeGwWitness {
  int q;  // order of L_q
  int p;  // M_p has order n/p
  bool operator==(const PrimeGwWitness&) const = default;
};

// True iff S \ H is a union of K-cosets (k | h | n required).
bool is_gw_pair(const ConnectionSet& s, int k, int h);

// First (k, h) in lexicographic order with 1 < k, k | h, h | n, h < n.
std::optional<GwWitness> gw_witness(const ConnectionSet& s);

// First prime p | n (ascending), then prime q | n/p, with S \ M_p a union of
// L_q-cosets.
std::optional<PrimeGwWitness> gw_witness_prime(const ConnectionSet& s);

// Divisors m with m >= 4 and gcd(m, n/m) = 1, ascending (m = n included).
std::vector<int> dw_admissible_divisors(int n);

// True iff S satisfies the deleted wreath conditions for this m.
bool satisfies_dw(const ConnectionSet& s, int m);

std::optional<DwWitness> dw_witness(const ConnectionSet& s);

bool is_sdw(const ConnectionSet& s);

// Every (L_q, M_p)-generalized wreath set: 2^{n/p-1} * 2^{(n-n/p)/q} sets.
// Throws InvalidArgument unless p, q are primes with p | n and q | n/p.
void gw_family(int n, int q, int p, const std::function<void(const ConnectionSet&)>& visit);
std::vector<ConnectionSet> gw_family(int n, int q, int p);

// Every set satisfying the deleted wreath conditions for m: 2 * 4^{n/m-1} sets.
void dw_family(int n, int m, const std::function<void(const ConnectionSet&)>& visit);
std::vector<ConnectionSet> dw_family(int n, int m);

}  // namespace circ

#endif  // CIRC_CONNECTION_SET_HPP
