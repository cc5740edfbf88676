#ifndef CIRC_FORMULAS_HPP
#define CIRC_FORMULAS_HPP

// Closed-form counts and bounds for circulant (di)graph classes. Integral
// quantities are exact BigInt values; bounds involving log2(n)^2 or
// half-integer powers of two are doubles.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "circ/bigint.hpp"

namespace circ {

BigInt total_digraphs(int n);
BigInt total_graphs(int n);

// Sum over primes p | n of 2^{n/p-1} * sum over primes q | n/p of 2^{(n-n/p)/q}.
// Throws InvalidArgument for prime n.
BigInt gw_digraph_bound_sum(int n);

// q = smallest prime of n, p = smallest prime of n/q.
struct SmallestPrimePair {
  int q;
  int p;
};
SmallestPrimePair smallest_prime_pair(int n);

double gw_digraph_bound_closed(int n);  // log2(n)^2 * 2^{n/p + n/q - n/(pq) - 1}
double gw_graph_bound_sum(int n);       // exponents are half-integers in general
double gw_graph_bound_closed(int n);    // log2(n)^2 * 2^{n(p+q-1)/(2pq) + 1/2}
double gw_graph_bound_loose(int n);     // log2(n)^2 * 2^{3n/8 + 1/2}

// Requires m >= 4, m | n, gcd(m, n/m) = 1.
BigInt dw_count_with_witness(int n, int m);  // 2 * 4^{n/m-1}
BigInt dw_digraph_bound(int n, int m);       // 2^{2n/m}
BigInt dw_graph_bound(int n, int m);         // 2^{n/m+1}

BigInt gw_exact_pq(int p, int q);   // 2^{p+q-1} - 2
BigInt sdw_exact_pq(int p, int q);  // throws for p = q
// 2*4^{p-1} + 2*4^{q-1} - 2^{p+1} - 2^{q+1} + 2: what enumeration of the two
// deleted wreath families gives. Each family also contains the wreath
// products over the other block system, which sdw_exact_pq does not remove.
BigInt sdw_enumerated_form_pq(int p, int q);
Rational gw_sdw_ratio(int p, int q);
Rational gw_sdw_ratio_limit(int c);  // 2^c / (1 + 2^{2c})

// True when (p, q) satisfy the hypothesis of the pq results: distinct
// primes, both >= 5. The formulas above are still evaluated otherwise.
bool pq_hypothesis_holds(int p, int q);

// 2^{n/2 + n/(2p) - 1}, p the smallest prime of n/2. Requires n = 2 mod 4, n > 2.
BigInt gw_lower_bound_2mod4(int n);

// Claimed count of non-normal circulant graphs of order p^k:
// 2^{p^{k-1} + (1 - p^{k-2})/2}. The exponent is the number of orbits of
// <alpha, iota> including {0}; enumeration disagrees with it (see
// nonnorg_prime_power_enumerated_form).
BigInt nonnorg_prime_power_claimed(int p, int k);
// 2 raised to the number of orbits excluding {0}.
BigInt nonnorg_prime_power_enumerated_form(int p, int k);

double small_complement_bound(int n);  // n*2^{3n/8+1/4} + log2(n)^2 * 2^{3n/8+1/2}
bool is_safe_prime(long long p);

// Ceiling of a real bound as an exact integer.
BigInt ceil_to_int(double value);

struct FormulaResult {
  std::string name;
  std::map<std::string, long long> parameters;
  std::variant<std::monostate, BigInt, double, Rational> value;
  std::string note;  // inapplicability reason or a caveat
  bool flagged_claim = false;

  bool applicable() const { return !std::holds_alternative<std::monostate>(value); }
};

// Every formula applicable to order n; rows that do not apply carry a reason.
std::vector<FormulaResult> formulas(int n);

}  // namespace circ

#endif  // CIRC_FORMULAS_HPP
