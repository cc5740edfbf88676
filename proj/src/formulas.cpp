#include "circ/formulas.hpp"

#include <cmath>
#include <string>

#include "circ/error.hpp"
#include "circ/zn.hpp"

namespace circ {

namespace {

void require_order(int n) {
  if (n < 3) throw InvalidArgument("order must be at least 3");
}

void require_composite(int n) {
  require_order(n);
  if (is_prime(n)) throw InvalidArgument(std::to_string(n) + " is prime");
}

void require_dw_divisor(int n, int m) {
  if (m < 4 || n % m != 0 || gcd(m, n / m) != 1) {
    throw InvalidArgument("m must be a divisor >= 4 of n with gcd(m, n/m) = 1");
  }
}

double log2_squared(int n) {
  const double l = std::log2(static_cast<double>(n));
  return l * l;
}

}  // namespace

BigInt total_digraphs(int n) {
  require_order(n);
  return pow2(n - 1);
}

BigInt total_graphs(int n) {
  require_order(n);
  return n % 2 == 1 ? pow2((n - 1) / 2) : pow2(n / 2);
}

BigInt gw_digraph_bound_sum(int n) {
  require_composite(n);
  BigInt total = 0;
  for (auto p : prime_divisors(n)) {
    const int np = n / static_cast<int>(p);
    BigInt inner = 0;
    for (auto q : prime_divisors(np)) inner += pow2((n - np) / static_cast<int>(q));
    total += pow2(np - 1) * inner;
  }
  return total;
}

SmallestPrimePair smallest_prime_pair(int n) {
  require_composite(n);
  const int q = static_cast<int>(smallest_prime_divisor(n));
  const int p = static_cast<int>(smallest_prime_divisor(n / q));
  return {q, p};
}

double gw_digraph_bound_closed(int n) {
  const auto [q, p] = smallest_prime_pair(n);
  const double e = static_cast<double>(n) / p + static_cast<double>(n) / q -
                   static_cast<double>(n) / (p * q) - 1.0;
  return log2_squared(n) * std::exp2(e);
}

double gw_graph_bound_sum(int n) {
  require_composite(n);
  double total = 0;
  for (auto p : prime_divisors(n)) {
    const int np = n / static_cast<int>(p);
    double inner = 0;
    for (auto q : prime_divisors(np)) {
      inner += std::exp2((static_cast<double>(n - np) / q - 1.0) / 2.0 + 1.0);
    }
    total += std::exp2((np - 2.0) / 2.0 + 1.0) * inner;
  }
  return total;
}

double gw_graph_bound_closed(int n) {
  const auto [q, p] = smallest_prime_pair(n);
  const double e = static_cast<double>(n) * (p + q - 1) / (2.0 * p * q) + 0.5;
  return log2_squared(n) * std::exp2(e);
}

double gw_graph_bound_loose(int n) {
  require_composite(n);
  return log2_squared(n) * std::exp2(3.0 * n / 8.0 + 0.5);
}

BigInt dw_count_with_witness(int n, int m) {
  require_dw_divisor(n, m);
  return 2 * pow2(2 * (n / m - 1));
}

BigInt dw_digraph_bound(int n, int m) {
  require_dw_divisor(n, m);
  return pow2(2 * n / m);
}

BigInt dw_graph_bound(int n, int m) {
  require_dw_divisor(n, m);
  return pow2(n / m + 1);
}

bool pq_hypothesis_holds(int p, int q) {
  return p != q && is_prime(p) && is_prime(q) && p >= 5 && q >= 5;
}

BigInt gw_exact_pq(int p, int q) {
  if (!is_prime(p) || !is_prime(q)) throw InvalidArgument("gw_exact_pq requires primes");
  return pow2(p + q - 1) - 2;
}

BigInt sdw_exact_pq(int p, int q) {
  if (!is_prime(p) || !is_prime(q)) throw InvalidArgument("sdw_exact_pq requires primes");
  if (p == q) {
    throw InvalidArgument("sdw_exact_pq requires distinct primes; for p = q every non-normal "
                          "circulant is a generalized wreath circulant");
  }
  return 2 * pow2(2 * (p - 1)) + 2 * pow2(2 * (q - 1)) - 2 * pow2(p - 1) - 2 * pow2(q - 1) - 2;
}

BigInt sdw_enumerated_form_pq(int p, int q) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw InvalidArgument("sdw_enumerated_form_pq requires distinct primes");
  }
  return 2 * pow2(2 * (p - 1)) + 2 * pow2(2 * (q - 1)) - pow2(p + 1) - pow2(q + 1) + 2;
}

Rational gw_sdw_ratio(int p, int q) {
  return Rational(gw_exact_pq(p, q), sdw_exact_pq(p, q));
}

Rational gw_sdw_ratio_limit(int c) {
  if (c < 2) throw InvalidArgument("gw_sdw_ratio_limit requires c >= 2");
  return Rational(pow2(c), 1 + pow2(2 * c));
}

BigInt gw_lower_bound_2mod4(int n) {
  if (n <= 2 || n % 4 != 2) throw InvalidArgument("gw_lower_bound_2mod4 requires n = 2 mod 4, n > 2");
  const int half = n / 2;
  const int p = static_cast<int>(smallest_prime_divisor(half));
  return pow2(half + half / p - 1);
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_odd_prime_power(int p, int k) {
  if (!is_prime(p) || p == 2 || k < 2) {
    throw InvalidArgument("requires an odd prime p and k >= 2");
  }
}

// Orbits of <alpha, iota> on Z_{p^k}, {0} included.
long long alpha_iota_orbits(int p, int k) {
  return ipow(p, k - 1) + (1 - ipow(p, k - 2)) / 2;
}

}  // namespace

BigInt nonnorg_prime_power_claimed(int p, int k) {
  require_odd_prime_power(p, k);
  return pow2(static_cast<unsigned>(alpha_iota_orbits(p, k)));
}

BigInt nonnorg_prime_power_enumerated_form(int p, int k) {
  require_odd_prime_power(p, k);
  return pow2(static_cast<unsigned>(alpha_iota_orbits(p, k) - 1));
}

double small_complement_bound(int n) {
  require_order(n);
  if (n % 2 == 0) throw InvalidArgument("small_complement_bound requires odd n");
  const double e = 3.0 * n / 8.0;
  return n * std::exp2(e + 0.25) + log2_squared(n) * std::exp2(e + 0.5);
}

bool is_safe_prime(long long p) {
  return p > 2 && is_prime(static_cast<std::uint64_t>(p)) &&
         is_prime(static_cast<std::uint64_t>((p - 1) / 2));
}

BigInt ceil_to_int(double value) {
  const double c = std::ceil(value);
  BigInt out = 0;
  // Exact conversion: doubles above 2^53 are integers already.
  int exp = 0;
  const double mant = std::frexp(c, &exp);
  if (c == 0) return out;
  const auto bits = static_cast<long long>(std::ldexp(mant, 53));
  out = bits;
  if (exp >= 53) {
    out <<= (exp - 53);
  } else {
    out >>= (53 - exp);
  }
  return out;
}

std::vector<FormulaResult> formulas(int n) {
  require_order(n);
  std::vector<FormulaResult> rows;
  auto add = [&](std::string name, std::map<std::string, long long> params, auto value,
                 std::string note = {}) {
    FormulaResult r;
    r.name = std::move(name);
    r.parameters = std::move(params);
    r.value = std::move(value);
    r.note = std::move(note);
    rows.push_back(std::move(r));
    return &rows.back();
  };
  auto skip = [&](std::string name, std::string why) {
    FormulaResult r;
    r.name = std::move(name);
    r.parameters = {{"n", n}};
    r.note = std::move(why);
    rows.push_back(std::move(r));
  };

  add("total_digraphs", {{"n", n}}, total_digraphs(n));
  add("total_graphs", {{"n", n}}, total_graphs(n));

  const bool prime = is_prime(n);
  const char* prime_reason = "n prime";
  if (prime) {
    for (const char* name : {"gw_digraph_bound_sum", "gw_digraph_bound_closed", "gw_graph_bound_sum",
                             "gw_graph_bound_closed", "gw_graph_bound_loose"}) {
      skip(name, prime_reason);
    }
  } else {
    const auto [q, p] = smallest_prime_pair(n);
    add("gw_digraph_bound_sum", {{"n", n}}, gw_digraph_bound_sum(n));
    add("gw_digraph_bound_closed", {{"n", n}, {"q", q}, {"p", p}}, gw_digraph_bound_closed(n));
    add("gw_graph_bound_sum", {{"n", n}}, gw_graph_bound_sum(n));
    add("gw_graph_bound_closed", {{"n", n}, {"q", q}, {"p", p}}, gw_graph_bound_closed(n));
    add("gw_graph_bound_loose", {{"n", n}}, gw_graph_bound_loose(n));
  }

  const auto ms = [&] {
    std::vector<int> out;
    for (auto d : divisors(n)) {
      const int m = static_cast<int>(d);
      if (m >= 4 && gcd(m, n / m) == 1) out.push_back(m);
    }
    return out;
  }();
  if (ms.empty()) {
    skip("dw_count_with_witness", "no divisor m >= 4 with gcd(m, n/m) = 1");
  }
  for (int m : ms) {
    add("dw_count_with_witness", {{"n", n}, {"m", m}}, dw_count_with_witness(n, m));
    add("dw_digraph_bound", {{"n", n}, {"m", m}}, dw_digraph_bound(n, m));
    add("dw_graph_bound", {{"n", n}, {"m", m}}, dw_graph_bound(n, m));
  }

  const auto fac = factorize(n);
  const bool is_pq = fac.size() == 2 && fac[0].exponent == 1 && fac[1].exponent == 1;
  if (is_pq) {
    const int p = static_cast<int>(fac[0].prime);
    const int q = static_cast<int>(fac[1].prime);
    const std::string caveat =
        pq_hypothesis_holds(p, q) ? "" : "outside the hypothesis p, q >= 5";
    add("gw_exact_pq", {{"p", p}, {"q", q}}, gw_exact_pq(p, q));
    auto* sdw = add("sdw_exact_pq", {{"p", p}, {"q", q}}, sdw_exact_pq(p, q),
                    caveat.empty() ? std::string("enumeration gives sdw_enumerated_form_pq") : caveat);
    sdw->flagged_claim = true;
    add("sdw_enumerated_form_pq", {{"p", p}, {"q", q}}, sdw_enumerated_form_pq(p, q));
    add("gw_sdw_ratio", {{"p", p}, {"q", q}}, gw_sdw_ratio(p, q), caveat);
    if (q - p >= 2) add("gw_sdw_ratio_limit", {{"c", q - p}}, gw_sdw_ratio_limit(q - p));
  } else {
    skip("gw_exact_pq", "n is not a product of two distinct primes");
  }

  if (n % 4 == 2 && n > 2) {
    const int p = static_cast<int>(smallest_prime_divisor(n / 2));
    add("gw_lower_bound_2mod4", {{"n", n}, {"p", p}}, gw_lower_bound_2mod4(n));
  } else {
    skip("gw_lower_bound_2mod4", "n is not 2 mod 4");
  }

  if (fac.size() == 1 && fac[0].prime != 2 && fac[0].exponent >= 2) {
    const int p = static_cast<int>(fac[0].prime);
    const int k = fac[0].exponent;
    auto* claimed = add("nonnorg_prime_power_claimed", {{"p", p}, {"k", k}},
                        nonnorg_prime_power_claimed(p, k),
                        "exponent counts the orbit {0}; enumeration gives half this value");
    claimed->flagged_claim = true;
    add("nonnorg_prime_power_enumerated_form", {{"p", p}, {"k", k}},
        nonnorg_prime_power_enumerated_form(p, k));
  } else {
    skip("nonnorg_prime_power_claimed", "n is not an odd prime power with exponent >= 2");
  }

  if (n % 2 == 1) {
    add("small_complement_bound", {{"n", n}}, small_complement_bound(n));
  } else {
    skip("small_complement_bound", "n even");
  }
  add("is_safe_prime", {{"n", n}}, BigInt(is_safe_prime(n) ? 1 : 0));
  return rows;
}

}  // namespace circ
