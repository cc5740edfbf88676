#include "circ/connection_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "circ/error.hpp"

namespace circ {

namespace {

void check_order(int n) {
  if (n > kMaxOrder) {
    throw ResourceError("order " + std::to_string(n) + " exceeds the connection-set limit of " +
                        std::to_string(kMaxOrder));
  }
}

// Smallest union of K-cosets containing bits, K of order k.
Mask coset_closure(Mask bits, int k, int n) {
  Mask out = 0;
  const int step = n / k;
  for (int t = 0; t < k; ++t) out |= rotate(bits, t * step, n);
  return out;
}

}  // namespace

Mask subgroup_mask(int d, int n) {
  Mask m = 0;
  const int step = n / d;
  for (int x = 0; x < n; x += step) m |= Mask{1} << x;
  return m;
}

ConnectionSet::ConnectionSet(Modulus n, const std::vector<int>& members) : n_(n), bits_(0) {
  check_order(n.value());
  for (int x : members) {
    if (x <= 0 || x >= n.value()) {
      throw InvalidArgument("connection set member " + std::to_string(x) +
                            " is outside 1.." + std::to_string(n.value() - 1));
    }
    bits_ |= Mask{1} << x;
  }
}

ConnectionSet ConnectionSet::from_mask(Modulus n, Mask bits) {
  check_order(n.value());
  if (bits & 1U) throw InvalidArgument("0 cannot be a member of a connection set");
  if (bits & ~full_mask(n.value())) throw InvalidArgument("mask has bits beyond the order");
  return ConnectionSet(n, bits);
}

ConnectionSet ConnectionSet::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse connection set \"" + std::string(text) + "\": " + why);
  };
  auto number = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw fail("\"" + std::string(tok) + "\" is not an integer");
    }
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail("missing ':'");
  const int n = number(text.substr(0, colon));
  if (n < 3) throw fail("order must be at least 3");
  if (n > kMaxOrder) throw fail("order exceeds " + std::to_string(kMaxOrder));
  std::vector<int> members;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const int v = number(rest.substr(0, comma));
    if (v < 1 || v >= n) throw fail("member " + std::to_string(v) + " out of range");
    if (std::find(members.begin(), members.end(), v) != members.end()) {
      throw fail("member " + std::to_string(v) + " repeated");
    }
    members.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw fail("trailing ','");
  }
  return ConnectionSet(Modulus(n), members);
}

std::string ConnectionSet::to_string() const {
  std::string out = std::to_string(n_.value()) + ":";
  bool first = true;
  for (int x : members()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out;
}

int ConnectionSet::size() const { return std::popcount(bits_); }

std::vector<int> ConnectionSet::members() const {
  std::vector<int> out;
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool ConnectionSet::is_graph() const { return negate().bits_ == bits_; }

ConnectionSet ConnectionSet::complement() const {
  return ConnectionSet(n_, ~bits_ & full_mask(n_.value()) & ~Mask{1});
}

ConnectionSet ConnectionSet::negate() const {
  Mask out = 0;
  for (Mask b = bits_; b != 0; b &= b - 1) {
    out |= Mask{1} << (n_.value() - std::countr_zero(b));
  }
  return ConnectionSet(n_, out);
}

ConnectionSet ConnectionSet::scale(int unit) const {
  UnitAction u(unit, n_);
  Mask out = 0;
  for (Mask b = bits_; b != 0; b &= b - 1) out |= Mask{1} << u(std::countr_zero(b));
  return ConnectionSet(n_, out);
}

ConnectionSet wreath(const ConnectionSet& outer, const ConnectionSet& inner) {
  const int k = outer.order();
  const int b = inner.order();
  const int n = k * b;
  check_order(n);
  Mask bits = 0;
  for (int t : inner.members()) bits |= Mask{1} << (k * t);
  for (int x = 1; x < n; ++x) {
    if (outer.contains(x % k)) bits |= Mask{1} << x;
  }
  return ConnectionSet::from_mask(Modulus(n), bits);
}

bool is_gw_pair(const ConnectionSet& s, int k, int h) {
  const int n = s.order();
  if (k < 1 || h % k != 0 || n % h != 0) throw InvalidArgument("gw pair requires k | h | n");
  const Mask outside = s.bits() & ~subgroup_mask(h, n);
  return coset_closure(outside, k, n) == outside;
}

std::optional<GwWitness> gw_witness(const ConnectionSet& s) {
  const int n = s.order();
  const auto divs = divisors(n);
  for (auto k : divs) {
    if (k <= 1) continue;
    for (auto h : divs) {
      if (h >= static_cast<std::uint64_t>(n) || h % k != 0) continue;
      if (is_gw_pair(s, static_cast<int>(k), static_cast<int>(h))) {
        return GwWitness{static_cast<int>(k), static_cast<int>(h)};
      }
    }
  }
  return std::nullopt;
}

std::optional<PrimeGwWitness> gw_witness_prime(const ConnectionSet& s) {
  const int n = s.order();
  for (auto p : prime_divisors(n)) {
    const int mp = n / static_cast<int>(p);
    for (auto q : prime_divisors(mp)) {
      if (is_gw_pair(s, static_cast<int>(q), mp)) {
        return PrimeGwWitness{static_cast<int>(q), static_cast<int>(p)};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> dw_admissible_divisors(int n) {
  std::vector<int> out;
  for (auto d : divisors(n)) {
    const int m = static_cast<int>(d);
    if (m >= 4 && gcd(m, n / m) == 1) out.push_back(m);
  }
  return out;
}

bool satisfies_dw(const ConnectionSet& s, int m) {
  const int n = s.order();
  if (m < 4 || n % m != 0 || gcd(m, n / m) != 1) {
    throw InvalidArgument("m must be a divisor >= 4 of n coprime to n/m");
  }
  const Mask h = subgroup_mask(m, n);
  const Mask in_h = s.bits() & h;
  if (in_h != 0 && in_h != (h & ~Mask{1})) return false;
  for (int g = m; g < n; g += m) {
    const Mask coset = rotate(h, g, n);
    const Mask meet = s.bits() & coset;
    const Mask single = Mask{1} << g;
    if (meet != 0 && meet != single && meet != (coset & ~single) && meet != coset) return false;
  }
  return true;
}

std::optional<DwWitness> dw_witness(const ConnectionSet& s) {
  for (int m : dw_admissible_divisors(s.order())) {
    if (satisfies_dw(s, m)) return DwWitness{m};
  }
  return std::nullopt;
}

bool is_sdw(const ConnectionSet& s) { return dw_witness(s) && !gw_witness(s); }

void gw_family(int n, int q, int p, const std::function<void(const ConnectionSet&)>& visit) {
  Modulus mod(n);
  check_order(n);
  if (!is_prime(p) || !is_prime(q) || n % p != 0 || (n / p) % q != 0) {
    throw InvalidArgument("gw_family requires primes p | n and q | n/p");
  }
  const Mask mp = subgroup_mask(n / p, n);
  std::vector<Mask> atoms;  // nonzero elements of M_p, then L_q-cosets outside M_p
  for (int x = 1; x < n; ++x) {
    if ((mp >> x) & 1U) atoms.push_back(Mask{1} << x);
  }
  Mask covered = mp;
  for (int x = 1; x < n; ++x) {
    if ((covered >> x) & 1U) continue;
    const Mask coset = coset_closure(Mask{1} << x, q, n);
    atoms.push_back(coset);
    covered |= coset;
  }
  if (atoms.size() >= 63) throw ResourceError("gw_family would enumerate more than 2^62 sets");
  const std::uint64_t total = std::uint64_t{1} << atoms.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    Mask bits = 0;
    for (std::uint64_t c = code; c != 0; c &= c - 1) bits |= atoms[std::countr_zero(c)];
    visit(ConnectionSet::from_mask(mod, bits));
  }
}

std::vector<ConnectionSet> gw_family(int n, int q, int p) {
  std::vector<ConnectionSet> out;
  gw_family(n, q, p, [&](const ConnectionSet& s) { out.push_back(s); });
  return out;
}

void dw_family(int n, int m, const std::function<void(const ConnectionSet&)>& visit) {
  Modulus mod(n);
  check_order(n);
  if (m < 4 || n % m != 0 || gcd(m, n / m) != 1) {
    throw InvalidArgument("dw_family requires a divisor m >= 4 with gcd(m, n/m) = 1");
  }
  const Mask h = subgroup_mask(m, n);
  std::vector<Mask> cosets;
  for (int g = m; g < n; g += m) cosets.push_back(rotate(h, g, n));
  const int reps = static_cast<int>(cosets.size());
  if (2 * reps + 1 >= 63) throw ResourceError("dw_family would enumerate more than 2^62 sets");
  const std::uint64_t total = std::uint64_t{2} << (2 * reps);
  for (std::uint64_t code = 0; code < total; ++code) {
    Mask bits = (code & 1U) ? (h & ~Mask{1}) : 0;
    for (int r = 0; r < reps; ++r) {
      const int g = (r + 1) * m;
      const Mask single = Mask{1} << g;
      switch ((code >> (1 + 2 * r)) & 3U) {
        case 0: break;
        case 1: bits |= single; break;
        case 2: bits |= cosets[r] & ~single; break;
        default: bits |= cosets[r]; break;
      }
    }
    visit(ConnectionSet::from_mask(mod, bits));
  }
}

std::vector<ConnectionSet> dw_family(int n, int m) {
  std::vector<ConnectionSet> out;
  dw_family(n, m, [&](const ConnectionSet& s) { out.push_back(s); });
  return out;
}

}  // namespace circ
