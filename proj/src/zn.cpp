#include "circ/zn.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "circ/error.hpp"

namespace circ {

Modulus::Modulus(int n) : n_(n) {
  if (n < 3) {
    throw InvalidArgument("modulus must be at least 3, got " + std::to_string(n));
  }
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("factorize requires n >= 2");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("divisors requires n >= 1");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("smallest_prime_divisor requires n >= 2");
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

UnitAction::UnitAction(int a, Modulus n) : a_(n.reduce(a)), n_(n) {
  if (gcd(static_cast<std::uint64_t>(a_), static_cast<std::uint64_t>(n.value())) != 1) {
    throw InvalidArgument(std::to_string(a) + " is not a unit modulo " +
                          std::to_string(n.value()));
  }
}

int unit_order(int a, Modulus n) {
  UnitAction u(a, n);
  long long x = u.multiplier();
  int t = 1;
  while (x != 1) {
    x = (x * u.multiplier()) % n.value();
    ++t;
  }
  return t;
}

std::vector<int> units(Modulus n) {
  std::vector<int> out;
  for (int a = 1; a < n.value(); ++a) {
    if (gcd(a, n.value()) == 1) out.push_back(a);
  }
  return out;
}

CyclicSubgroup::CyclicSubgroup(int d, Modulus n) : d_(d), n_(n) {
  if (d < 1 || n.value() % d != 0) {
    throw InvalidArgument(std::to_string(d) + " does not divide " + std::to_string(n.value()));
  }
}

std::vector<int> CyclicSubgroup::elements() const {
  std::vector<int> out;
  out.reserve(d_);
  for (int t = 0; t < d_; ++t) out.push_back(t * index());
  return out;
}

Partition coset_partition(const CyclicSubgroup& sub) {
  Partition cells;
  for (int r = 0; r < sub.index(); ++r) {
    std::vector<int> cell;
    for (int e : sub.elements()) cell.push_back(r + e);
    cells.push_back(std::move(cell));
  }
  return cells;
}

Partition multiplicative_orbits(std::span<const UnitAction> gens, Modulus n) {
  for (const auto& g : gens) {
    if (g.modulus().value() != n.value()) throw InvalidArgument("unit action modulus mismatch");
  }
  std::vector<bool> seen(n.value(), false);
  Partition cells;
  for (int start = 0; start < n.value(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cell{start};
    seen[start] = true;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        int y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          cell.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

CrtSplit::CrtSplit(Modulus n, int m) : n_(n.value()), k_(0), m_(m) {
  if (m < 1 || n.value() % m != 0) {
    throw InvalidArgument(std::to_string(m) + " does not divide " + std::to_string(n.value()));
  }
  k_ = n.value() / m;
  if (gcd(m, k_) != 1) {
    throw InvalidArgument("crt_split requires gcd(m, n/m) = 1");
  }
  join_table_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    join_table_[(x % k_) * m_ + (x % m_)] = x;
  }
}

std::pair<int, int> CrtSplit::split(int x) const {
  int r = ((x % n_) + n_) % n_;
  return {r % k_, r % m_};
}

int CrtSplit::join(int i, int j) const {
  i = ((i % k_) + k_) % k_;
  j = ((j % m_) + m_) % m_;
  return join_table_[i * m_ + j];
}

}  // namespace circ
