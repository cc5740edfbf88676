// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "circ/census.hpp"
#include "oracle.hpp"

using namespace circ;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  out.expect(dt.count() < budget_seconds, "time budget " + std::to_string(budget_seconds) + " s");
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << ' ' << id << ' ' << title << ':' << out.detail.str()
            << " (" << std::fixed << std::setprecision(2) << dt.count() << " s)" << std::endl;
}

const Check* find_check(const CensusReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool hard_checks_hold(const CensusReport& r, Outcome& out) {
  bool ok = true;
  for (const auto& c : r.checks) {
    if (!c.flagged_erratum && !c.holds) {
      out.expect(false, "census check " + c.name);
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "n=15 digraph census, gw = 126 = gw_exact_pq(3,5) <= 128", 60, [](Outcome& out) {
    CensusOptions opt;
    opt.threads = 4;
    const auto r = run_census(15, CensusMode::digraph, opt);
    out.detail << " gw=" << r.counts.gw << " exact=" << gw_exact_pq(3, 5)
               << " bound=" << gw_digraph_bound_sum(15);
    out.expect(r.counts.gw == 126, "gw == 126");
    out.expect(gw_exact_pq(3, 5) == 126, "gw_exact_pq(3,5) == 126");
    out.expect(r.counts.gw <= gw_digraph_bound_sum(15), "gw <= bound sum");
    out.expect(gw_digraph_bound_sum(15) == 128, "bound sum == 128");
    hard_checks_hold(r, out);
  });

  criterion(2, "n=9 digraph census, gw = 16 = nonnormal, every gw set non-normal", 5, [](Outcome& out) {
    const auto r = run_census(9, CensusMode::digraph);
    out.detail << " gw=" << r.counts.gw << " nonnormal=" << r.counts.nonnormal;
    out.expect(r.counts.gw == 16, "gw == 16");
    out.expect(r.counts.nonnormal == r.counts.gw, "nonnormal == gw");
    const Check* c = find_check(r, "gw_sets_that_are_normal");
    out.expect(c && c->holds, "no gw set is normal");
    long long gw_normal = 0;
    for (long long i = 0; i < census_size(9, CensusMode::digraph); ++i) {
      const auto s = census_set(9, CensusMode::digraph, i);
      if (oracle::is_gw(s) && is_normal(s)) ++gw_normal;
    }
    out.expect(gw_normal == 0, "direct scan of gw sets");
    hard_checks_hold(r, out);
  });

  criterion(3, "n=25 graph census, nonnormal = syntactic oracle; claim 32 recorded as erratum", 300,
            [](Outcome& out) {
              const auto r = run_census(25, CensusMode::graph);
              long long oracle_count = 0, oracle_normal = 0;
              for (long long i = 0; i < census_size(25, CensusMode::graph); ++i) {
                const auto s = census_set(25, CensusMode::graph, i);
                if (!oracle::gw_pair(s, 5, 5)) continue;
                ++oracle_count;
                if (is_normal(s)) ++oracle_normal;
              }
              out.detail << " nonnormal=" << r.counts.nonnormal << " oracle=" << oracle_count
                         << " claimed=" << nonnorg_prime_power_claimed(5, 2) << " (INFO)";
              out.expect(r.counts.nonnormal == oracle_count, "nonnormal == oracle");
              out.expect(oracle_count == 16, "oracle == 16");
              out.expect(oracle_normal == 0, "every oracle set non-normal");
              const Check* claim = find_check(r, "nonnormal_equals_nonnorg_prime_power_claimed");
              out.expect(claim && claim->flagged_erratum && claim->bound_or_claim == 32,
                         "claim recorded as flagged erratum");
              hard_checks_hold(r, out);
            });

  criterion(4, "n=27 graph census, every normal graph is Small", 600, [](Outcome& out) {
    const auto r = run_census(27, CensusMode::graph);
    long long normal_not_small = 0;
    for (long long i = 0; i < census_size(27, CensusMode::graph); ++i) {
      const auto rec = classify(census_set(27, CensusMode::graph, i));
      if (rec.is_normal && !rec.is_small) ++normal_not_small;
    }
    out.detail << " normal=" << r.counts.normal << " small=" << r.counts.small
               << " normal_not_small=" << normal_not_small;
    out.expect(normal_not_small == 0, "no normal non-small graph");
    out.expect(r.counts.normal == r.counts.small, "normal == small");
    hard_checks_hold(r, out);
  });

  criterion(5, "SDW(35) = 8542 and GW wreath constructions = 2046 without a census", 60, [](Outcome& out) {
    std::set<Mask> dw;
    for (int m : {5, 7}) dw_family(35, m, [&](const ConnectionSet& s) { dw.insert(s.bits()); });
    long long sdw = 0;
    for (Mask b : dw)
      if (!gw_witness(ConnectionSet::from_mask(Modulus(35), b))) ++sdw;
    std::set<Mask> gw;
    for (auto [q, p] : {std::pair{5, 7}, {7, 5}})
      gw_family(35, q, p, [&](const ConnectionSet& s) { gw.insert(s.bits()); });
    out.detail << " sdw=" << sdw << " expected=" << sdw_exact_pq(5, 7)
               << " enumerated_form=" << sdw_enumerated_form_pq(5, 7) << " gw=" << gw.size();
    out.expect(sdw == sdw_exact_pq(5, 7) && sdw == 8542, "sdw == 8542");
    out.expect(static_cast<long long>(gw.size()) == gw_exact_pq(5, 7) && gw.size() == 2046, "gw == 2046");
  });

  criterion(6, "n=18 construction, 2048 = gw_lower_bound_2mod4(18), all non-normal", 60, [](Outcome& out) {
    std::set<Mask> fam;
    gw_family(18, 3, 2, [&](const ConnectionSet& s) { fam.insert(s.bits()); });
    long long normal = 0;
    for (Mask b : fam)
      if (is_normal(ConnectionSet::from_mask(Modulus(18), b))) ++normal;
    out.detail << " distinct=" << fam.size() << " checked=" << fam.size() << " normal=" << normal;
    out.expect(static_cast<long long>(fam.size()) == gw_lower_bound_2mod4(18) && fam.size() == 2048,
               "2048 sets");
    out.expect(normal == 0, "100% non-normal");
  });

  criterion(7, "bound sweeps for n <= 200 and the twin-prime ratio", 30, [](Outcome& out) {
    long long composite = 0, pairs = 0;
    for (int n = 4; n <= 200; ++n) {
      if (is_prime(n)) continue;
      ++composite;
      out.expect(gw_digraph_bound_sum(n) <= ceil_to_int(gw_digraph_bound_closed(n)),
                 "sum <= closed at n=" + std::to_string(n));
    }
    for (int n = 4; n <= 200; ++n)
      for (int m : dw_admissible_divisors(n)) {
        ++pairs;
        out.expect(dw_count_with_witness(n, m) < dw_digraph_bound(n, m),
                   "dw count at (" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
    int p = 0;
    for (int x = 3; x + 2 <= 200; ++x)
      if (is_prime(x) && is_prime(x + 2)) p = x;
    const double ratio = static_cast<double>(gw_sdw_ratio(p, p + 2));
    const double limit = static_cast<double>(gw_sdw_ratio_limit(2));
    const double rel = std::abs(ratio - limit) / limit;
    out.detail << " composites=" << composite << " (n,m) pairs=" << pairs << " twin=(" << p << ","
               << p + 2 << ") ratio=" << ratio << " rel_err=" << rel;
    out.expect(rel < 0.01, "ratio within 1% of 4/17");
  });

  criterion(8, "aut order equals the n! filter; orbit-count bounds for n <= 100", 600, [](Outcome& out) {
    long long compared = 0;
    for (int n : {4, 5, 6}) {
      for (Mask b = 0; b < (Mask{1} << (n - 1)); ++b) {
        const auto s = ConnectionSet::from_mask(Modulus(n), b << 1);
        ++compared;
        out.expect(aut_order(s) == oracle::aut_order(s), "aut order of " + s.to_string());
      }
    }
    std::mt19937_64 rng(2024);
    for (int n : {7, 8}) {
      for (int i = 0; i < 1000; ++i) {
        const auto s = oracle::random_set(n, rng);
        ++compared;
        out.expect(aut_order(s) == oracle::aut_order(s), "aut order of " + s.to_string());
      }
    }
    long long units_checked = 0;
    for (int n = 3; n <= 100; ++n) {
      const Modulus mod(n);
      // Smallest prime of n/2 for even n, of n otherwise.
      const double p = static_cast<double>(smallest_prime_divisor(n % 2 == 0 ? n / 2 : n));
      for (int a : units(mod)) {
        const int l = unit_order(a, mod);
        if (!is_prime(l)) continue;
        ++units_checked;
        const std::vector<UnitAction> gens{UnitAction(a, mod)};
        const double orbits = static_cast<double>(multiplicative_orbits(gens, mod).size());
        bool fixed = false;
        for (int x = 1; x < n && !fixed; ++x) fixed = 1LL * a * x % n == x;
        const std::string where = " at n=" + std::to_string(n) + " a=" + std::to_string(a);
        if (fixed) {
          const double bound = l == 2 ? (p + 1) * n / (2 * p) : l == 3 ? (p + 2) * n / (3 * p) : 7.0 * n / 15;
          out.expect(orbits <= bound, "fixed-point orbit bound" + where);
        } else if (a != n - 1) {
          out.expect(orbits - 1 < n / 3.0, "fixed-point-free orbit bound" + where);
        }
        if (n % 2 == 1 && a != n - 1) {
          const std::vector<UnitAction> with_iota{UnitAction(-1, mod), UnitAction(a, mod)};
          out.expect(static_cast<double>(multiplicative_orbits(with_iota, mod).size()) <= 3.0 * n / 8 + 1.25,
                     "<iota, a> orbit bound" + where);
        }
      }
    }
    out.detail << " sets compared=" << compared << " prime-order units=" << units_checked;
  });

  criterion(9, "graph censuses 9..33: non-small count under the bound, Small share rising", 1800,
            [](Outcome& out) {
              double share9 = 0, share33 = 0;
              for (int n : {9, 15, 21, 25, 27, 33}) {
                const auto r = run_census(n, CensusMode::graph);
                const BigInt non_small = r.total - r.counts.small;
                const BigInt bound = ceil_to_int(small_complement_bound(n));
                out.expect(non_small <= bound, "non-small <= bound at n=" + std::to_string(n));
                const double share = static_cast<double>(r.counts.small) / static_cast<double>(r.total);
                if (n == 9) share9 = share;
                if (n == 33) share33 = share;
                out.detail << " n=" << n << ":" << non_small << "<=" << bound;
                hard_checks_hold(r, out);
              }
              out.detail << " share(9)=" << share9 << " share(33)=" << share33;
              out.expect(share33 > share9, "share at 33 > share at 9");
            });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
