#include <random>
#include <set>

#include "circ/connection_set.hpp"
#include "circ/error.hpp"
#include "circ/formulas.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace circ;

TEST_CASE("parse and print") {
  const auto s = ConnectionSet::parse("9:3,6");
  CHECK(s.order() == 9);
  CHECK(s.members() == std::vector<int>{3, 6});
  CHECK(s.to_string() == "9:3,6");
  CHECK(ConnectionSet::parse("9:").size() == 0);
  CHECK(ConnectionSet::parse("35:5,10,15,20,25,30,7").to_string() == "35:5,7,10,15,20,25,30");
  for (const char* bad : {"9", "9:0", "9:9", "9:3,3", "9:3,", "x:1", "2:1", "65:1", "9:-1", "9:1;2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ConnectionSet::parse(bad), ParseError);
  }
  CHECK_THROWS_AS(ConnectionSet(Modulus(9), std::vector<int>{0}), InvalidArgument);
  CHECK_THROWS_AS(ConnectionSet::from_mask(Modulus(9), 1), InvalidArgument);
}

TEST_CASE("parse round trip on random sets") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const int n = 3 + i % 62;
    const auto s = oracle::random_set(n, rng);
    CHECK(ConnectionSet::parse(s.to_string()) == s);
  }
}

TEST_CASE("set operations") {
  const auto s = ConnectionSet::parse("10:1,2,7");
  CHECK(s.negate().to_string() == "10:3,8,9");
  CHECK(s.complement().to_string() == "10:3,4,5,6,8,9");
  CHECK(s.scale(3).to_string() == "10:1,3,6");
  CHECK_FALSE(s.is_graph());
  CHECK(ConnectionSet::parse("10:1,5,9").is_graph());
  CHECK(s.arc(4, 6));
  CHECK_FALSE(s.arc(6, 4));
  CHECK_THROWS_AS(s.scale(5), InvalidArgument);
}

TEST_CASE("wreath construction") {
  // Z_3 outer {1,2}, Z_5 inner {}: x mod 3 != 0 on Z_15.
  const auto w = wreath(ConnectionSet::parse("3:1,2"), ConnectionSet::empty(Modulus(5)));
  CHECK(w.to_string() == "15:1,2,4,5,7,8,10,11,13,14");
  const auto p = gw_witness_prime(w);
  REQUIRE(p);
  CHECK(*p == PrimeGwWitness{5, 3});
  const auto w2 = wreath(ConnectionSet::parse("3:1"), ConnectionSet::parse("3:2"));
  CHECK(w2.to_string() == "9:1,4,6,7");
  CHECK(gw_witness(w2).has_value());
}

TEST_CASE("witness examples") {
  const auto s9 = ConnectionSet::parse("9:3,6");
  CHECK(gw_witness(s9) == GwWitness{3, 3});
  CHECK(gw_witness_prime(s9) == PrimeGwWitness{3, 3});

  const auto s35 = ConnectionSet::parse("35:5,10,15,20,25,30,7");
  CHECK(dw_witness(s35) == DwWitness{7});
  CHECK_FALSE(gw_witness(s35));
  CHECK(is_sdw(s35));

  // Empty and complete sets are GW whenever n is composite.
  CHECK(gw_witness(ConnectionSet::empty(Modulus(12))));
  CHECK(gw_witness(ConnectionSet::complete(Modulus(12))));
  CHECK_FALSE(gw_witness(ConnectionSet::empty(Modulus(13))));
  CHECK(dw_admissible_divisors(60) == std::vector<int>{4, 5, 12, 15, 20, 60});
  CHECK(dw_admissible_divisors(9) == std::vector<int>{9});
  CHECK(dw_admissible_divisors(7) == std::vector<int>{7});
}

TEST_CASE("sixty with m = 4") {
  // H = <15>; S meets H in H \ {0} and each other H-coset g + H in one of
  // the allowed patterns.
  std::vector<int> m;
  for (int x : {15, 30, 45}) m.push_back(x);
  for (int x : {4}) m.push_back(x);                     // {g}
  for (int x : {8 + 15, 8 + 30, 8 + 45}) m.push_back(x);  // coset \ {g}, g = 8
  for (int x : {12, 27, 42, 57}) m.push_back(x);          // whole coset
  const ConnectionSet s(Modulus(60), m);
  CHECK(satisfies_dw(s, 4));
  CHECK(oracle::dw_at(s, 4));
  CHECK(dw_witness(s) == DwWitness{4});
}

TEST_CASE("gw and dw agree with element-wise oracles, exhaustive n <= 14") {
  for (int n = 3; n <= 14; ++n) {
    for (Mask b = 0; b < (Mask{1} << (n - 1)); ++b) {
      const auto s = ConnectionSet::from_mask(Modulus(n), b << 1);
      CHECK(gw_witness(s).has_value() == oracle::is_gw(s));
      CHECK(dw_witness(s).has_value() == oracle::is_dw(s));
    }
  }
}

TEST_CASE("gw and dw agree with oracles on random sets") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const int n = 15 + i % 50;
    const auto s = oracle::random_set(n, rng);
    CAPTURE(s.to_string());
    CHECK(gw_witness(s).has_value() == oracle::is_gw(s));
    CHECK(dw_witness(s).has_value() == oracle::is_dw(s));
    CHECK(gw_witness_prime(s).has_value() == gw_witness(s).has_value());
  }
}

TEST_CASE("witness returned is the lexicographically first") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const int n = 12 + i % 30;
    const auto s = oracle::random_set(n, rng);
    const auto w = gw_witness(s);
    if (!w) continue;
    CHECK(oracle::gw_pair(s, w->k, w->h));
    for (int k = 2; k <= w->k; ++k)
      for (int h = k; h < n; h += k) {
        if (n % h || (k == w->k && h >= w->h)) continue;
        CHECK_FALSE(oracle::gw_pair(s, k, h));
      }
  }
}

TEST_CASE("class membership is invariant under units and complement") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    const int n = 6 + i % 40;
    const auto s = oracle::random_set(n, rng);
    const bool gw = gw_witness(s).has_value();
    const bool dw = dw_witness(s).has_value();
    CHECK(gw_witness(s.complement()).has_value() == gw);
    CHECK(dw_witness(s.complement()).has_value() == dw);
    for (int a : units(Modulus(n))) {
      CHECK(gw_witness(s.scale(a)).has_value() == gw);
      CHECK(dw_witness(s.scale(a)).has_value() == dw);
    }
  }
}

TEST_CASE("gw family sizes and membership") {
  for (auto [n, q, p, expect] : {std::tuple{9, 3, 3, 16}, {15, 5, 3, 64}, {18, 3, 2, 2048},
                                 {18, 2, 3, 2048}, {12, 2, 2, 256}}) {
    CAPTURE(n);
    std::set<Mask> seen;
    gw_family(n, q, p, [&](const ConnectionSet& s) {
      seen.insert(s.bits());
      CHECK(oracle::gw_pair(s, q, n / p));
    });
    CHECK(seen.size() == static_cast<std::size_t>(expect));
  }
  CHECK_THROWS_AS(gw_family(15, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(gw_family(15, 4, 3), InvalidArgument);
}

TEST_CASE("dw family sizes and membership") {
  for (auto [n, m, expect] : {std::tuple{35, 7, 512}, {35, 5, 8192}, {20, 5, 128}, {12, 4, 32}}) {
    CAPTURE(n);
    CAPTURE(m);
    std::set<Mask> seen;
    dw_family(n, m, [&](const ConnectionSet& s) {
      seen.insert(s.bits());
      CHECK(oracle::dw_at(s, m));
    });
    CHECK(seen.size() == static_cast<std::size_t>(expect));
  }
  CHECK_THROWS_AS(dw_family(12, 6), InvalidArgument);
  CHECK_THROWS_AS(dw_family(12, 3), InvalidArgument);
}

TEST_CASE("dw family is exactly the sets meeting the conditions") {
  for (auto [n, m] : {std::pair{12, 4}, {15, 5}, {20, 4}}) {
    long long direct = 0;
    for (Mask b = 0; b < (Mask{1} << (n - 1)); ++b) {
      direct += satisfies_dw(ConnectionSet::from_mask(Modulus(n), b << 1), m);
    }
    CHECK(direct == static_cast<long long>(dw_family(n, m).size()));
  }
}

TEST_CASE("strictly deleted wreath sets of order pq from the two families") {
  for (auto [p, q] : {std::pair{5, 7}, {5, 11}}) {
    const int n = p * q;
    std::set<Mask> dw;
    for (int m : {p, q}) dw_family(n, m, [&](const ConnectionSet& s) { dw.insert(s.bits()); });
    long long sdw = 0;
    for (Mask b : dw) sdw += !oracle::is_gw(ConnectionSet::from_mask(Modulus(n), b));
    CAPTURE(n);
    CHECK(BigInt(sdw) == sdw_enumerated_form_pq(p, q));
    CHECK(BigInt(sdw) != sdw_exact_pq(p, q));
  }
}
