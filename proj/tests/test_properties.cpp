#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/arith.hpp"
#include "powercolor/powergraph.hpp"
#include "powercolor/verify.hpp"

#include <numeric>

using namespace powercolor;

TEST_CASE("phi is multiplicative on coprime pairs") {
  for (u64 a = 1; a <= 120; ++a)
    for (u64 b = 1; b <= 120; ++b)
      if (std::gcd(a, b) == 1)
        REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
}

TEST_CASE("psi is monotone under divisibility") {
  for (u64 n = 1; n <= 3000; ++n)
    for (u64 d : divisors(FactoredInt(n)))
      REQUIRE(psi(d) <= psi(n));
}

TEST_CASE("three ways to compute psi agree") {
  for (u64 n = 2; n <= 20000; ++n) {
    const FactoredInt f(n);
    const u64 r = psi(f);
    REQUIRE(r == psi_closed_form(f));
    REQUIRE(r == ashrafi_value(f));
  }
}

TEST_CASE("psi bounds") {
  for (u64 n = 1; n <= 5000; ++n) {
    REQUIRE(psi(n) <= n);
    REQUIRE(psi(n) >= euler_phi(n));
  }
}

TEST_CASE("omega of cyclic groups is psi") {
  for (u64 n = 1; n <= 48; ++n) {
    const PowerGraph p = build_power_graph(cyclic(n));
    REQUIRE(omega(cyclic(n)).value == psi(n));
    REQUIRE(verify_preorder(p).ok);
    if (n <= 20)
      REQUIRE(verify::brute_force_clique_number(p.undirected) == psi(n));
  }
}

TEST_CASE("power relation is a preorder on the corpus") {
  for (const FiniteGroup &g : verify::theorem_corpus())
    REQUIRE_MESSAGE(verify_preorder(build_power_graph(g)).ok, g.name());
}
