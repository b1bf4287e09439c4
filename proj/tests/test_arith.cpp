#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/arith.hpp"
#include "powercolor/powergraph.hpp"
#include "powercolor/verify.hpp"

#include <numeric>

using namespace powercolor;

namespace {

std::vector<PrimePower> factors_of(u64 n) { return FactoredInt(n).factors(); }

// Independent oracle: count residues coprime to n.
u64 phi_by_counting(u64 n) {
  u64 count = 0;
  for (u64 r = 0; r < n; ++r)
    if (std::gcd(r, n) == 1)
      ++count;
  return count;
}

} // namespace

TEST_CASE("factorize") {
  CHECK(factors_of(1).empty());
  CHECK(factors_of(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factors_of(60) == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factors_of(97) == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  for (u64 n = 1; n <= 5000; ++n) {
    const FactoredInt f(n);
    u64 product = 1;
    u64 last = 1;
    for (const auto &[p, e] : f.factors()) {
      CHECK(p > last);
      CHECK(e >= 1);
      product *= checked_pow(p, e);
      last = p;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == phi_by_counting(12));
  CHECK(euler_phi(12) == 4);
  for (u64 n = 2; n <= 2000; ++n)
    REQUIRE(euler_phi(n) == phi_by_counting(n));
}

TEST_CASE("psi recurrence") {
  CHECK(psi(1) == 1);
  CHECK(psi(60) == 37);
  // Exhaustive clique search on the power graph of Z/12.
  const auto oracle = verify::brute_force_clique_number(build_power_graph(cyclic(12)).undirected);
  CHECK(oracle == 9);
  CHECK(psi(12) == oracle);
}

TEST_CASE("psi closed form") {
  CHECK(psi_closed_form(FactoredInt(1)) == 1);
  CHECK(psi_closed_form(FactoredInt(60)) == 37);
  CHECK(psi_closed_form(FactoredInt(8)) == 8);
  for (u64 p : {2, 3, 5, 7, 11})
    for (u64 k = 1; k <= 5; ++k)
      CHECK(psi_closed_form(FactoredInt(checked_pow(p, k))) == checked_pow(p, k));
}

TEST_CASE("ashrafi_value") {
  CHECK(ashrafi_value(FactoredInt(9)) == 9);
  CHECK(ashrafi_value(FactoredInt(12)) == psi(12));
  CHECK(ashrafi_value(FactoredInt(60)) == 37);
  CHECK_THROWS_AS(ashrafi_value(FactoredInt(1)), std::invalid_argument);
}

TEST_CASE("checked arithmetic") {
  CHECK_THROWS_AS(checked_mul(u64{1} << 33, u64{1} << 33), ArithmeticOverflow);
  CHECK_THROWS_AS(checked_pow(2, 64), ArithmeticOverflow);
  CHECK_THROWS_AS(checked_add(~u64{0}, 1), ArithmeticOverflow);
  CHECK(checked_pow(2, 63) == u64{1} << 63);
  CHECK(psi(u64{1} << 62) == u64{1} << 62);
}

TEST_CASE("divisors") {
  CHECK(divisors(FactoredInt(1)) == std::vector<u64>{1});
  CHECK(divisors(FactoredInt(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  for (u64 n = 1; n <= 500; ++n) {
    std::vector<u64> brute;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0)
        brute.push_back(d);
    REQUIRE(divisors(FactoredInt(n)) == brute);
  }
}
