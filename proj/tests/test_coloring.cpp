#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/coloring.hpp"
#include "powercolor/oracle.hpp"
#include "powercolor/verify.hpp"

using namespace powercolor;

namespace {

DivisorVector dv(std::vector<u64> e) { return DivisorVector{std::move(e)}; }

} // namespace

TEST_CASE("divisor vectors") {
  const FactoredInt n(12);
  CHECK(vector_of_element(n, 0) == dv({0, 0}));
  CHECK(vector_of_element(n, 1) == dv({2, 1}));
  CHECK(vector_of_element(n, 4) == dv({0, 1}));
  CHECK(vector_of_element(n, 3) == dv({2, 0}));
  CHECK(vector_of_order(n, 6) == dv({1, 1}));
  CHECK(subgroup_order(n, dv({1, 1})) == 6);
  CHECK(dv({0, 1}).below(dv({1, 1})));
  CHECK_FALSE(dv({2, 0}).comparable(dv({0, 1})));
  CHECK(dv({2, 1}).to_string() == "(2,1)");
}

TEST_CASE("wall_target") {
  const FactoredInt n(60); // 2^2 3 5
  // Wall of prime 2 is j_0 = 2; (2,0,1) -> (1,1,1).
  CHECK(wall_target(n, 0, dv({2, 0, 1})) == dv({1, 1, 1}));
  CHECK(wall_target(n, 0, dv({2, 1, 0})) == dv({1, 1, 1}));
  CHECK(wall_target(n, 2, dv({0, 0, 1})) == dv({1, 0, 0}));
  CHECK_THROWS_AS(wall_target(n, 0, dv({1, 0, 0})), InputError);
  CHECK_THROWS_AS(wall_target(n, 0, dv({2, 1, 1})), InputError);
}

TEST_CASE("wall_target lands in the index-p subgroup and is incomparable") {
  for (u64 m = 2; m <= 720; ++m) {
    const FactoredInt n(m);
    for (u64 d : divisors(n)) {
      const DivisorVector v = vector_of_order(n, d);
      if (d == m)
        continue;
      for (std::size_t i = 0; i < n.prime_count(); ++i) {
        if (v.exponents[i] != n.factors()[i].exponent)
          continue;
        const DivisorVector t = wall_target(n, i, v);
        REQUIRE(t.exponents[i] == n.factors()[i].exponent - 1);
        REQUIRE_FALSE(t.comparable(v));
      }
    }
  }
}

TEST_CASE("extend_prime_step") {
  const Coloring c6 = stable_color_cyclic(6);
  CHECK(c6.palette_size == 5);
  const Coloring c12 = extend_prime_step(c6, FactoredInt(12), 0);
  CHECK(c12.palette_size == 9);
  CHECK(c12.assignment.size() == 12);
  CHECK(verify_cyclic_stability(c12).ok);

  const Coloring c2 = stable_color_cyclic(2);
  const Coloring c6b = extend_prime_step(c2, FactoredInt(6), 1);
  CHECK(c6b.palette_size - c2.palette_size == 3);
  // Input colors are preserved on the multiples.
  for (u64 y = 0; y < 2; ++y)
    CHECK(c6b.assignment[3 * y] == c2.assignment[y]);

  CHECK_THROWS_AS(extend_prime_step(c6, FactoredInt(12), 1), InputError);
  CHECK_THROWS_AS(extend_prime_step(c6, FactoredInt(18), 0), InputError);
}

TEST_CASE("stable cyclic colorings use exactly Psi(n) colors") {
  for (u64 n = 1; n <= 1000; ++n) {
    const Coloring c = stable_color_cyclic(n);
    REQUIRE(c.palette_size == psi(n));
    REQUIRE(count_colors(c, [&] {
              std::vector<Element> all(n);
              for (Element x = 0; x < n; ++x)
                all[x] = x;
              return all;
            }()) == psi(n));
    if (n <= 240) {
      const auto check = verify_cyclic_stability(c);
      REQUIRE_MESSAGE(check.ok, "n=" << n << " d=" << check.subgroup_order);
      REQUIRE_FALSE(find_conflict(build_power_graph(cyclic(n)).undirected, c.assignment));
    }
  }
}

TEST_CASE("extend_stable from a subgroup") {
  const Coloring c10 = stable_color_cyclic(10);
  const Coloring c60 = extend_stable(c10, 60);
  CHECK(c60.palette_size == 37);
  CHECK(verify_cyclic_stability(c60).ok);
  for (u64 y = 0; y < 10; ++y)
    CHECK(c60.assignment[6 * y] == c10.assignment[y]);
  CHECK_THROWS_AS(extend_stable(c10, 25), InputError);
}

TEST_CASE("weak stability violation is reported") {
  const FiniteGroup g = cyclic(6);
  Coloring distinct;
  distinct.assignment = {0, 1, 2, 3, 4, 5};
  distinct.palette_size = 6;
  const WeakStabilityCheck check = verify_weak_stability(g, distinct);
  CHECK_FALSE(check.ok);
  CHECK(check.expected == 5);
  CHECK(check.actual == 6);
  CHECK(g.element_order(check.witness) == 6);
}

TEST_CASE("color_group") {
  for (const FiniteGroup &g : verify::theorem_corpus()) {
    const GroupColoring gc = color_group(g);
    const PowerGraph p = build_power_graph(g);
    INFO(g.name());
    REQUIRE(gc.coloring.palette_size == omega(g).value);
    REQUIRE_FALSE(find_conflict(p.undirected, gc.coloring.assignment));
    REQUIRE(verify_weak_stability(g, gc.coloring).ok);
    REQUIRE(chi(g) == gc.mu);
  }
}

TEST_CASE("color_group beyond the corpus") {
  for (const FiniteGroup &g : {symmetric(5), dihedral(30), direct_product(cyclic(4), cyclic(12)),
                               direct_product(quaternion8(), cyclic(3))}) {
    const GroupColoring gc = color_group(g);
    INFO(g.name());
    CHECK(gc.coloring.palette_size == omega(g).value);
    CHECK_FALSE(find_conflict(build_power_graph(g).undirected, gc.coloring.assignment));
    CHECK(verify_weak_stability(g, gc.coloring).ok);
  }
}

TEST_CASE("exact chromatic number matches omega on small power graphs") {
  for (const FiniteGroup &g : {cyclic(30), dihedral(6), symmetric(4), quaternion8(),
                               direct_product(cyclic(2), cyclic(6))}) {
    CHECK(chromatic_number_exact(build_power_graph(g).undirected) == omega(g).value);
  }
}

TEST_CASE("non-cyclic intersections are logged and resolved") {
  const FiniteGroup g = direct_product(cyclic(6), cyclic(6));
  const GroupColoring gc = color_group(g);
  CHECK_FALSE(gc.fallbacks.empty());
  CHECK_FALSE(gc.oracle_fallback);
  for (const FallbackEvent &f : gc.fallbacks) {
    CHECK(f.resolution == "backtracking");
    CHECK(f.intersection_size == 4);
  }
  CHECK(gc.coloring.palette_size == 5);
  CHECK(verify_weak_stability(g, gc.coloring).ok);

  // Cyclic groups never meet one.
  CHECK(color_group(cyclic(48)).fallbacks.empty());
}
