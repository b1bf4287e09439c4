#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/oracle.hpp"
#include "powercolor/powergraph.hpp"
#include "powercolor/verify.hpp"

#include <random>

using namespace powercolor;

namespace {

BitGraph random_graph(std::mt19937_64 &rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  BitGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng))
        g.add_edge(u, v);
  return g;
}

bool proper(const BitGraph &g, const std::vector<std::uint32_t> &a) {
  for (const auto &[u, v] : g.edges())
    if (a[u] == a[v])
      return false;
  return true;
}

} // namespace

TEST_CASE("known graphs") {
  CHECK(max_clique_exact(BitGraph(0)).size() == 0);
  CHECK(max_clique_exact(BitGraph(3)).size() == 1);
  CHECK(max_clique_exact(BitGraph::complete(6)).size() == 6);
  CHECK(max_clique_exact(BitGraph::cycle(5)).size() == 2);
  CHECK(chromatic_number_exact(BitGraph::cycle(5)) == 3);
  CHECK(chromatic_number_exact(BitGraph::cycle(6)) == 2);
  CHECK(chromatic_number_exact(BitGraph::complete(5)) == 5);
  CHECK(chromatic_number_exact(BitGraph(4)) == 1);
  CHECK(chromatic_number_exact(BitGraph(0)) == 0);
  // The complement of C7 needs 4 colors and has clique number 3.
  CHECK(max_clique_exact(BitGraph::cycle(7).complement()).size() == 3);
  CHECK(chromatic_number_exact(BitGraph::cycle(7).complement()) == 4);
}

TEST_CASE("oracles agree with brute force on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const BitGraph g = random_graph(rng, n, 0.2 + 0.6 * ((trial * 37) % 100) / 100.0);
    const CliqueWitness w = max_clique_exact(g);
    REQUIRE(g.is_clique(w.vertices));
    REQUIRE(w.size() == verify::brute_force_clique_number(g));
    const ExactColoring c = exact_coloring(g);
    REQUIRE(proper(g, c.assignment));
    REQUIRE(c.colors == verify::brute_force_chromatic_number(g));
    const ExactColoring d = dsatur_coloring(g);
    REQUIRE(proper(g, d.assignment));
    REQUIRE(d.colors >= c.colors);
    REQUIRE(c.colors >= w.size());
  }
}

TEST_CASE("power graph oracles") {
  const PowerGraph p = build_power_graph(symmetric(4));
  CHECK(max_clique_exact(p.undirected).size() == omega(symmetric(4)).value);
  CHECK(chromatic_number_exact(p.undirected) == omega(symmetric(4)).value);
}

TEST_CASE("caps and budgets") {
  CHECK_THROWS_AS(max_clique_exact(BitGraph(kMaxCliqueOracleVertices + 1)), CapExceeded);
  CHECK_THROWS_AS(chromatic_number_exact(BitGraph(kMaxChromaticOracleVertices + 1)), CapExceeded);
  std::mt19937_64 rng(3);
  const BitGraph g = random_graph(rng, 60, 0.5);
  CHECK_THROWS_AS(max_clique_exact(g, 10), CapExceeded);
  CHECK_THROWS_AS(chromatic_number_exact(g, 10), CapExceeded);
}
