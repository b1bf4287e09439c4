#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/perfectness.hpp"
#include "powercolor/verify.hpp"

#include <random>

using namespace powercolor;

TEST_CASE("odd cycles") {
  const BitGraph c5 = BitGraph::cycle(5);
  const auto w = find_odd_hole(c5, 5);
  REQUIRE(w);
  CHECK(w->kind == HoleKind::Hole);
  CHECK(w->cycle.size() == 5);
  CHECK(is_odd_hole(c5, w->cycle));

  CHECK_FALSE(find_odd_hole(BitGraph::cycle(6), 6));
  CHECK_FALSE(find_odd_hole(BitGraph::complete(6), 6));
  CHECK(find_odd_hole(BitGraph::cycle(9), 9));
  CHECK_FALSE(find_odd_hole(BitGraph::cycle(9), 7));
  CHECK_THROWS_AS(find_odd_hole(c5, 4), InputError);
}

TEST_CASE("odd antiholes") {
  const BitGraph anti7 = BitGraph::cycle(7).complement();
  // The complement of C7 has no induced C5 or C7.
  CHECK_FALSE(find_odd_hole(anti7, 7));
  const auto w = find_odd_antihole(anti7, 7);
  REQUIRE(w);
  CHECK(w->kind == HoleKind::Antihole);
  CHECK(is_odd_hole(anti7.complement(), w->cycle));

  const BergeReport r = certify_berge(anti7);
  CHECK(r.verdict == BergeVerdict::WitnessFound);
  CHECK(r.hole_search_bound == 7);
}

TEST_CASE("is_odd_hole") {
  const BitGraph c5 = BitGraph::cycle(5);
  const std::vector<Vertex> ok{0, 1, 2, 3, 4};
  const std::vector<Vertex> wrong_order{0, 2, 1, 3, 4};
  const std::vector<Vertex> short_cycle{0, 1, 2};
  CHECK(is_odd_hole(c5, ok));
  CHECK_FALSE(is_odd_hole(c5, wrong_order));
  CHECK_FALSE(is_odd_hole(BitGraph::complete(3), short_cycle));
  BitGraph chorded = BitGraph::cycle(5);
  chorded.add_edge(0, 2);
  CHECK_FALSE(is_odd_hole(chorded, ok));
}

TEST_CASE("certify_berge") {
  const BergeReport perfect = certify_berge(BitGraph::cycle(8));
  CHECK(perfect.verdict == BergeVerdict::CertifiedUpToBound);
  CHECK(perfect.hole_search_bound == 8);
  CHECK_FALSE(perfect.witness);

  CHECK(certify_berge(BitGraph(2)).hole_search_bound == 5);
  CHECK(certify_berge(BitGraph(40)).hole_search_bound == kCappedCycleBound);
  CHECK(certify_berge(BitGraph(40), 7).hole_search_bound == 7);
  CHECK_THROWS_AS(certify_berge(BitGraph(4), 3), InputError);
}

TEST_CASE("hole search agrees with brute force") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 1 + trial % 10;
    std::bernoulli_distribution edge(0.25 + 0.5 * (trial % 7) / 6.0);
    BitGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (edge(rng))
          g.add_edge(u, v);
    const bool expected = verify::brute_force_has_odd_hole(g);
    const auto found = find_odd_hole(g, std::max<std::size_t>(n, 5));
    REQUIRE(found.has_value() == expected);
    if (found)
      REQUIRE(is_odd_hole(g, found->cycle));
  }
}
