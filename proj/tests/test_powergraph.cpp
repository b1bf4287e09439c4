#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/arith.hpp"
#include "powercolor/powergraph.hpp"
#include "powercolor/verify.hpp"

#include <algorithm>

using namespace powercolor;

TEST_CASE("reaches matches membership in the cyclic subgroup") {
  for (const FiniteGroup &g : {cyclic(12), dihedral(4), symmetric(4), quaternion8()}) {
    const PowerGraph p = build_power_graph(g);
    for (Element x = 0; x < g.order(); ++x) {
      const auto sub = cyclic_subgroup(g, x);
      for (Element y = 0; y < g.order(); ++y) {
        const bool member = std::find(sub.begin(), sub.end(), y) != sub.end();
        REQUIRE(p.reaches.holds(x, y) == member);
        if (x != y)
          REQUIRE(p.undirected.adjacent(x, y) == (member || p.reaches.holds(y, x)));
      }
    }
  }
}

TEST_CASE("cyclic power graphs") {
  // Z/p is complete.
  CHECK(build_power_graph(cyclic(7)).undirected.edge_count() == 21);
  // Z/6: the element of order 2 misses both elements of order 3.
  const PowerGraph p = build_power_graph(cyclic(6));
  CHECK_FALSE(p.undirected.adjacent(2, 3));
  CHECK_FALSE(p.undirected.adjacent(4, 3));
  CHECK(p.undirected.adjacent(2, 4));
  CHECK(p.undirected.edge_count() == 13);
  CHECK(verify::brute_force_clique_number(p.undirected) == 5);
}

TEST_CASE("preorder") {
  CHECK(verify_preorder(build_power_graph(symmetric(4))).ok);
  CHECK(verify_preorder(build_power_graph(dihedral(6))).ok);

  BitRelation r(3);
  for (Vertex v = 0; v < 3; ++v)
    r.set(v, v);
  r.set(0, 1);
  r.set(1, 2);
  const PreorderCheck broken = verify_preorder(r);
  CHECK_FALSE(broken.ok);
  CHECK(broken.witness == std::vector<Vertex>{0, 1, 2});

  BitRelation irreflexive(2);
  irreflexive.set(0, 0);
  const PreorderCheck no_loop = verify_preorder(irreflexive);
  CHECK_FALSE(no_loop.ok);
  CHECK(no_loop.witness == std::vector<Vertex>{1});
}

TEST_CASE("omega") {
  CHECK(omega(cyclic(1)).value == 1);
  CHECK(omega(cyclic(60)).value == 37);
  CHECK(omega(cyclic(60)).witness == 1);
  CHECK(omega(symmetric(3)).value == 3);
  CHECK(omega(quaternion8()).value == 4);
  // S4 has elements of order 4 (Psi=4) and 3 (Psi=3).
  CHECK(omega(symmetric(4)).value == 4);
}

TEST_CASE("omega agrees with brute-force clique search on small groups") {
  for (const FiniteGroup &g : {cyclic(12), cyclic(18), dihedral(5), dihedral(6), symmetric(3), quaternion8(),
                               direct_product(cyclic(2), cyclic(6))}) {
    const PowerGraph p = build_power_graph(g);
    CHECK_MESSAGE(omega(g).value == verify::brute_force_clique_number(p.undirected), g.name());
  }
}

TEST_CASE("max_clique_via_psi_witness is a clique of size omega") {
  for (const FiniteGroup &g : {cyclic(60), cyclic(1), symmetric(5), dihedral(15), quaternion8(),
                               direct_product(cyclic(6), cyclic(6))}) {
    const CliqueWitness w = max_clique_via_psi_witness(g);
    const PowerGraph p = build_power_graph(g);
    CHECK(w.size() == omega(g).value);
    CHECK(p.undirected.is_clique(w.vertices));
    CHECK(std::is_sorted(w.vertices.begin(), w.vertices.end()));
  }
}

TEST_CASE("export") {
  const PowerGraph p = build_power_graph(cyclic(3));
  const std::string dot = export_graph(p, ExportFormat::Dot);
  CHECK(dot.find("graph \"cyclic(3)\" {") == 0);
  CHECK(dot.find("  0 -- 1;") != std::string::npos);
  CHECK(dot.find("  1 -- 2;") != std::string::npos);
  const std::string json = export_graph(p, ExportFormat::Json);
  CHECK(json.find("\"vertex_count\": 3") != std::string::npos);
  CHECK(json.find("\"arcs\"") != std::string::npos);
  CHECK(parse_export_format("dot") == ExportFormat::Dot);
  CHECK(parse_export_format("json") == ExportFormat::Json);
  CHECK_THROWS_AS(parse_export_format("svg"), InputError);
}

TEST_CASE("export is deterministic") {
  for (const FiniteGroup &g : {symmetric(4), dihedral(7), quaternion8()}) {
    for (auto f : {ExportFormat::Dot, ExportFormat::Json}) {
      const std::string a = export_graph(build_power_graph(g), f);
      const std::string b = export_graph(build_power_graph(g), f);
      REQUIRE(a == b);
    }
  }
}
