#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powercolor/group_spec.hpp"

using namespace powercolor;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_group_spec(text);
  } catch (const SpecError &e) {
    return e.line();
  }
  FAIL("expected SpecError");
  return 0;
}

} // namespace

TEST_CASE("cayley spec") {
  const FiniteGroup g = parse_group_spec(R"({"kind":"cayley","identity":0,"table":[[0,1],[1,0]]})");
  CHECK(g.order() == 2);
  CHECK(g.element_order(1) == 2);
}

TEST_CASE("perm spec") {
  const FiniteGroup g =
      parse_group_spec(R"({"kind":"perm","degree":4,"generators":[[1,2,0,3],[1,0,3,2]]})");
  CHECK(g.order() == 12);
}

TEST_CASE("named spec") {
  CHECK(parse_group_spec(R"({"kind":"named","name":"cyclic","params":[12]})").order() == 12);
  CHECK(parse_group_spec(R"({"kind":"named","name":"dihedral","params":[5]})").order() == 10);
  CHECK(parse_group_spec(R"({"kind":"named","name":"symmetric","params":[4]})").order() == 24);
  CHECK(parse_group_spec(R"({"kind":"named","name":"quaternion8","params":[]})").order() == 8);
  CHECK(parse_group_spec(R"({"kind":"named","name":"product","params":[
      {"kind":"named","name":"cyclic","params":[6]},
      {"kind":"named","name":"cyclic","params":[6]}]})")
            .order() == 36);
}

TEST_CASE("named_group from command-line parameters") {
  CHECK(named_group("cyclic", {"7"}).order() == 7);
  CHECK(named_group("product", {"cyclic:6", "dihedral:3"}).order() == 36);
  CHECK(named_group("quaternion8", {}).order() == 8);
  CHECK_THROWS_AS(named_group("cyclic", {"x"}), InputError);
  CHECK_THROWS_AS(named_group("cyclic", {}), InputError);
  CHECK_THROWS_AS(named_group("mystery", {"3"}), InputError);
  CHECK_THROWS_AS(named_group("symmetric", {"9"}), CapExceeded);
}

TEST_CASE("errors are anchored to lines") {
  CHECK(error_line("{\n  \"kind\": \"cayley\",\n  \"identity\": 0,\n  \"table\": [[0,1],[1,0]],\n  \"extra\": 1\n}") == 5);
  CHECK(error_line("{\n  \"kind\": \"cayley\",\n  \"identity\": 0\n  \"table\": []\n}") == 4);
  CHECK(error_line("{\n  \"kind\": \"nope\"\n}") == 2);
  CHECK(error_line("{\n\"kind\":\"named\",\n\"name\":\"cyclic\",\n\"params\":[\"a\"]\n}") == 4);
  CHECK(error_line("[1,2]") == 1);
}

TEST_CASE("axiom errors surface through the spec reader") {
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"cayley","identity":0,"table":[[0,1],[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"perm","degree":3,"generators":[[0,0,1]]})"), InputError);
}

TEST_CASE("graph json") {
  const BitGraph g = parse_graph_json(R"({"vertex_count":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]})");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.adjacent(4, 0));
  CHECK_THROWS_AS(parse_graph_json(R"({"vertex_count":2,"edges":[[0,5]]})"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges":[]})"), InputError);
}
