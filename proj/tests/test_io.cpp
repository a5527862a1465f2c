#include <doctest.h>

#include "dposet/io.hpp"
#include "dposet/oracle.hpp"
#include "fixtures.hpp"

using namespace dposet;

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto [complex, filter] = random_filtered_complex(seed, 6, 2, 0.5);
    std::string text = serialize_instance(complex, filter);
    Instance inst = parse_instance(text);
    REQUIRE(inst.filter.has_value());
    CHECK(inst.complex.size() == complex.size());
    for (const Cell& c : complex.cells()) {
      CHECK(inst.complex.cell(c.id).dim == c.dim);
      CHECK(inst.complex.cell(c.id).label == c.label);
      CHECK(inst.filter->value(c.id) == filter.value(c.id));  // bit-exact
    }
    CHECK(inst.complex.incidence_pairs() == complex.incidence_pairs());
    CHECK(serialize_instance(inst.complex, *inst.filter) == text);
  }
}

TEST_CASE("parse accepts a separate filter file and the perturb flag") {
  const char* complex_json = R"({
    "cells": [{"id":0,"dim":0,"label":"v"}, {"id":1,"dim":0,"label":"w"},
              {"id":2,"dim":1,"label":"e"}],
    "incidence": [[0,2],[1,2]]
  })";
  Instance bare = parse_instance(complex_json);
  CHECK(!bare.filter.has_value());

  Instance with_filter = parse_instance(complex_json, R"({"values":[0,1,2]})");
  REQUIRE(with_filter.filter.has_value());
  CHECK(with_filter.filter->value(2) == 2.0);

  CHECK_THROWS_AS(parse_instance(complex_json, R"({"values":[0,0,2]})"),
                  std::invalid_argument);
  Instance perturbed =
      parse_instance(complex_json, R"({"values":[0,0,2]})", true);
  REQUIRE(perturbed.filter.has_value());
  CHECK(validate_filter(perturbed.complex, *perturbed.filter).empty());
}

TEST_CASE("parse reports the first violation with labels") {
  const char* bad_complex = R"({
    "cells": [{"id":0,"dim":0,"label":"v","value":0},
              {"id":1,"dim":1,"label":"e","value":1},
              {"id":2,"dim":2,"label":"t","value":2}],
    "incidence": [[0,1],[1,2]]
  })";
  CHECK_THROWS_WITH_AS(parse_instance(bad_complex),
                       "invalid complex: composition of incidences from v to t "
                       "is odd (1 paths)",
                       std::invalid_argument);

  CHECK_THROWS_AS(parse_instance("{ not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(R"({"cells":[{"id":1,"dim":0}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_instance(
          R"({"cells":[{"id":0,"dim":0,"value":0},{"id":1,"dim":0}]})"),
      std::invalid_argument);
}

TEST_CASE("dot output lists nodes by birth value and hasse edges only") {
  auto inst = fixtures::circle();
  DepthPoset poset = build_depth_poset(inst.complex, inst.filter);
  std::string dot = emit_dot(poset, inst.complex);
  CHECK(dot.find("\"(g,H)\" [label=\"(g,H) p=0\"]") != std::string::npos);
  // (g,H) is the unique maximum: no outgoing edge.
  CHECK(dot.find("\"(g,H)\" ->") == std::string::npos);
  std::size_t edges = 0, at = 0;
  while ((at = dot.find("->", at)) != std::string::npos) {
    ++edges;
    at += 2;
  }
  CHECK(edges == poset.hasse.size());

  std::string empty_dot = emit_dot(DepthPoset{}, LefschetzComplex{});
  CHECK(empty_dot.find("->") == std::string::npos);
}

TEST_CASE("csv diagram carries points, then hasse arcs") {
  auto inst = fixtures::circle();
  DepthPoset poset = build_depth_poset(inst.complex, inst.filter);
  std::string csv = emit_diagram_csv(poset);

  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 1 + 7 + 1 + poset.hasse.size());
  CHECK(lines[0] == "birth_value,death_value,dim,pair_id");
  CHECK(lines[1] == "2,15,0,0");  // (g,H)
  CHECK(lines[8] == "pair_id_from,pair_id_to");

  // Every arc respects the nesting of the endpoint intervals.
  for (std::size_t k = 9; k < lines.size(); ++k) {
    std::istringstream row(lines[k]);
    int from, to;
    char comma;
    row >> from >> comma >> to;
    CHECK(poset.elements[to].birth_value < poset.elements[from].birth_value);
    CHECK(poset.elements[from].death_value < poset.elements[to].death_value);
  }

  CHECK(emit_diagram_csv(DepthPoset{}) == "birth_value,death_value,dim,pair_id\n");
}

TEST_CASE("svg diagram draws one circle per pair and one path per arc") {
  auto inst = fixtures::circle();
  DepthPoset poset = build_depth_poset(inst.complex, inst.filter);
  std::string svg = emit_diagram_svg(poset, inst.complex);
  std::size_t circles = 0, paths = 0, at = 0;
  while ((at = svg.find("<circle", at)) != std::string::npos) {
    ++circles;
    ++at;
  }
  at = 0;
  while ((at = svg.find("<path", at)) != std::string::npos) {
    ++paths;
    ++at;
  }
  CHECK(circles == poset.elements.size());
  CHECK(paths == poset.hasse.size());
}

TEST_CASE("emitters are deterministic") {
  auto inst = fixtures::circle();
  DepthPoset p1 = build_depth_poset(inst.complex, inst.filter);
  DepthPoset p2 = build_depth_poset(inst.complex, inst.filter);
  CHECK(emit_dot(p1, inst.complex) == emit_dot(p2, inst.complex));
  CHECK(emit_closure_json(p1, inst.complex) == emit_closure_json(p2, inst.complex));
  CHECK(emit_diagram_csv(p1) == emit_diagram_csv(p2));
  CHECK(emit_diagram_svg(p1, inst.complex) == emit_diagram_svg(p2, inst.complex));
}

TEST_CASE("matrix dumps annotate positions with labels and values") {
  auto inst = fixtures::two_independent_pairs();
  OrderedBoundaryMatrix m = build_matrix(inst.complex, inst.filter);
  std::string ascii = dump_matrix_ascii(m);
  CHECK(ascii.find("# 0: u1 dim 0 value 0") != std::string::npos);
  CHECK(ascii.find('1') != std::string::npos);
  std::string sparse = dump_matrix_sparse(m);
  CHECK(sparse.find("u1 < e1") != std::string::npos);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -3.25, 0.1, 1e-30, 12345.6789}) {
    std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}
