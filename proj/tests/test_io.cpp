#include <doctest.h>

#include "zpdlab/construct.hpp"
#include "zpdlab/errors.hpp"
#include "zpdlab/io.hpp"

using namespace zpdlab;

TEST_CASE("scalars and matrices round trip") {
  CHECK(scalar_to_json(parse_scalar("-3/4")) == "-3/4");
  CHECK(scalar_from_json(json(5)) == 5);
  CHECK(scalar_from_json(json("7/2")) == parse_scalar("7/2"));
  CHECK_THROWS_AS(scalar_from_json(json(1.5)), ParseError);

  const RatMatrix m{{1, -2}, {0, 3}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[1,2,3]})")), ParseError);
}

TEST_CASE("algebras round trip") {
  for (const auto& a : {upper_triangular_algebra(3), jordan_block_algebra(3), full_matrix_algebra(2)}) {
    const Algebra b = algebra_from_json(json::parse(algebra_to_json(a).dump()));
    CHECK(b.name() == a.name());
    CHECK(b.basis() == a.basis());
    CHECK(b.structure_constants() == a.structure_constants());
  }
  const Algebra s = algebra_from_json(json::parse(R"({"name":"Q","dim":1,"structure_constants":[1]})"));
  CHECK(s.dim() == 1);
  CHECK(s.is_unital());
}

TEST_CASE("invalid algebra JSON") {
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"name":"x"})")), ParseError);
  CHECK_THROWS_AS(algebra_from_json(json::parse("[1,2]")), ParseError);
  // not closed under products
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"basis":[{"rows":2,"cols":2,"entries":[0,1,0,0]},
                                                          {"rows":2,"cols":2,"entries":[0,0,1,0]}]})")),
                  ValidationError);
  // nilpotent, so no unit
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"basis":[{"rows":2,"cols":2,"entries":[0,1,0,0]}],"unital_hint":true})")),
                  ValidationError);
}

TEST_CASE("certificate JSON") {
  const json j = certificate_to_json(decide_zpd(jordan_block_algebra(2)));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["property"] == "zpd");
  CHECK(j["verdict"] == "no");
  CHECK(j["dims"]["ker"] == 2);
  CHECK(j["dims"]["span"] == 1);
  CHECK(j["field_note"] == "rational_certified_for_C");
  CHECK(j.contains("witness"));
  CHECK(j["span_report"]["method"] == "structural");

  const json y = certificate_to_json(decide_zpd(upper_triangular_algebra(2)));
  CHECK(y["verdict"] == "yes");
  CHECK_FALSE(y.contains("witness"));
}

TEST_CASE("sampler config JSON") {
  SamplerConfig c;
  c.seed = 7;
  c.max_samples = 100;
  const SamplerConfig d = sampler_from_json(sampler_to_json(c));
  CHECK(d.seed == 7);
  CHECK(d.max_samples == 100);
  CHECK(d.saturation_rounds == c.saturation_rounds);
  CHECK_THROWS_AS(sampler_from_json(json::parse(R"({"coefficient_height":0})")), ParseError);
}

TEST_CASE("bimodule JSON") {
  const Algebra t2 = upper_triangular_algebra(2);
  const Bimodule m = dual_bimodule(t2, regular_bimodule(t2));
  const Bimodule back = bimodule_from_json(t2, bimodule_to_json(m));
  CHECK(back.left_action() == m.left_action());
  CHECK(back.right_action() == m.right_action());
}

TEST_CASE("constructor expressions") {
  CHECK(construct("jordan:3").name() == "J3");
  CHECK(construct("triangular:4").dim() == 10);
  CHECK(construct("strict:3").dim() == 3);
  CHECK(construct("matrix:2").dim() == 4);
  CHECK(construct("diagonal:3").is_commutative());
  CHECK(construct("companion:-2,0,1").dim() == 2);
  CHECK(construct("mat_over:2;-2,0,1").dim() == 8);
  CHECK(construct("digraph:3;1-1,2-2,3-3,1-3,2-3").dim() == 5);
  CHECK(construct("uhf:1,2,4").dim() == 10);
  CHECK(construct("tensor:(matrix:2,matrix:2)").dim() == 16);
  CHECK(construct("sum:(triangular:2, sum:(matrix:2,jordan:2))").dim() == 9);
  CHECK(construct("unitization:(strict:3)").dim() == 4);
  CHECK(construct("char_product:(triangular:2)").dim() == 3);
}

TEST_CASE("malformed constructor expressions") {
  CHECK_THROWS_AS(construct("bogus:3"), ParseError);
  CHECK_THROWS_AS(construct("jordan"), ParseError);
  CHECK_THROWS_AS(construct("jordan:x"), ParseError);
  CHECK_THROWS_AS(construct("tensor:(matrix:2"), ParseError);
  CHECK_THROWS_AS(construct("tensor:(matrix:2)"), ParseError);
  CHECK_THROWS_AS(construct("companion:5"), ParseError);
  CHECK_THROWS_AS(construct("jordan:1"), ArgumentError);
}
