#include "doctest.h"

#include "rldual/algebra_io.hpp"
#include "rldual/dual_quadruple.hpp"
#include "rldual/fixtures.hpp"
#include "rldual/quadruple.hpp"

using namespace rldual;

TEST_CASE("algebra records round-trip byte-stably") {
  for (const Algebra& a : builtin_fixtures()) {
    std::string text = print_algebra(a);
    Algebra back = parse_algebra(text);
    CHECK(print_algebra(back) == text);
    CHECK(back.size == a.size);
    CHECK(back.leq == a.leq);
    CHECK(back.mul == a.mul);
    CHECK(back.one == a.one);
    CHECK(back.zero == a.zero);
  }
  // GMTL-mode record has no zero line
  Algebra hoop = strip_bottom(godel_chain(3));
  std::string text = print_algebra(hoop);
  CHECK(text.find("zero") == std::string::npos);
  CHECK(print_algebra(parse_algebra(text)) == text);
}

TEST_CASE("parser rejects malformed records") {
  CHECK_THROWS_AS(parse_algebra("algebra x\nmode blah\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra x\nmode bounded\nsize 0\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("nonsense"), ParseError);
  // truncated table
  CHECK_THROWS_AS(parse_algebra("algebra x\nmode bounded\nsize 2\nleq\n11\n01\nmul\n0 0\n"),
                  ParseError);
  // leq row too wide
  CHECK_THROWS_AS(
      parse_algebra("algebra x\nmode bounded\nsize 2\nleq\n111\n01\nmul\n0 0\n0 1\none 1\nzero 0\nend\n"),
      ParseError);
}

TEST_CASE("quadruple text format round-trips") {
  for (const char* name : {"nm4", "g3", "g3xg3"}) {
    AlgebraicQuadruple q = extract_quadruple(*builtin_fixture(name));
    std::string text = print_quadruple(q);
    AlgebraicQuadruple back = parse_quadruple(text);
    CHECK(print_quadruple(back) == text);
    CHECK(back.ext_join == q.ext_join);
    CHECK(back.delta.map == q.delta.map);
    CHECK(validate_quadruple(back).passed());
  }
}

TEST_CASE("dual quadruple json round-trips") {
  for (const char* name : {"nm4", "g3", "g3xg3"}) {
    DualQuadruple dq = extract_dual_quadruple(*builtin_fixture(name));
    std::string text = dual_quadruple_to_json(dq);
    DualQuadruple back = dual_quadruple_from_json(text);
    CHECK(dual_quadruple_to_json(back) == text);
    CHECK(validate_dual_quadruple(back).passed());
  }
  CHECK_THROWS_AS(dual_quadruple_from_json("{not json"), ParseError);
  CHECK_THROWS_AS(dual_quadruple_from_json("{\"stone_points\": 1}"), ParseError);
}
