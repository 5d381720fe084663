#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macloops/json_io.hpp"
#include "test_util.hpp"

using namespace macloops;
using namespace testutil;

TEST_CASE("complex parsing") {
  SimplicialComplex k = parse_complex_json(R"({"m":2,"facets":[[1],[2]]})");
  CHECK(k == two_points());
  CHECK(parse_complex_json(R"({"m":3,"facets":[[1,2],[3]]})") == edge_plus_point());
  CHECK(parse_complex_json(R"({"m":0,"facets":[]})") == SimplicialComplex{});
  // order and duplicates are immaterial on input
  CHECK(parse_complex_json(R"({"m":2,"facets":[[2,1],[1],[1,2]]})") ==
        complex_of(2, {{1, 2}}));

  CHECK_THROWS_AS(parse_complex_json("{"), Error);
  CHECK_THROWS_AS(parse_complex_json(R"({"m":2})"), Error);
  CHECK_THROWS_AS(parse_complex_json(R"({"m":2,"facets":[[1],[2]],"x":1})"), Error);
  CHECK_THROWS_AS(parse_complex_json(R"({"m":2,"facets":[[1.5]]})"), Error);
  CHECK_THROWS_AS(parse_complex_json(R"({"m":2,"facets":"no"})"), Error);

  try {
    parse_complex_json(R"({"m":2,"facets":[[1],[3]]})");
    FAIL("expected VertexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VertexOutOfRange);
  }
  try {
    parse_complex_json(R"({"m":3,"facets":[[1],[2]]})");
    FAIL("expected GhostVertex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GhostVertex);
  }
  CHECK(parse_complex_json(R"({"m":3,"facets":[[1],[2]]})", GhostPolicy::Allow)
            .has_ghost_vertices());
}

TEST_CASE("complex serialization is canonical") {
  CHECK(complex_to_json(two_points()) == R"({"m":2,"facets":[[1],[2]]})");
  CHECK(complex_to_json(SimplicialComplex{}) == R"({"m":0,"facets":[]})");
  CHECK(complex_to_json(four_cycle()) == R"({"m":4,"facets":[[1,2],[1,4],[2,3],[3,4]]})");

  // round trip through text is the identity on canonical complexes
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialComplex K = random_complex(rng, 5);
    CHECK(parse_complex_json(complex_to_json(K)) == K);
  }
}

TEST_CASE("rational function round trip") {
  RationalFunction f = parse_rational_function_json(R"({"num":[1,0,0,1],"den":[1,0,-1]})");
  CHECK(f == RationalFunction(Polynomial::from_ints({1, 0, 0, 1}),
                              Polynomial::from_ints({1, 0, -1})));
  // serialization shows the reduced form
  CHECK(rational_function_to_json(f) == R"({"num":[1,-1,1],"den":[1,-1]})");
  CHECK(parse_rational_function_json(rational_function_to_json(f)) == f);

  CHECK_THROWS_AS(parse_rational_function_json(R"({"num":[1]})"), Error);
  CHECK_THROWS_AS(parse_rational_function_json(R"({"num":[1],"den":[0,1]})"), Error);
}

TEST_CASE("certificate serialization") {
  JoinDecomposition d = join_decompose(four_cycle());
  CHECK(decomposition_to_json(d) == R"({"simplex":[],"boundaries":[[1,3],[2,4]]})");

  WedgeWitness w = wedge_retract_witness(edge_plus_point());
  CHECK(witness_to_json(w) ==
        R"({"I":[1,3],"J":[2,3],"k":1,"t":1,"r":1,"spheres":[3,3],"bound":{"lhs":5,"rhs":19}})");

  std::vector<mpz_class> coeffs{1, 0, -2};
  CHECK(coefficients_to_json(coeffs) == "[1,0,-2]");
}
