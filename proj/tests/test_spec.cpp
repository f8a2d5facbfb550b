#include "doctest.h"
#include "rwlattice/spec.hpp"

#include "rwlattice/errors.hpp"

using namespace rwl;

TEST_CASE("spec strings parse and render canonically") {
  CHECK(parse_spec("mesh:mu=3,n=2") == TopologySpec::mesh(3, 2));
  CHECK(parse_spec("hypercube:n=12") == TopologySpec::hypercube(12));
  CHECK(parse_spec("symplectic:M=2,n=5") == TopologySpec::symplectic(2, 5));
  // Parameter order is free; the canonical form is fixed.
  CHECK(parse_spec("mesh:n=2,mu=3") == TopologySpec::mesh(3, 2));
  CHECK(format_spec(TopologySpec::mesh(3, 2)) == "mesh:mu=3,n=2");
  CHECK(format_spec(TopologySpec::hypercube(12)) == "hypercube:n=12");
  CHECK(format_spec(TopologySpec::symplectic(2, 5)) == "symplectic:M=2,n=5");
}

TEST_CASE("spec string round trip is the identity") {
  for (const char* text : {"mesh:mu=3,n=2", "mesh:mu=9,n=7", "hypercube:n=1",
                           "hypercube:n=20", "symplectic:M=1,n=2",
                           "symplectic:M=5,n=4"}) {
    const auto spec = parse_spec(text);
    CHECK(format_spec(spec) == text);
    CHECK(parse_spec(format_spec(spec)) == spec);
  }
}

TEST_CASE("parse errors name the offending token") {
  CHECK_THROWS_WITH_AS(parse_spec("torus:n=3"), doctest::Contains("torus"),
                       DomainError);
  CHECK_THROWS_WITH_AS(parse_spec("mesh:mu=3"), doctest::Contains("n"),
                       DomainError);
  CHECK_THROWS_WITH_AS(parse_spec("mesh:mu=3,n=2,q=1"), doctest::Contains("q"),
                       DomainError);
  CHECK_THROWS_WITH_AS(parse_spec("mesh:mu=x,n=2"), doctest::Contains("mu=x"),
                       DomainError);
  CHECK_THROWS_WITH_AS(parse_spec("hypercube:n=0"), doctest::Contains("n=0"),
                       DomainError);
  CHECK_THROWS_AS(parse_spec("mesh:mu=1,n=2"), DomainError);
  CHECK_THROWS_AS(parse_spec("symplectic:M=0,n=2"), DomainError);
  CHECK_THROWS_AS(parse_spec("mesh:mu=3,mu=4,n=2"), DomainError);
}

TEST_CASE("spec invariants") {
  CHECK(TopologySpec::hypercube(7).mu == 2);
  const auto s = TopologySpec::symplectic(3, 4);
  CHECK(s.mu == 7);  // mu = 2M+1, odd and >= 3
  CHECK(s.mu % 2 == 1);
}
