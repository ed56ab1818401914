#include "doctest.h"
#include "xho/graph.hpp"
#include "xho/collapse.hpp"
#include "xho/homotopy.hpp"

using namespace xho;

TEST_SUITE("homotopy") {

TEST_CASE("contiguity basics") {
  Complex i1 = path_complex(1);
  Complex d2 = delta(2);
  Complex b2 = boundary(2);

  VertexMap f(i1, d2, {0, 1});
  CHECK(is_contiguous(f, f));  // reflexive
  VertexMap g(i1, d2, {0, 2});
  CHECK(is_contiguous(f, g));  // {0,1,2} is a face of the simplex
  CHECK(is_contiguous(g, f));  // symmetric

  VertexMap fb(i1, b2, {0, 1});
  VertexMap gb(i1, b2, {0, 2});
  CHECK_FALSE(is_contiguous(fb, gb));  // {0,1,2} is not in the boundary

  VertexMap other(i1, b2, {1, 2});
  CHECK_THROWS_AS(is_contiguous(f, fb), std::invalid_argument);
}

TEST_CASE("one-homotopy matches contiguity on samples") {
  Complex i1 = path_complex(1);
  Complex b2 = boundary(2);
  VertexMap f(i1, b2, {0, 1});
  VertexMap g(i1, b2, {0, 2});
  VertexMap h(i1, b2, {0, 1});
  CHECK(is_one_homotopic(f, h));
  CHECK_FALSE(is_one_homotopic(f, g));
  CHECK(is_one_homotopic(VertexMap::identity(b2), VertexMap::identity(b2)));
}

TEST_CASE("chains validate") {
  Complex i1 = path_complex(1);
  Complex d2 = delta(2);
  ContiguityChain c(i1, d2, {{0, 1}, {0, 2}, {2, 2}});
  CHECK(c.length() == 2);
  CHECK_THROWS_AS(ContiguityChain(i1, d2, {}), std::invalid_argument);
  Complex b2 = boundary(2);
  CHECK_THROWS_AS(ContiguityChain(i1, b2, {{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("x-homotopy search") {
  SUBCASE("constant maps into an edge") {
    Complex k = boundary(2);
    Complex d1 = delta(1);
    auto res = x_homotopic(VertexMap::constant(k, d1, 0), VertexMap::constant(k, d1, 1), 1000);
    REQUIRE(res.is_found());
    CHECK(res.value->length() >= 1);
  }
  SUBCASE("two components give a definitive no") {
    Complex two = Complex::from_facets(2, {});
    Complex k = point();
    auto res = x_homotopic(VertexMap::constant(k, two, 0), VertexMap::constant(k, two, 1), 1000);
    CHECK(res.is_no());
  }
  SUBCASE("budget exhaustion reports unknown") {
    Complex k = point();
    Complex hexagon = clique_complex(cycle_reflexive(6));
    auto res = x_homotopic(VertexMap::constant(k, hexagon, 0),
                           VertexMap::constant(k, hexagon, 3), 2);
    CHECK(res.is_unknown());
  }
  SUBCASE("rigid maps on the sphere boundary are their own class") {
    Complex k = boundary(3);
    auto res = x_homotopic(VertexMap::identity(k), VertexMap(k, k, {1, 0, 2, 3}), 1000);
    CHECK(res.is_no());
  }
}

TEST_CASE("chain algebra") {
  Complex k = boundary(2);
  Complex d1 = delta(1);
  auto res = x_homotopic(VertexMap::constant(k, d1, 0), VertexMap::constant(k, d1, 1), 1000);
  REQUIRE(res.is_found());
  const ContiguityChain& c = *res.value;

  ContiguityChain back = chain_reverse(c);
  ContiguityChain loop = chain_concat(c, back);
  CHECK(loop.maps().front() == loop.maps().back());

  // composing with identity chains gives the chain of composites
  ContiguityChain idchain(d1, d1, {{0, 1}});
  ContiguityChain comp = chain_compose(c, idchain);
  CHECK(comp.length() == c.length());
  CHECK(comp.maps().front() == c.maps().front());

  CHECK_THROWS_AS(chain_concat(c, c), std::invalid_argument);
}

TEST_CASE("composition realizes the min-clamp formula") {
  // two chains of different lengths; the composite must stay a valid chain
  Complex k = boundary(2);
  Complex d1 = delta(1);
  auto ab = x_homotopic(VertexMap::constant(k, d1, 0), VertexMap::constant(k, d1, 1), 1000);
  REQUIRE(ab.is_found());
  ContiguityChain second(d1, delta(2), {{0, 1}, {0, 2}});
  ContiguityChain comp = chain_compose(*ab.value, second);
  CHECK(comp.length() == std::max(ab.value->length(), second.length()));
  CHECK(comp.source() == k);
  CHECK(comp.target() == delta(2));
}

TEST_CASE("retraction certificates") {
  SUBCASE("explicit horn collapse") {
    Complex h = horn(2, 0);
    Complex pt = induced_subcomplex(h, {0});
    auto seq = collapses_to(h, pt, 1000);
    REQUIRE(seq.is_found());
    Retraction cert = retraction_from_collapse(h, pt, *seq.value);
    CHECK(verify_retraction(cert));
    // tampering with the retraction must be caught
    Retraction bad = cert;
    bad.retraction = VertexMap(h, pt, {0, 0, 0});
    bad.inclusion = VertexMap(pt, h, {1});
    CHECK_FALSE(verify_retraction(bad));
  }
  SUBCASE("simplices retract to a point") {
    for (int n = 1; n <= 4; ++n) {
      Complex d = delta(n);
      auto res = find_deformation_retract(d, induced_subcomplex(d, {0}), 100000);
      REQUIRE(res.is_found());
      CHECK(verify_retraction(*res.value));
    }
  }
  SUBCASE("the circle does not retract to a point") {
    Complex b2 = boundary(2);
    auto res = find_deformation_retract(b2, induced_subcomplex(b2, {0}), 100000);
    CHECK(res.is_no());
  }
}

}  // TEST_SUITE
