#include "doctest.h"
#include "xho/graph.hpp"
#include "xho/homology.hpp"
#include "xho/subdivision.hpp"

using namespace xho;

TEST_SUITE("subdivision") {

TEST_CASE("posets validate") {
  Poset p(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));  // transitive closure
  CHECK_FALSE(p.leq(2, 0));
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("face poset of an edge") {
  FacePoset fp = face_poset(delta(1));
  CHECK(fp.elements.size() == 3);
  int strict = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b && fp.poset.leq(a, b)) ++strict;
  CHECK(strict == 2);
}

TEST_CASE("order complexes") {
  // a chain of three elements gives a triangle
  Poset chain(3, {{0, 1}, {1, 2}});
  CHECK(order_complex(chain).base == delta(2));
  // an antichain gives isolated points
  Poset anti(3, {});
  CHECK(order_complex(anti).base.facets() == std::vector<VSet>{{0}, {1}, {2}});
}

TEST_CASE("sd of the triangle") {
  SdResult s = sd(delta(2));
  CHECK(s.complex.base.vertex_count() == 7);
  CHECK(s.complex.base.facets().size() == 6);
  CHECK(s.complex.base.faces_of_dim(1).size() == 12);
  CHECK(s.complex.base.dim() == 2);
}

TEST_CASE("sd of paths doubles") {
  for (int n = 1; n <= 3; ++n)
    CHECK(isomorphic(sd(path_complex(n)).complex.base, path_complex(2 * n)).is_found());
  CHECK(sd(point()).complex.base == point());
}

TEST_CASE("sd preserves size dimension and connectivity") {
  for (const Complex& k : {delta(2), boundary(3), horn(2, 0),
                           coproduct(delta(1), point())}) {
    SdResult s = sd(k);
    CHECK(static_cast<std::size_t>(s.complex.base.vertex_count()) == k.face_count());
    CHECK(s.complex.base.dim() == k.dim());
    CHECK(components(s.complex.base) == components(k));
    CHECK(is_flag(s.complex.base));
  }
}

TEST_CASE("last vertex map on the edge") {
  Complex d1 = delta(1);
  SdResult s = sd(d1);
  VertexMap lambda = last_vertex_map(s, ordered_by_ids(d1));
  CHECK(lambda(s.vertex_of({0})) == 0);
  CHECK(lambda(s.vertex_of({1})) == 1);
  CHECK(lambda(s.vertex_of({0, 1})) == 1);
}

TEST_CASE("last vertex maps are homology isomorphisms") {
  for (const Complex& k : {boundary(3), clique_complex(cycle_reflexive(4))})
    CHECK(is_homology_iso(last_vertex_map(k)));
}

TEST_CASE("staircase inclusion splits the double last vertex map") {
  for (int n = 0; n <= 2; ++n) {
    SdInclusionResult si = sd_inclusion(n);
    VertexMap lambda2 = last_vertex_map2(si.subdivided, delta(n));
    VertexMap round_trip = VertexMap::compose(lambda2, si.inclusion);
    for (int v = 0; v <= n; ++v) CHECK(round_trip(v) == v);
  }
  // the n = 1 staircase hits the chains {{0}} and {{0},{0,1}}
  SdInclusionResult si = sd_inclusion(1);
  CHECK(si.subdivided.complex().label(si.inclusion(0)) == "[[0]]");
  CHECK(si.subdivided.complex().label(si.inclusion(1)) == "[[0],[0,1]]");
}

TEST_CASE("sd2 of the interval is the 4-path") {
  CHECK(isomorphic(sd2(delta(1)).complex(), path_complex(4)).is_found());
}

}  // TEST_SUITE
