#include "doctest.h"
#include "xho/complex.hpp"
#include "xho/graph.hpp"

using namespace xho;

TEST_SUITE("complex core") {

TEST_CASE("closure of a full simplex") {
  Complex d2 = delta(2);
  CHECK(d2.vertex_count() == 3);
  CHECK(d2.face_count() == 7);  // 3 vertices + 3 edges + 1 triangle
  CHECK(d2.dim() == 2);
  CHECK(d2.has_face({0, 1, 2}));
}

TEST_CASE("boundary drops the top facet") {
  Complex b2 = boundary(2);
  CHECK(b2.dim() == 1);
  CHECK(b2.face_count() == 6);
  CHECK_FALSE(b2.has_face({0, 1, 2}));
  CHECK(boundary(0).vertex_count() == 0);
}

TEST_CASE("point complex") {
  Complex p = point();
  CHECK(p.vertex_count() == 1);
  CHECK(p.facets() == std::vector<VSet>{{0}});
}

TEST_CASE("horns") {
  Complex h = horn(2, 0);
  CHECK(h.facets() == std::vector<VSet>{{0, 1}, {0, 2}});
  // horn(1, 0) degenerates to the single vertex 0
  CHECK(horn(1, 0).vertex_count() == 1);
  CHECK(horn(1, 0).label(0) == "0");
  CHECK_THROWS_AS(horn(2, 5), std::invalid_argument);
}

TEST_CASE("path complexes") {
  Complex p3 = path_complex(3);
  CHECK(p3.facets() == std::vector<VSet>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(path_complex(0) == point());
}

TEST_CASE("generators are closed downward and pruned to facets") {
  Complex k = Complex::from_facets(4, {{0, 1, 2}, {0, 1}, {2, 3}});
  CHECK(k.facets() == std::vector<VSet>{{0, 1, 2}, {2, 3}});
  CHECK(k.has_face({1, 2}));
  CHECK_FALSE(k.has_face({1, 3}));
  CHECK_THROWS_AS(Complex::from_facets(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("star deletion neighborhood") {
  Complex b2 = boundary(2);
  CHECK(star(b2, {0}).facets() == std::vector<VSet>{{0, 1}, {0, 2}});

  Complex del = deletion(delta(2), {0});
  CHECK(del.vertex_count() == 2);
  CHECK(del.facets() == std::vector<VSet>{{0, 1}});
  CHECK(del.label(0) == "1");
  CHECK(del.label(1) == "2");

  // the neighborhood of a vertex inside a simplex is the whole simplex
  Complex nb = neighborhood(delta(2), induced_subcomplex(delta(2), {0}));
  CHECK(nb == delta(2));

  CHECK_THROWS_AS(star(b2, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("products") {
  CHECK(isomorphic(product(delta(1), delta(1)), delta(3)).is_found());
  CHECK(isomorphic(product(delta(2), point()), delta(2)).is_found());
  CHECK(isomorphic(product(path_complex(1), path_complex(1)), delta(3)).is_found());
  CHECK(product(delta(1), Complex()).vertex_count() == 0);
}

TEST_CASE("coproduct") {
  Complex c = coproduct(delta(1), point());
  CHECK(c.vertex_count() == 3);
  CHECK(c.facets() == std::vector<VSet>{{0, 1}, {2}});
}

TEST_CASE("exponentials satisfy the unit laws") {
  Complex b2 = boundary(2);
  CHECK(isomorphic(exponential(b2, point()).complex, b2).is_found());
  CHECK(isomorphic(exponential(point(), b2).complex, point()).is_found());
  // maps from the empty complex form a single point
  CHECK(exponential(b2, Complex()).complex == point());
  CHECK_THROWS_AS(exponential(delta(5), delta(5), 10), BudgetError);
}

TEST_CASE("exponential vertices are the simplicial maps") {
  // edges of L^K are exactly contiguity-compatible pairs; the two
  // constant maps delta^1 -> boundary(2) onto adjacent vertices span a face
  auto e = exponential(boundary(2), delta(1));
  CHECK(e.vertex_maps.size() == all_simplicial_maps(delta(1), boundary(2)).size());
}

TEST_CASE("pushouts") {
  Complex pt = point();
  Complex i1 = path_complex(1);

  SUBCASE("wedge of two edges is the 2-path") {
    VertexMap i(pt, i1, {0});
    VertexMap u(pt, i1, {1});
    PushoutResult po = pushout_mono(i, u);
    CHECK(isomorphic(po.complex, path_complex(2)).is_found());
    CHECK(po.from_right.injective());
  }

  SUBCASE("gluing both endpoints of I_4 gives the 4-cycle") {
    Complex i4 = path_complex(4);
    Complex two = Complex::from_facets(2, {});
    VertexMap i(two, i4, {0, 4});
    VertexMap u(two, pt, {0, 0});
    PushoutResult po = pushout_mono(i, u);
    CHECK(isomorphic(po.complex, clique_complex(cycle_reflexive(4))).is_found());
  }

  SUBCASE("pushout of identity along identity") {
    Complex a = boundary(2);
    VertexMap id = VertexMap::identity(a);
    PushoutResult po = pushout_mono(id, id);
    CHECK(po.complex == a);
  }

  SUBCASE("non-injective i is rejected") {
    Complex two = Complex::from_facets(2, {});
    VertexMap i(two, pt, {0, 0});
    VertexMap u(two, two, {0, 1});
    CHECK_THROWS_AS(pushout_mono(i, u), std::invalid_argument);
  }
}

TEST_CASE("induced subcomplexes and containment") {
  CHECK(induced_subcomplex(delta(2), {0, 1}) == delta(1));
  Complex b2 = boundary(2);
  CHECK(induced_subcomplex(b2, {0, 1, 2}) == b2);
  CHECK(is_subcomplex(horn(2, 0), b2));
  CHECK_FALSE(is_subcomplex(delta(2), b2));
  CHECK_THROWS_AS(induced_subcomplex(delta(2), {7}), std::invalid_argument);
}

TEST_CASE("isomorphism search") {
  Complex d2 = delta(2);
  Complex relab = d2.relabeled({"x", "y", "z"});
  auto res = isomorphic(d2, relab);
  REQUIRE(res.is_found());

  CHECK(isomorphic(d2, boundary(2)).is_no());
  CHECK(isomorphic(boundary(3), boundary(3)).is_found());
  // a starved budget reports unknown rather than guessing
  CHECK(isomorphic(boundary(3), boundary(3), 1).is_unknown());
}

TEST_CASE("flag recognition") {
  CHECK_FALSE(is_flag(boundary(2)));
  CHECK(is_flag(delta(3)));
  CHECK(is_flag(path_complex(4)));
  CHECK(is_flag(Complex()));
}

TEST_CASE("simplicial map plumbing") {
  Complex d1 = delta(1);
  Complex b2 = boundary(2);
  CHECK_THROWS_AS(VertexMap(delta(2), b2, std::vector<int>{0, 1, 2}), std::invalid_argument);
  VertexMap f(d1, b2, {0, 1});
  VertexMap g(b2, b2, {1, 2, 0});
  VertexMap gf = VertexMap::compose(g, f);
  CHECK(gf.assignment() == std::vector<int>{1, 2});
  CHECK(VertexMap::identity(b2).injective());
}

}  // TEST_SUITE
