#include "doctest.h"
#include "xho/collapse.hpp"
#include "xho/homology.hpp"
#include "xho/model.hpp"

using namespace xho;

TEST_SUITE("model certificates") {

TEST_CASE("generating cofibrations") {
  Inclusion g0 = gen_cofibration(0);
  CHECK(g0.source.vertex_count() == 0);
  CHECK(g0.target == point());

  Inclusion g1 = gen_cofibration(1);
  CHECK(g1.source.vertex_count() == 2);
  CHECK(isomorphic(g1.target, path_complex(4)).is_found());
  CHECK(g1.map.injective());

  CHECK_THROWS_AS(gen_cofibration(9), BudgetError);
  CHECK_THROWS_AS(gen_trivial_cofibration(2, 7), std::invalid_argument);
}

TEST_CASE("horn generator sources collapse to a point") {
  Inclusion g = gen_trivial_cofibration(2, 0);
  CHECK(core(g.source).first.vertex_count() == 1);
}

TEST_CASE("attach and replay") {
  SUBCASE("tree growth") {
    Complex stage = point();
    Inclusion e = edge_generator();
    VertexMap attaching(e.source, stage, {0});
    Complex next = attach(stage, e, attaching);
    CHECK(isomorphic(next, path_complex(1)).is_found());
  }
  SUBCASE("three-vertex path as a cell structure") {
    CellStructure cs = tree_cell_structure(2);
    CHECK(cs.attachments.size() == 2);
    CHECK(verify_cell_structure(cs));
    auto stages = replay_cell_structure(cs);
    CHECK(isomorphic(stages.back(), path_complex(2)).is_found());
  }
  SUBCASE("cycle structure") {
    CellStructure cs = cycle_cell_structure();
    REQUIRE(verify_cell_structure(cs));
    auto stages = replay_cell_structure(cs);
    CHECK(homology(stages.back()).betti == std::vector<int>{1, 1});
  }
  SUBCASE("spheres from two glued cells") {
    auto s1 = replay_cell_structure(sphere_cell_structure(1)).back();
    CHECK(homology(s1).betti == std::vector<int>{1, 1});
    auto s2 = replay_cell_structure(sphere_cell_structure(2)).back();
    CHECK(homology(s2).betti == std::vector<int>{1, 0, 1});
  }
  SUBCASE("bad attachment labels fail verification") {
    CellStructure cs = cycle_cell_structure();
    cs.attachments[0].attach_labels[0] = "nonsense";
    CHECK_FALSE(verify_cell_structure(cs));
  }
}

TEST_CASE("path retraction") {
  for (int n = 1; n <= 2; ++n) {
    PathRetraction pr = path_retraction(n);
    for (int v = 0; v <= n; ++v) CHECK(pr.r(pr.j(v)) == v);
    CHECK(is_homology_iso(pr.r));
  }
}

TEST_CASE("lifting solver") {
  SUBCASE("identity fibration lifts by the bottom map") {
    Complex b2 = boundary(2);
    Complex d1 = delta(1);
    VertexMap i(d1, b2, {0, 1});
    VertexMap p = VertexMap::identity(d1);
    VertexMap top(d1, d1, {0, 1});
    VertexMap bottom(b2, d1, {0, 1, 1});
    auto res = solve_lifting({i, p, top, bottom}, 1000);
    REQUIRE(res.is_found());
    CHECK(res.value->assignment() == bottom.assignment());
  }
  SUBCASE("connectivity obstruction") {
    Complex a = Complex::from_facets(2, {});  // boundary of the interval
    Complex b = delta(1);
    Complex x = Complex::from_facets(2, {});  // two disjoint points
    Complex y = point();
    LiftingProblem lp{VertexMap(a, b, {0, 1}), VertexMap::constant(x, y, 0),
                      VertexMap(a, x, {0, 1}), VertexMap::constant(b, y, 0)};
    CHECK(solve_lifting(lp, 1000).is_no());
  }
  SUBCASE("commutation is checked") {
    Complex a = point();
    Complex b = delta(1);
    LiftingProblem lp{VertexMap(a, b, {0}), VertexMap::identity(b),
                      VertexMap(a, b, {1}), VertexMap::identity(b)};
    CHECK_THROWS_AS(lp.validate(), std::invalid_argument);
  }
}

TEST_CASE("trivial fibration checks") {
  SUBCASE("non-surjective maps fail the n = 0 generator") {
    VertexMap p(point(), delta(1), {0});
    FibrationReport rep = is_trivial_fibration_up_to(p, 0, 100, 1000);
    CHECK(rep.verdict == Status::No);
  }
  SUBCASE("collapse of the interval passes n <= 1") {
    VertexMap p = VertexMap::constant(delta(1), point(), 0);
    FibrationReport rep = is_trivial_fibration_up_to(p, 1, 200, 10000);
    CHECK(rep.verdict == Status::Found);
    CHECK(rep.squares_checked > 0);
  }
}

}  // TEST_SUITE
