#include <random>

#include "doctest.h"
#include "xho/homology.hpp"
#include "xho/graph.hpp"
#include "xho/subdivision.hpp"
#include "xho/verify.hpp"

using namespace xho;

namespace {

IMat from_rows(const std::vector<std::vector<long long>>& rows) {
  IMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// the 6-vertex projective plane: 2-neighborly, every edge in two triangles
Complex projective_plane() {
  return Complex::from_facets(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("smith normal form basics") {
  SUBCASE("identity") {
    SnfResult s = smith_normal_form(IMat::identity(3));
    CHECK(s.rank == 3);
    CHECK(s.diagonal == std::vector<Int>{1, 1, 1});
  }
  SUBCASE("hand-eliminated 2x2") {
    SnfResult s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.diagonal == std::vector<Int>{2, 4});
  }
  SUBCASE("zero matrix") {
    SnfResult s = smith_normal_form(IMat(2, 3));
    CHECK(s.rank == 0);
    CHECK(s.diagonal.empty());
  }
}

TEST_CASE("smith transforms are exact: U M V = D, V Vinv = I") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    SnfResult s = smith_normal_form(m);
    CHECK(matmul(matmul(s.row_ops, m), s.col_ops) == s.d);
    CHECK(matmul(s.col_ops, s.col_ops_inv) == IMat::identity(c));
    for (std::size_t i = 1; i < s.diagonal.size(); ++i)
      CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
  }
}

TEST_CASE("boundary matrices") {
  ChainData cd = chain_complex(delta(1));
  REQUIRE(cd.dim() == 1);
  CHECK(cd.boundary[1].at(0, 0) == -1);
  CHECK(cd.boundary[1].at(1, 0) == 1);

  // boundary of boundary vanishes
  ChainData big = chain_complex(sd2(delta(3)).complex());
  for (int n = 2; n <= big.dim(); ++n) {
    IMat square = matmul(big.boundary[n - 1], big.boundary[n]);
    for (const Int& x : square.a) CHECK(x == 0);
  }

  SnfResult s = smith_normal_form(chain_complex(boundary(2)).boundary[1], false);
  CHECK(s.rank == 2);
}

TEST_CASE("homology of standard spaces") {
  CHECK(homology(boundary(3)).betti == std::vector<int>{1, 0, 1});
  for (int n = 1; n <= 4; ++n) {
    HomologyResult h = homology(delta(n));
    CHECK(h.betti[0] == 1);
    for (std::size_t d = 1; d < h.betti.size(); ++d) CHECK(h.betti[d] == 0);
  }
  CHECK(homology(clique_complex(cycle_reflexive(4))).betti == std::vector<int>{1, 1});
  CHECK(homology(Complex()).betti.empty());
}

TEST_CASE("torsion is visible over the integers") {
  Complex rp2 = projective_plane();
  // sanity: closed surface data
  CHECK(rp2.faces_of_dim(1).size() == 15);
  CHECK(rp2.facets().size() == 10);
  HomologyResult h = homology(rp2);
  CHECK(h.betti == std::vector<int>{1, 0, 0});
  CHECK(h.torsion[1] == std::vector<long long>{2});
  CHECK(h.torsion[0].empty());
  CHECK(h.torsion[2].empty());
}

TEST_CASE("components agree with betti zero") {
  for (const Complex& k : verify::homology_corpus())
    CHECK(components(k) == homology(k).betti[0]);
}

TEST_CASE("induced maps") {
  SUBCASE("identity is an iso") {
    CHECK(is_homology_iso(VertexMap::identity(boundary(3))));
  }
  SUBCASE("collapsing a sphere to a point loses H_2") {
    VertexMap c = VertexMap::constant(boundary(3), point(), 0);
    HomIsoReport rep = homology_iso_report(c);
    CHECK_FALSE(rep.iso);
    CHECK(rep.degrees_checked == 3);
  }
  SUBCASE("horn retraction is an iso") {
    Complex h = horn(2, 0);
    VertexMap r = VertexMap::constant(h, point(), 0);
    CHECK(is_homology_iso(r));
  }
  SUBCASE("torsion mismatches are caught") {
    VertexMap c = VertexMap::constant(projective_plane(), point(), 0);
    CHECK_FALSE(is_homology_iso(c));
  }
}

TEST_CASE("chain maps are functorial") {
  Complex b2 = boundary(2);
  VertexMap f(delta(1), b2, {0, 1});
  VertexMap g(b2, b2, {1, 2, 0});
  auto fg = induced_chain_maps(VertexMap::compose(g, f));
  auto mf = induced_chain_maps(f);
  auto mg = induced_chain_maps(g);
  for (std::size_t n = 0; n < fg.size(); ++n)
    CHECK(fg[n] == matmul(mg[n], mf[n]));
}

}  // TEST_SUITE
