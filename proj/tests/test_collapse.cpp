#include "doctest.h"
#include "xho/collapse.hpp"
#include "xho/homology.hpp"
#include "xho/subdivision.hpp"

using namespace xho;

TEST_SUITE("collapse") {

TEST_CASE("domination") {
  // in a simplex every vertex is dominated by every other vertex
  Complex d3 = delta(3);
  for (int v = 0; v < 4; ++v) {
    auto d = dominated(d3, v);
    REQUIRE(d.has_value());
    CHECK(*d == (v == 0 ? 1 : 0));  // least dominating vertex
  }
  // the boundary has no dominated vertices
  Complex b2 = boundary(2);
  for (int v = 0; v < 3; ++v) CHECK_FALSE(dominated(b2, v).has_value());
  // horn vertices 1 and 2 are dominated by the apex 0
  Complex h = horn(2, 0);
  CHECK(dominated(h, 1) == 0);
  CHECK(dominated(h, 2) == 0);
  CHECK_THROWS_AS(dominated(h, 9), std::invalid_argument);
}

TEST_CASE("elementary collapse") {
  CHECK(elementary_collapse(delta(1), 1) == point());
  CHECK_THROWS_AS(elementary_collapse(boundary(2), 0), std::invalid_argument);
}

TEST_CASE("replay validates steps") {
  Complex h = horn(3, 0);
  auto [c, seq] = core(h);
  CHECK(c.vertex_count() == 1);
  CHECK(replay(h, seq).vertex_count() == 1);

  CollapseSequence bogus{{{"0", "1"}}};
  CHECK_THROWS_AS(replay(boundary(2), bogus), std::invalid_argument);
}

TEST_CASE("cores") {
  for (int n = 0; n <= 5; ++n)
    CHECK(core(delta(n)).first.vertex_count() == 1);
  Complex b3 = boundary(3);
  auto [cb, seqb] = core(b3);
  CHECK(cb == b3);
  CHECK(seqb.steps.empty());
  CHECK(core(sd2(horn(2, 0)).complex()).first.vertex_count() == 1);
}

TEST_CASE("protected collapse search") {
  SUBCASE("triangle onto an edge") {
    Complex d2 = delta(2);
    auto res = collapses_to(d2, induced_subcomplex(d2, {1, 2}), 1000);
    REQUIRE(res.is_found());
    CHECK(res.value->steps.size() == 1);
    CHECK(res.value->steps[0].first == "0");
  }
  SUBCASE("boundary onto a point is a definitive no") {
    Complex b2 = boundary(2);
    auto res = collapses_to(b2, induced_subcomplex(b2, {0}), 1000);
    CHECK(res.is_no());
  }
  SUBCASE("subdivision onto the image of a vertex") {
    Complex d2 = delta(2);
    Complex s = sd(d2).complex.base;
    auto v0 = s.vertex_by_label("[0]");
    REQUIRE(v0.has_value());
    auto res = collapses_to(s, induced_subcomplex(s, {*v0}), 100000);
    CHECK(res.is_found());
  }
  SUBCASE("collapses survive subdivision") {
    Complex l = delta(2);
    Complex k = induced_subcomplex(l, {1, 2});
    REQUIRE(collapses_to(l, k, 1000).is_found());
    CHECK(collapses_to(sd(l).complex.base, sd(k).complex.base, 100000).is_found());
  }
}

TEST_CASE("collapse sequences transfer to verified retractions") {
  Complex l = sd(delta(2)).complex.base;
  auto [c, seq] = core(l);
  REQUIRE(c.vertex_count() == 1);
  Complex pt = induced_subcomplex(l, {*l.vertex_by_label(c.label(0))});
  Retraction cert = retraction_from_collapse(l, pt, seq);
  CHECK(verify_retraction(cert));
}

TEST_CASE("elementary collapses preserve homology") {
  Complex k = horn(3, 1);
  Complex cur = k;
  auto [c, seq] = core(k);
  for (const auto& step : seq.steps) {
    CollapseSequence one{{step}};
    Complex next = replay(cur, one);
    CHECK(same_homology(homology(next), homology(cur)));
    cur = next;
  }
  CHECK(cur.vertex_count() == 1);
}

TEST_CASE("ndr witnesses") {
  SUBCASE("interval against its endpoints") {
    Complex l = sd2(delta(1)).complex();
    Complex k = sd2(boundary(1)).complex();
    auto w = ndr_witness(l, k, 100000);
    REQUIRE(w.is_found());
    CHECK(verify_ndr(l, k, *w.value));
    // the witness complex contains the neighborhood of k
    CHECK(w.value->l_prime.vertex_count() >= k.vertex_count());
  }
  SUBCASE("no witness for the boundary inside the simplex") {
    auto w = ndr_witness(delta(2), boundary(2), 5000);
    CHECK(w.is_no());
  }
  SUBCASE("tampered witnesses are rejected") {
    Complex l = sd2(delta(1)).complex();
    Complex k = sd2(boundary(1)).complex();
    auto w = ndr_witness(l, k, 100000);
    REQUIRE(w.is_found());
    NdrWitness bad = *w.value;
    bad.collapse.steps.clear();
    CHECK_FALSE(verify_ndr(l, k, bad));
  }
}

}  // TEST_SUITE
