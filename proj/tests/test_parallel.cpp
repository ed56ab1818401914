#include "doctest.h"
#include "xho/complex.hpp"
#include "xho/graph.hpp"
#include "xho/homotopy.hpp"
#include "xho/parallel.hpp"

using namespace xho;

namespace {

struct SerialGuard {
  bool old;
  explicit SerialGuard(bool on) : old(par::enabled()) { par::set_enabled(on); }
  ~SerialGuard() { par::set_enabled(old); }
};

}  // namespace

TEST_SUITE("parallel kernels match the serial reference") {

TEST_CASE("maximal cliques") {
  // a graph big enough to trigger the parallel split (>= 64 vertices)
  const int n = 80;
  std::vector<BitMask> adj(n, BitMask(n));
  auto connect = [&](int u, int v) {
    adj[u].set(v);
    adj[v].set(u);
  };
  for (int v = 0; v < n; ++v) {
    connect(v, (v + 1) % n);
    connect(v, (v + 7) % n);
    if (v % 3 == 0) connect(v, (v + 13) % n);
  }
  auto serial = maximal_cliques_serial(adj);
  auto parallel = maximal_cliques(adj);
  CHECK(serial == parallel);
}

TEST_CASE("hom enumeration") {
  Graph g = as_loop(cycle_reflexive(5));
  Graph h = Graph::loop(4, {{0, 0}, {0, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 0}});
  auto serial = enumerate_homs_serial(g, h);
  auto parallel = enumerate_homs(g, h);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i)
    CHECK(serial[i].assignment() == parallel[i].assignment());
}

TEST_CASE("exponential graphs") {
  Graph g = as_loop(path_reflexive(2));
  Graph h = as_loop(cycle_reflexive(4));
  GraphExpResult serial = exponential_loop_serial(h, g);
  GraphExpResult parallel = exponential_loop(h, g);
  CHECK(serial.graph == parallel.graph);
  CHECK(serial.vertex_maps == parallel.vertex_maps);
}

TEST_CASE("x-homotopy results do not depend on the thread count") {
  Complex k = boundary(2);
  Complex l = clique_complex(cycle_reflexive(6));
  VertexMap f = VertexMap::constant(k, l, 0);
  VertexMap g = VertexMap::constant(k, l, 3);

  Outcome<ContiguityChain> with_threads = x_homotopic(f, g, 100000);
  SerialGuard guard(false);
  Outcome<ContiguityChain> serial = x_homotopic(f, g, 100000);

  REQUIRE(with_threads.status == serial.status);
  if (with_threads.is_found())
    CHECK(with_threads.value->maps() == serial.value->maps());
}

TEST_CASE("toggling the switch") {
  par::set_enabled(false);
  CHECK_FALSE(par::enabled());
  par::set_enabled(true);
}

}  // TEST_SUITE
