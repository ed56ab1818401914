#ifndef XHO_GRAPH_HPP
#define XHO_GRAPH_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xho/complex.hpp"

namespace xho {

// Undirected simple graphs in two modes. A reflexive graph never stores
// loops (they are implicit on every vertex); a loop graph stores loops
// explicitly and permits unlooped vertices. Immutable like Complex.
enum class GraphMode { Reflexive, Loop };

class Graph {
 public:
  Graph();  // empty reflexive graph

  static Graph reflexive(int n, const std::vector<std::pair<int, int>>& edges,
                         std::vector<std::string> labels = {});
  static Graph loop(int n, const std::vector<std::pair<int, int>>& edges,
                    std::vector<std::string> labels = {});

  int vertex_count() const;
  GraphMode mode() const;

  // Edge relation under the mode semantics: in reflexive mode u == v is
  // always an edge; in loop mode u == v is an edge iff the loop is stored.
  bool has_edge(int u, int v) const;

  // Stored edges as sorted pairs (u <= v); loops appear only in loop mode.
  std::vector<std::pair<int, int>> edges() const;

  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const;
  std::optional<int> vertex_by_label(const std::string& name) const;
  Graph relabeled(std::vector<std::string> labels) const;

  bool looped(int v) const;  // reflexive mode: always true

  bool operator==(const Graph& other) const;  // mode + structure, labels ignored
  bool operator!=(const Graph& other) const { return !(*this == other); }

  const std::vector<BitMask>& adjacency() const;  // diagonal per stored loops

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Graph(std::shared_ptr<const Impl> impl);
  static Graph make(GraphMode mode, int n, const std::vector<std::pair<int, int>>& edges,
                    std::vector<std::string> labels);
};

// Edge-preserving vertex function between graphs of the same mode. In loop
// mode this forbids collapsing an unlooped edge.
class GraphMap {
 public:
  GraphMap(Graph source, Graph target, std::vector<int> assignment);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::vector<int>& assignment() const { return map_; }
  int operator()(int v) const { return map_[v]; }

  bool operator==(const GraphMap& other) const;

 private:
  Graph source_, target_;
  std::vector<int> map_;
};

bool is_graph_hom(const Graph& g, const Graph& h, const std::vector<int>& assignment);

// ---- standard graphs ---------------------------------------------------

Graph complete_reflexive(int n);                // K^n
Graph complete_unlooped(int n);                 // K^n_u, loop mode without loops
Graph path_reflexive(int n);                    // I_n on vertices 0..n
Graph cycle_reflexive(int n);                   // C_n, n >= 3
Graph discrete_reflexive(int n);                // n isolated vertices

// ---- functors between Gr_l, Gr and Cpx -----------------------------------

// 1-skeleton of a complex as a reflexive graph.
Graph skeleton1(const Complex& k);

// Clique complex of a reflexive graph; flag by construction.
Complex clique_complex(const Graph& g);

// (-)^o : induced subgraph on the looped vertices of a loop graph.
Graph max_reflexive(const Graph& g);
// (-)_l : reflexive graph on the same vertices, all loops granted.
Graph add_loops(const Graph& g);
// i_l : a reflexive graph viewed as a loop graph with explicit loops.
Graph as_loop(const Graph& g);

// Categorical product, both factors in the same mode.
Graph graph_product(const Graph& g, const Graph& h);

// Exponential loop graph H^G: vertices are all functions V(G) -> V(H);
// f ~ f' iff f(x)f'(y) is an edge of H for every edge xy of G (both
// orientations). Loops mark exactly the homomorphisms.
struct GraphExpResult {
  Graph graph;
  std::vector<std::vector<int>> vertex_maps;  // vertex -> assignment V(G) -> V(H)
};
GraphExpResult exponential_loop(const Graph& h, const Graph& g,
                                std::int64_t max_vertices = 1000000);
GraphExpResult exponential_loop_serial(const Graph& h, const Graph& g,
                                       std::int64_t max_vertices = 1000000);

// Internal hom of reflexive graphs, realized as the looped part of the loop
// exponential; vertices are exactly the homomorphisms G -> H.
GraphExpResult exponential_reflexive(const Graph& h, const Graph& g,
                                     std::int64_t max_vertices = 1000000);

// All homomorphisms G -> H in lexicographic assignment order.
std::vector<GraphMap> enumerate_homs(const Graph& g, const Graph& h,
                                     std::int64_t budget = 10000000);
std::vector<GraphMap> enumerate_homs_serial(const Graph& g, const Graph& h,
                                            std::int64_t budget = 10000000);
std::size_t count_homs(const Graph& g, const Graph& h, std::int64_t budget = 10000000);

// Hom complex of loop graphs: clique complex of (H^G)^o.
Complex hom_complex(const Graph& g, const Graph& h, std::int64_t max_vertices = 1000000);

}  // namespace xho

#endif  // XHO_GRAPH_HPP
