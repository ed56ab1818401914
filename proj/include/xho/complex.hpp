#ifndef XHO_COMPLEX_HPP
#define XHO_COMPLEX_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "xho/bitset.hpp"
#include "xho/types.hpp"

namespace xho {

// A finite abstract simplicial complex: vertices 0..n-1 plus a
// downward-closed family of nonempty faces. Only the facet set is stored;
// the full closure is memoized on demand. Values are immutable after
// construction, so copies are cheap shared handles and concurrent use is
// safe.
//
// Vertex labels are display names used by the text format and by
// subcomplex matching; they never affect the combinatorics.
class Complex {
 public:
  Complex();  // the empty complex

  // Builds the downward closure of `generators` plus all singletons on
  // vertices 0..n_vertices-1. Generator entries may be unsorted but must
  // be in range and duplicate-free.
  static Complex from_facets(int n_vertices, const std::vector<VSet>& generators,
                             std::vector<std::string> labels = {});

  int vertex_count() const;
  // Dimension = max facet size - 1; the empty complex has dimension -1.
  int dim() const;

  // Maximal faces, sorted lexicographically.
  const std::vector<VSet>& facets() const;

  // All nonempty faces (memoized), grouped by ascending size, each group
  // sorted lexicographically.
  const std::vector<VSet>& faces() const;
  std::size_t face_count() const;

  // Faces of dimension d (size d+1), in closure order.
  std::vector<VSet> faces_of_dim(int d) const;

  bool has_face(const VSet& s) const;      // s must be sorted
  bool has_face(const BitMask& m) const;

  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const;
  // Index of the vertex with the given label, if any.
  std::optional<int> vertex_by_label(const std::string& name) const;

  // Same structure with different display names.
  Complex relabeled(std::vector<std::string> labels) const;

  // Structural equality: vertex count and facet sets (labels ignored).
  bool operator==(const Complex& other) const;
  bool operator!=(const Complex& other) const { return !(*this == other); }

  const std::vector<BitMask>& facet_masks() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Complex(std::shared_ptr<const Impl> impl);
};

// A vertex map certified simplicial: every face of the source lands on a
// face of the target.
class VertexMap {
 public:
  // Throws std::invalid_argument if the assignment is not simplicial.
  VertexMap(Complex source, Complex target, std::vector<int> assignment);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  const std::vector<int>& assignment() const { return map_; }
  int operator()(int v) const { return map_[v]; }

  VSet image(const VSet& face) const;  // sorted image of a face
  bool injective() const;

  static VertexMap identity(const Complex& k);
  static VertexMap constant(const Complex& k, const Complex& l, int target_vertex);
  static VertexMap compose(const VertexMap& g, const VertexMap& f);  // g after f

  bool operator==(const VertexMap& other) const;

 private:
  Complex source_, target_;
  std::vector<int> map_;
};

// True iff `assignment` sends every facet of `k` to a face of `l`.
bool is_simplicial(const Complex& k, const Complex& l, const std::vector<int>& assignment);

VSet image_of(const std::vector<int>& assignment, const VSet& face);

// ---- standard complexes ----------------------------------------------

Complex delta(int n);          // full simplex on vertices 0..n
Complex boundary(int n);       // delta(n) minus its unique facet (empty for n = 0)
Complex horn(int n, int k);    // boundary(n) minus the face opposite k; n >= 1
Complex path_complex(int n);   // vertices 0..n, edges {i, i+1}
Complex point();               // delta(0)

// ---- local subcomplex operations -------------------------------------

// Closed star: faces whose union with sigma is a face. sigma must be a face.
Complex star(const Complex& k, const VSet& sigma);
// Deletion: faces disjoint from sigma.
Complex deletion(const Complex& k, const VSet& sigma);
// Neighborhood of a subcomplex: union of the stars of its vertices.
// `sub` is matched inside `l` by vertex labels.
Complex neighborhood(const Complex& l, const Complex& sub);

// Induced subcomplex on a vertex subset; kept vertices keep their labels.
Complex induced_subcomplex(const Complex& k, const VSet& s);

// Face containment test: every face of `k` is a face of `l`, with k's
// vertices matched to l's by label.
bool is_subcomplex(const Complex& k, const Complex& l);

// Label-matched inclusion k -> l, if k is a subcomplex of l.
std::optional<VertexMap> subcomplex_inclusion(const Complex& k, const Complex& l);

// ---- categorical operations ------------------------------------------

// Categorical product: vertices V(K) x V(L); a set is a face iff both
// projections are faces.
Complex product(const Complex& k, const Complex& l);

struct ProductResult {
  Complex complex;
  Complex left, right;
  std::vector<std::pair<int, int>> vertex_pairs;  // product vertex -> (k, l)
  VertexMap proj_left() const;
  VertexMap proj_right() const;
  int pair_vertex(int a, int b) const;  // (k vertex, l vertex) -> product vertex
};
ProductResult product_with_projections(const Complex& k, const Complex& l);

// Disjoint union.
Complex coproduct(const Complex& k, const Complex& l);

// Internal hom L^K: vertices are the simplicial maps K -> L; a set of maps
// S is a face iff for every face sigma of K the union of their images of
// sigma is a face of L. Throws BudgetError if |V(L)|^|V(K)| exceeds
// max_vertices.
struct ExponentialResult {
  Complex complex;
  std::vector<std::vector<int>> vertex_maps;  // exponential vertex -> assignment
};
ExponentialResult exponential(const Complex& l, const Complex& k,
                              std::int64_t max_vertices = 1000000);

// Pushout of u : K -> A along an injective i : K -> L.
struct PushoutResult {
  Complex complex;          // B = L +_K A
  VertexMap from_left;      // v : L -> B
  VertexMap from_right;     // f : A -> B, injective
};
PushoutResult pushout_mono(const VertexMap& i, const VertexMap& u);

// ---- global predicates and searches ----------------------------------

// A complex is flag iff every pairwise-connected vertex set is a face,
// i.e. every maximal clique of the 1-skeleton is a face.
bool is_flag(const Complex& k);

// Maximal cliques of an adjacency relation, Bron-Kerbosch with pivoting;
// deterministic output order. Exposed here because the clique complex,
// is_flag and the graph module all share it.
std::vector<VSet> maximal_cliques(const std::vector<BitMask>& adjacency);
std::vector<VSet> maximal_cliques_serial(const std::vector<BitMask>& adjacency);

// Backtracking isomorphism search with face-vector and degree pruning.
// Returns a vertex bijection carrying facets onto facets, a definitive
// "no", or "unknown" if the node budget runs out.
Outcome<std::vector<int>> isomorphic(const Complex& k, const Complex& l,
                                     std::int64_t budget = 1000000);

// Enumerates all simplicial maps k -> l in lexicographic assignment order.
// Stops and reports failure via BudgetError once `budget` search nodes are
// spent.
std::vector<std::vector<int>> all_simplicial_maps(const Complex& k, const Complex& l,
                                                  std::int64_t budget = 10000000);

// Streaming variants. The callback returns false to stop early; the
// function returns false iff the node budget ran out before the
// enumeration finished. `partial` entries >= 0 are pinned.
bool for_each_simplicial_map(const Complex& k, const Complex& l, std::int64_t budget,
                             const std::function<bool(const std::vector<int>&)>& cb);
bool for_each_simplicial_extension(const Complex& k, const Complex& l,
                                   const std::vector<int>& partial, std::int64_t budget,
                                   const std::function<bool(const std::vector<int>&)>& cb);

}  // namespace xho

#endif  // XHO_COMPLEX_HPP
