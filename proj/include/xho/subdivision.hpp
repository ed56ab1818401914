#ifndef XHO_SUBDIVISION_HPP
#define XHO_SUBDIVISION_HPP

#include <string>
#include <vector>

#include "xho/bitset.hpp"
#include "xho/complex.hpp"

namespace xho {

// Finite poset on elements 0..n-1; the relation is validated on
// construction (reflexive, antisymmetric, transitive).
class Poset {
 public:
  Poset() = default;
  // pairs (a, b) meaning a <= b; reflexive pairs implied.
  Poset(int n, const std::vector<std::pair<int, int>>& relation);

  int size() const { return n_; }
  bool leq(int a, int b) const { return below_[a].test(b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

 private:
  int n_ = 0;
  std::vector<BitMask> below_;  // below_[a] = set of b with a <= b
};

// A complex together with a vertex partial order restricting to a total
// order on every face.
struct OrderedComplex {
  Complex base;
  Poset order;

  // Largest vertex of a face under the order.
  int max_vertex(const VSet& face) const;
};

OrderedComplex ordered(const Complex& k, const Poset& order);  // validates
// Orders a complex by its global vertex ids (always valid).
OrderedComplex ordered_by_ids(const Complex& k);

// Face poset of a complex: one element per nonempty face, ordered by
// inclusion. `elements` fixes the element <-> face correspondence.
struct FacePoset {
  Poset poset;
  std::vector<VSet> elements;  // by ascending size, then lexicographic
};
FacePoset face_poset(const Complex& k);

// Order complex of a poset: vertices are elements, faces are chains.
// Carries the poset as its vertex order.
OrderedComplex order_complex(const Poset& p, const std::vector<std::string>& labels = {});

// Barycentric subdivision: order complex of the face poset. vertex_face
// names each Sd-vertex by the face of the input it denotes.
struct SdResult {
  OrderedComplex complex;
  std::vector<VSet> vertex_face;

  // Sd-vertex denoting a given face of the input.
  int vertex_of(const VSet& face) const;
};

SdResult sd(const Complex& k);

struct Sd2Result {
  SdResult first;   // Sd K
  SdResult second;  // Sd Sd K; vertex_face entries are faces of Sd K
  const Complex& complex() const { return second.complex.base; }
};

Sd2Result sd2(const Complex& k);

// Last vertex map Sd K -> K: an Sd-vertex (a face of K) goes to its
// largest vertex under the given order.
VertexMap last_vertex_map(const OrderedComplex& k);
VertexMap last_vertex_map(const Complex& k);  // global id order
// Variant reusing an existing subdivision of k.
VertexMap last_vertex_map(const SdResult& sd_k, const OrderedComplex& k);

// Iterated last vertex map Sd^2 K -> K built from a Sd2Result.
VertexMap last_vertex_map2(const Sd2Result& s, const Complex& k);

// The staircase inclusion Delta^n -> Sd^2 Delta^n with
// last_vertex_map2 o sd_inclusion(n) = identity.
struct SdInclusionResult {
  Sd2Result subdivided;  // sd2(delta(n))
  VertexMap inclusion;
};
SdInclusionResult sd_inclusion(int n);

}  // namespace xho

#endif  // XHO_SUBDIVISION_HPP
