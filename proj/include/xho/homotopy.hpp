#ifndef XHO_HOMOTOPY_HPP
#define XHO_HOMOTOPY_HPP

#include <vector>

#include "xho/complex.hpp"

namespace xho {

// f(sigma) u g(sigma) is a face of the target for every face sigma;
// checking facets suffices by downward closure. Symmetric and reflexive
// but not transitive.
bool is_contiguous(const VertexMap& f, const VertexMap& g);

// Decides 1-homotopy through the cylinder K x I_1: the level-0/level-1
// map is tested for simpliciality on the categorical product. Agrees with
// is_contiguous; the two are kept as independent implementations and
// cross-checked by the tests.
bool is_one_homotopic(const VertexMap& f, const VertexMap& g);

// A certified homotopy f_0 ~ f_1 ~ ... ~ f_n: consecutive maps contiguous,
// common endpoints. Construction validates.
class ContiguityChain {
 public:
  ContiguityChain(Complex source, Complex target, std::vector<std::vector<int>> maps);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  const std::vector<std::vector<int>>& maps() const { return maps_; }
  std::size_t length() const { return maps_.size() - 1; }  // number of steps

  VertexMap front() const;
  VertexMap back() const;

 private:
  Complex source_, target_;
  std::vector<std::vector<int>> maps_;
};

ContiguityChain chain_reverse(const ContiguityChain& c);
// end of c1 must equal start of c2
ContiguityChain chain_concat(const ContiguityChain& c1, const ContiguityChain& c2);
// c_left : f ~ f' (K -> L), c_right : g ~ g' (L -> M); realizes
// gf ~ g'f' via i -> g_min(i,n') o f_min(i,n).
ContiguityChain chain_compose(const ContiguityChain& c_left, const ContiguityChain& c_right);

// Breadth-first search over single-vertex moves, each step required to be
// contiguous with the previous map. Returns a chain, a definitive "no"
// once the reachable set is exhausted, or "unknown" on budget exhaustion.
Outcome<ContiguityChain> x_homotopic(const VertexMap& f, const VertexMap& g,
                                     std::int64_t budget = 100000);

// Deformation-retract certificate: r o i = 1, plus a homotopy on L from
// the identity to i o r that fixes V(K) pointwise.
struct Retraction {
  VertexMap inclusion;   // i : K -> L
  VertexMap retraction;  // r : L -> K
  ContiguityChain chain; // on L, identity to i o r, constant on i(V(K))
};

bool verify_retraction(const Retraction& cert);

// Searches for a deformation retraction of l onto the label-matched
// subcomplex k: the greedy dominated-vertex schedule first, then a bounded
// BFS over K-fixing self-maps of l.
Outcome<Retraction> find_deformation_retract(const Complex& l, const Complex& k,
                                             std::int64_t budget = 100000);

}  // namespace xho

#endif  // XHO_HOMOTOPY_HPP
