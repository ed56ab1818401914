#ifndef XHO_HOMOLOGY_HPP
#define XHO_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "xho/complex.hpp"

namespace xho {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. Sizes stay at desk scale; exactness
// matters more than speed here.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static IMat identity(int n);

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const IMat& other) const;
};

IMat matmul(const IMat& x, const IMat& y);

// Smith normal form U * M * V = D with D diagonal, d_i | d_{i+1}, entries
// non-negative. Pivoting is deterministic: smallest nonzero magnitude,
// ties by position. col_ops_inv tracks V^{-1} so vectors can be expressed
// in the transformed column basis.
struct SnfResult {
  IMat d;
  IMat row_ops;       // U
  IMat col_ops;       // V
  IMat col_ops_inv;   // V^{-1}
  int rank = 0;
  std::vector<Int> diagonal;  // the nonzero d_i
};

SnfResult smith_normal_form(const IMat& m, bool want_transforms = true);

// Simplicial chain complex with integer coefficients: per-degree ordered
// face bases (vertices in global id order) and boundary matrices with
// alternating signs.
struct ChainData {
  std::vector<std::vector<VSet>> basis;  // basis[k] = k-dimensional faces
  std::vector<IMat> boundary;            // boundary[k] : C_k -> C_{k-1}; boundary[0] unused

  int dim() const { return static_cast<int>(basis.size()) - 1; }
};

ChainData chain_complex(const Complex& k);

struct HomologyResult {
  std::vector<int> betti;                        // degrees 0..dim
  std::vector<std::vector<long long>> torsion;   // entries > 1, per degree

  bool operator==(const HomologyResult& other) const {
    return betti == other.betti && torsion == other.torsion;
  }
};

// Equality up to trailing trivial degrees (a collapse can lower the
// dimension without changing any group).
bool same_homology(const HomologyResult& a, const HomologyResult& b);

HomologyResult homology(const Complex& k);

// Connected components via union-find on the 1-skeleton; always equals
// betti_0.
int components(const Complex& k);

// Chain map of a simplicial map: an ordered face goes to (sign) times its
// image when the image keeps full dimension, to zero otherwise.
std::vector<IMat> induced_chain_maps(const VertexMap& f);

struct HomIsoReport {
  bool iso = false;
  int degrees_checked = 0;
};

// Decides whether f induces isomorphisms on all integral homology groups
// (free and torsion parts). Documented as a necessary condition for weak
// equivalence, not a sufficient one.
HomIsoReport homology_iso_report(const VertexMap& f);
bool is_homology_iso(const VertexMap& f);

}  // namespace xho

#endif  // XHO_HOMOLOGY_HPP
