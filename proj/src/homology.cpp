#include "xho/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xho {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IMat::operator==(const IMat& other) const {
  return rows == other.rows && cols == other.cols && a == other.a;
}

IMat matmul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  IMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Int& w = y.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

// ---- Smith normal form ------------------------------------------------------

namespace {

struct SnfWorker {
  IMat m;
  bool track;
  IMat u, v, vinv;

  SnfWorker(const IMat& in, bool want_transforms)
      : m(in), track(want_transforms) {
    if (track) {
      u = IMat::identity(m.rows);
      v = IMat::identity(m.cols);
      vinv = IMat::identity(m.cols);
    }
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    if (track)
      for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    if (track) {
      for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
      for (int j = 0; j < vinv.cols; ++j) std::swap(vinv.at(a, j), vinv.at(b, j));
    }
  }

  // row[dst] += c * row[src]
  void add_row(int src, int dst, const Int& c) {
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) += c * m.at(src, j);
    if (track)
      for (int j = 0; j < u.cols; ++j) u.at(dst, j) += c * u.at(src, j);
  }

  // col[dst] += c * col[src]
  void add_col(int src, int dst, const Int& c) {
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) += c * m.at(i, src);
    if (track) {
      for (int i = 0; i < v.rows; ++i) v.at(i, dst) += c * v.at(i, src);
      for (int j = 0; j < vinv.cols; ++j) vinv.at(src, j) -= c * vinv.at(dst, j);
    }
  }

  void negate_row(int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    if (track)
      for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }

  // smallest nonzero magnitude in the trailing submatrix, ties by position
  bool find_pivot(int t, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    const int steps = std::min(m.rows, m.cols);
    for (int t = 0; t < steps; ++t) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < m.rows; ++i) {
          if (m.at(i, t) == 0) continue;
          Int q = m.at(i, t) / m.at(t, t);
          if (q != 0) add_row(t, i, -q);
          if (m.at(i, t) != 0) {
            // remainder became the new smallest pivot
            swap_rows(t, i);
            clean = false;
          }
        }
        for (int j = t + 1; j < m.cols; ++j) {
          if (m.at(t, j) == 0) continue;
          Int q = m.at(t, j) / m.at(t, t);
          if (q != 0) add_col(t, j, -q);
          if (m.at(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
        if (clean) {
          // enforce divisibility into the trailing block
          for (int i = t + 1; i < m.rows && clean; ++i)
            for (int j = t + 1; j < m.cols && clean; ++j)
              if (m.at(i, j) % m.at(t, t) != 0) {
                add_row(i, t, 1);
                clean = false;
              }
        }
      }
      if (m.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SnfResult smith_normal_form(const IMat& m, bool want_transforms) {
  SnfWorker w(m, want_transforms);
  w.run();
  SnfResult out;
  out.d = std::move(w.m);
  if (want_transforms) {
    out.row_ops = std::move(w.u);
    out.col_ops = std::move(w.v);
    out.col_ops_inv = std::move(w.vinv);
  }
  for (int t = 0; t < std::min(out.d.rows, out.d.cols); ++t) {
    if (out.d.at(t, t) == 0) break;
    out.diagonal.push_back(out.d.at(t, t));
  }
  out.rank = static_cast<int>(out.diagonal.size());
  return out;
}

// ---- chain complexes --------------------------------------------------------

ChainData chain_complex(const Complex& k) {
  ChainData out;
  const int d = k.dim();
  if (d < 0) return out;
  out.basis.resize(d + 1);
  for (const auto& f : k.faces()) out.basis[f.size() - 1].push_back(f);

  out.boundary.resize(d + 1);
  for (int n = 1; n <= d; ++n) {
    const auto& lower = out.basis[n - 1];
    const auto& upper = out.basis[n];
    IMat b(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (int c = 0; c < b.cols; ++c) {
      const VSet& sigma = upper[c];
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        VSet face;
        face.reserve(sigma.size() - 1);
        for (std::size_t t = 0; t < sigma.size(); ++t)
          if (t != i) face.push_back(sigma[t]);
        auto it = std::lower_bound(lower.begin(), lower.end(), face);
        int r = static_cast<int>(it - lower.begin());
        b.at(r, c) += (i % 2 == 0) ? 1 : -1;
      }
    }
    out.boundary[n] = std::move(b);
  }
  return out;
}

// ---- homology ----------------------------------------------------------------

namespace {

// Per-degree data: a kernel basis for Z_n plus the boundary presentation
// R_n (columns of partial_{n+1} in kernel coordinates). H_n = Z^z / R_n.
struct DegreeData {
  int cycles = 0;      // z = dim Z_n
  IMat presentation;   // z x (number of (n+1)-faces)
  IMat kernel_basis;   // c_n x z, columns span Z_n
  IMat coords;         // z x c_n, rows of Vinv giving kernel coordinates
};

DegreeData degree_data(const ChainData& cd, int n) {
  DegreeData out;
  const int dim = cd.dim();
  if (n < 0 || n > dim) return out;
  const int cn = static_cast<int>(cd.basis[n].size());

  if (n == 0) {
    // no differential out of degree 0: every 0-chain is a cycle
    out.cycles = cn;
    out.kernel_basis = IMat::identity(cn);
    out.coords = IMat::identity(cn);
  } else {
    SnfResult snf = smith_normal_form(cd.boundary[n], true);
    out.cycles = cn - snf.rank;
    out.kernel_basis = IMat(cn, out.cycles);
    for (int j = 0; j < out.cycles; ++j)
      for (int i = 0; i < cn; ++i)
        out.kernel_basis.at(i, j) = snf.col_ops.at(i, snf.rank + j);
    out.coords = IMat(out.cycles, cn);
    for (int i = 0; i < out.cycles; ++i)
      for (int j = 0; j < cn; ++j)
        out.coords.at(i, j) = snf.col_ops_inv.at(snf.rank + i, j);
  }

  if (n + 1 <= dim) {
    out.presentation = matmul(out.coords, cd.boundary[n + 1]);
  } else {
    out.presentation = IMat(out.cycles, 0);
  }
  return out;
}

struct GroupShape {
  int betti = 0;
  std::vector<Int> invariants;  // torsion coefficients > 1

  bool operator==(const GroupShape& other) const {
    return betti == other.betti && invariants == other.invariants;
  }
};

GroupShape group_shape(const DegreeData& dd) {
  GroupShape out;
  SnfResult snf = smith_normal_form(dd.presentation, false);
  out.betti = dd.cycles - snf.rank;
  for (const Int& x : snf.diagonal)
    if (x > 1) out.invariants.push_back(x);
  return out;
}

long long to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max())
    throw std::overflow_error("torsion coefficient exceeds long long");
  return static_cast<long long>(x);
}

}  // namespace

HomologyResult homology(const Complex& k) {
  HomologyResult out;
  ChainData cd = chain_complex(k);
  for (int n = 0; n <= cd.dim(); ++n) {
    GroupShape g = group_shape(degree_data(cd, n));
    out.betti.push_back(g.betti);
    std::vector<long long> tors;
    for (const Int& x : g.invariants) tors.push_back(to_ll(x));
    out.torsion.push_back(std::move(tors));
  }
  return out;
}

bool same_homology(const HomologyResult& a, const HomologyResult& b) {
  std::size_t top = std::max(a.betti.size(), b.betti.size());
  for (std::size_t d = 0; d < top; ++d) {
    int ba = d < a.betti.size() ? a.betti[d] : 0;
    int bb = d < b.betti.size() ? b.betti[d] : 0;
    if (ba != bb) return false;
    std::vector<long long> ta = d < a.torsion.size() ? a.torsion[d] : std::vector<long long>{};
    std::vector<long long> tb = d < b.torsion.size() ? b.torsion[d] : std::vector<long long>{};
    if (ta != tb) return false;
  }
  return true;
}

int components(const Complex& k) {
  const int n = k.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : k.facets())
    for (std::size_t i = 1; i < f.size(); ++i) {
      int a = find(f[0]), b = find(f[i]);
      if (a != b) parent[a] = b;
    }
  int c = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++c;
  return c;
}

// ---- induced maps -------------------------------------------------------------

namespace {

int permutation_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) sign = -sign;
  return sign;
}

}  // namespace

std::vector<IMat> induced_chain_maps(const VertexMap& f) {
  ChainData src = chain_complex(f.source());
  ChainData tgt = chain_complex(f.target());
  const int top = std::max(src.dim(), tgt.dim());
  std::vector<IMat> out;
  for (int n = 0; n <= top; ++n) {
    const int cs = n <= src.dim() ? static_cast<int>(src.basis[n].size()) : 0;
    const int ct = n <= tgt.dim() ? static_cast<int>(tgt.basis[n].size()) : 0;
    IMat phi(ct, cs);
    for (int c = 0; c < cs; ++c) {
      const VSet& sigma = src.basis[n][c];
      std::vector<int> img;
      img.reserve(sigma.size());
      for (int v : sigma) img.push_back(f(v));
      VSet sorted = img;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;  // degenerate image, zero chain
      auto it = std::lower_bound(tgt.basis[n].begin(), tgt.basis[n].end(), sorted);
      int r = static_cast<int>(it - tgt.basis[n].begin());
      phi.at(r, c) = permutation_sign(img);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

HomIsoReport homology_iso_report(const VertexMap& f) {
  ChainData src = chain_complex(f.source());
  ChainData tgt = chain_complex(f.target());
  std::vector<IMat> phi = induced_chain_maps(f);
  const int top = std::max(src.dim(), tgt.dim());

  HomIsoReport report;
  report.degrees_checked = top + 1;
  for (int n = 0; n <= top; ++n) {
    DegreeData dk = degree_data(src, n);
    DegreeData dl = degree_data(tgt, n);
    GroupShape gk = group_shape(dk);
    GroupShape gl = group_shape(dl);
    if (!(gk == gl)) return report;  // groups differ, cannot be iso
    if (gl.betti == 0 && gl.invariants.empty()) continue;  // both trivial

    // surjectivity: the image of the induced map together with the target
    // relations must generate Z^{z_L}; finitely generated abelian groups
    // are Hopfian, so surjective + abstractly isomorphic implies iso
    IMat f_kernel = (n <= src.dim() && dk.cycles > 0)
                        ? matmul(dl.coords, matmul(phi[n], dk.kernel_basis))
                        : IMat(dl.cycles, 0);
    IMat stacked(dl.cycles, f_kernel.cols + dl.presentation.cols);
    for (int i = 0; i < dl.cycles; ++i) {
      for (int j = 0; j < f_kernel.cols; ++j) stacked.at(i, j) = f_kernel.at(i, j);
      for (int j = 0; j < dl.presentation.cols; ++j)
        stacked.at(i, f_kernel.cols + j) = dl.presentation.at(i, j);
    }
    SnfResult snf = smith_normal_form(stacked, false);
    if (snf.rank < dl.cycles) return report;
    for (const Int& d : snf.diagonal)
      if (d != 1) return report;
  }
  report.iso = true;
  return report;
}

bool is_homology_iso(const VertexMap& f) { return homology_iso_report(f).iso; }

}  // namespace xho
