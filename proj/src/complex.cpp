#include "xho/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "xho/parallel.hpp"

namespace xho {

namespace {

constexpr std::size_t kClosureCap = 2000000;

bool is_sorted_unique(const VSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

VSet normalized(VSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// subset test on sorted vectors
bool contains_all(const VSet& big, const VSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

struct Complex::Impl {
  int n = 0;
  std::vector<VSet> facets;       // sorted lexicographically, pairwise incomparable
  std::vector<BitMask> masks;     // facet bitmasks, same order
  std::vector<std::string> labels;

  mutable std::once_flag closure_once;
  mutable std::vector<VSet> closure;  // all nonempty faces, by size then lex

  void build_closure() const {
    std::set<VSet> seen;
    for (const auto& f : facets) {
      // enumerate nonempty subsets of f
      if (f.size() > 22) throw BudgetError("face closure too large to enumerate");
      const std::size_t m = f.size();
      for (std::size_t bits = 1; bits < (std::size_t{1} << m); ++bits) {
        VSet sub;
        for (std::size_t i = 0; i < m; ++i)
          if (bits & (std::size_t{1} << i)) sub.push_back(f[i]);
        seen.insert(std::move(sub));
        if (seen.size() > kClosureCap) throw BudgetError("face closure too large to enumerate");
      }
    }
    closure.assign(seen.begin(), seen.end());
    std::stable_sort(closure.begin(), closure.end(),
                     [](const VSet& a, const VSet& b) {
                       if (a.size() != b.size()) return a.size() < b.size();
                       return a < b;
                     });
  }
};

Complex::Complex() : impl_(std::make_shared<Impl>()) {}

Complex::Complex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Complex Complex::from_facets(int n_vertices, const std::vector<VSet>& generators,
                             std::vector<std::string> labels) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
  auto impl = std::make_shared<Impl>();
  impl->n = n_vertices;

  std::vector<VSet> gens;
  gens.reserve(generators.size() + n_vertices);
  for (const auto& g : generators) {
    VSet s = normalized(g);
    for (int v : s)
      if (v < 0 || v >= n_vertices)
        throw std::invalid_argument("generator vertex out of range");
    if (!s.empty()) gens.push_back(std::move(s));
  }
  for (int v = 0; v < n_vertices; ++v) gens.push_back({v});

  // keep maximal generators only
  std::sort(gens.begin(), gens.end(), [](const VSet& a, const VSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VSet> maximal;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& m : maximal)
      if (contains_all(m, g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(g);
  }
  std::sort(maximal.begin(), maximal.end());
  impl->facets = std::move(maximal);
  impl->masks.reserve(impl->facets.size());
  for (const auto& f : impl->facets)
    impl->masks.push_back(BitMask::from_vset(n_vertices, f));

  if (labels.empty()) {
    impl->labels = default_labels(n_vertices);
  } else {
    if (static_cast<int>(labels.size()) != n_vertices)
      throw std::invalid_argument("label count does not match vertex count");
    impl->labels = std::move(labels);
  }
  return Complex(impl);
}

int Complex::vertex_count() const { return impl_->n; }

int Complex::dim() const {
  int d = -1;
  for (const auto& f : impl_->facets)
    d = std::max<int>(d, static_cast<int>(f.size()) - 1);
  return d;
}

const std::vector<VSet>& Complex::facets() const { return impl_->facets; }

const std::vector<VSet>& Complex::faces() const {
  std::call_once(impl_->closure_once, [this] { impl_->build_closure(); });
  return impl_->closure;
}

std::size_t Complex::face_count() const { return faces().size(); }

std::vector<VSet> Complex::faces_of_dim(int d) const {
  std::vector<VSet> out;
  for (const auto& f : faces())
    if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
  return out;
}

bool Complex::has_face(const VSet& s) const {
  if (s.empty()) return true;
  if (!is_sorted_unique(s)) throw std::invalid_argument("face not sorted");
  for (int v : s)
    if (v < 0 || v >= impl_->n) return false;
  for (const auto& f : impl_->facets)
    if (contains_all(f, s)) return true;
  return false;
}

bool Complex::has_face(const BitMask& m) const {
  if (m.count() == 0) return true;
  for (const auto& f : impl_->masks)
    if (m.subset_of(f)) return true;
  return false;
}

const std::string& Complex::label(int v) const { return impl_->labels.at(v); }

const std::vector<std::string>& Complex::labels() const { return impl_->labels; }

std::optional<int> Complex::vertex_by_label(const std::string& name) const {
  for (int v = 0; v < impl_->n; ++v)
    if (impl_->labels[v] == name) return v;
  return std::nullopt;
}

Complex Complex::relabeled(std::vector<std::string> labels) const {
  return from_facets(impl_->n, impl_->facets, std::move(labels));
}

bool Complex::operator==(const Complex& other) const {
  return impl_->n == other.impl_->n && impl_->facets == other.impl_->facets;
}

const std::vector<BitMask>& Complex::facet_masks() const { return impl_->masks; }

// ---- VertexMap ---------------------------------------------------------

VSet image_of(const std::vector<int>& assignment, const VSet& face) {
  VSet out;
  out.reserve(face.size());
  for (int v : face) out.push_back(assignment[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial(const Complex& k, const Complex& l, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != k.vertex_count()) return false;
  for (int v : assignment)
    if (v < 0 || v >= l.vertex_count()) return false;
  for (const auto& f : k.facets())
    if (!l.has_face(image_of(assignment, f))) return false;
  return true;
}

VertexMap::VertexMap(Complex source, Complex target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
  if (!is_simplicial(source_, target_, map_))
    throw std::invalid_argument("vertex assignment is not simplicial");
}

VSet VertexMap::image(const VSet& face) const { return image_of(map_, face); }

bool VertexMap::injective() const {
  std::vector<char> seen(target_.vertex_count(), 0);
  for (int v : map_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

VertexMap VertexMap::identity(const Complex& k) {
  std::vector<int> id(k.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  return VertexMap(k, k, std::move(id));
}

VertexMap VertexMap::constant(const Complex& k, const Complex& l, int target_vertex) {
  return VertexMap(k, l, std::vector<int>(k.vertex_count(), target_vertex));
}

VertexMap VertexMap::compose(const VertexMap& g, const VertexMap& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("composition endpoint mismatch");
  std::vector<int> m(f.source().vertex_count());
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = g.map_[f.map_[v]];
  return VertexMap(f.source(), g.target(), std::move(m));
}

bool VertexMap::operator==(const VertexMap& other) const {
  return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
}

// ---- standard complexes -------------------------------------------------

Complex delta(int n) {
  if (n < 0) throw std::invalid_argument("delta: n must be >= 0");
  VSet all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return Complex::from_facets(n + 1, {all});
}

Complex boundary(int n) {
  if (n < 0) throw std::invalid_argument("boundary: n must be >= 0");
  if (n == 0) return Complex();  // the boundary of a point is empty
  std::vector<VSet> gens;
  for (int omit = 0; omit <= n; ++omit) {
    VSet f;
    for (int v = 0; v <= n; ++v)
      if (v != omit) f.push_back(v);
    gens.push_back(std::move(f));
  }
  return Complex::from_facets(n + 1, gens);
}

Complex horn(int n, int k);  // defined after restrict_to_span below

Complex path_complex(int n) {
  if (n < 0) throw std::invalid_argument("path_complex: n must be >= 0");
  std::vector<VSet> gens;
  for (int i = 0; i < n; ++i) gens.push_back({i, i + 1});
  return Complex::from_facets(n + 1, gens);
}

Complex point() { return delta(0); }

// ---- local subcomplex operations ----------------------------------------

namespace {

// Builds a complex from a facet family over a subset of k's vertices,
// keeping labels; vertices outside any facet are dropped.
Complex restrict_to_span(const Complex& k, std::vector<VSet> facets) {
  VSet span;
  for (const auto& f : facets) span.insert(span.end(), f.begin(), f.end());
  span = normalized(span);
  std::vector<int> back(k.vertex_count(), -1);
  for (std::size_t i = 0; i < span.size(); ++i) back[span[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  labels.reserve(span.size());
  for (int v : span) labels.push_back(k.label(v));
  for (auto& f : facets)
    for (int& v : f) v = back[v];
  return Complex::from_facets(static_cast<int>(span.size()), facets, std::move(labels));
}

}  // namespace

Complex horn(int n, int k) {
  if (n < 1) throw std::invalid_argument("horn: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("horn: k out of range");
  std::vector<VSet> gens;
  for (int omit = 0; omit <= n; ++omit) {
    if (omit == k) continue;  // keep only facets through k
    VSet f;
    for (int v = 0; v <= n; ++v)
      if (v != omit) f.push_back(v);
    gens.push_back(std::move(f));
  }
  // vertices outside every kept facet (only possible for n = 1) drop out
  Complex ambient = delta(n);
  return restrict_to_span(ambient, std::move(gens));
}

Complex star(const Complex& k, const VSet& sigma) {
  VSet s = normalized(sigma);
  if (!k.has_face(s) || s.empty())
    throw std::invalid_argument("star: sigma is not a face");
  std::vector<VSet> fac;
  for (const auto& f : k.facets())
    if (contains_all(f, s)) fac.push_back(f);
  return restrict_to_span(k, std::move(fac));
}

Complex deletion(const Complex& k, const VSet& sigma) {
  VSet s = normalized(sigma);
  if (!k.has_face(s) || s.empty())
    throw std::invalid_argument("deletion: sigma is not a face");
  std::vector<VSet> fac;
  for (const auto& f : k.facets()) {
    VSet g;
    for (int v : f)
      if (!std::binary_search(s.begin(), s.end(), v)) g.push_back(v);
    if (!g.empty()) fac.push_back(std::move(g));
  }
  // every vertex outside sigma survives, even if isolated
  for (int v = 0; v < k.vertex_count(); ++v)
    if (!std::binary_search(s.begin(), s.end(), v)) fac.push_back({v});
  return restrict_to_span(k, std::move(fac));
}

Complex neighborhood(const Complex& l, const Complex& sub) {
  auto inc = subcomplex_inclusion(sub, l);
  if (!inc) throw std::invalid_argument("neighborhood: not a subcomplex");
  std::vector<VSet> fac;
  for (const auto& f : l.facets()) {
    for (int v : inc->assignment()) {
      if (std::binary_search(f.begin(), f.end(), v)) {
        fac.push_back(f);
        break;
      }
    }
  }
  return restrict_to_span(l, std::move(fac));
}

Complex induced_subcomplex(const Complex& k, const VSet& s) {
  VSet keep = normalized(s);
  for (int v : keep)
    if (v < 0 || v >= k.vertex_count())
      throw std::invalid_argument("induced_subcomplex: vertex out of range");
  std::vector<VSet> fac;
  for (const auto& f : k.facets()) {
    VSet g;
    for (int v : f)
      if (std::binary_search(keep.begin(), keep.end(), v)) g.push_back(v);
    if (!g.empty()) fac.push_back(std::move(g));
  }
  for (int v : keep) fac.push_back({v});
  return restrict_to_span(k, std::move(fac));
}

std::optional<VertexMap> subcomplex_inclusion(const Complex& k, const Complex& l) {
  std::vector<int> emb(k.vertex_count());
  for (int v = 0; v < k.vertex_count(); ++v) {
    auto w = l.vertex_by_label(k.label(v));
    if (!w) return std::nullopt;
    emb[v] = *w;
  }
  for (const auto& f : k.facets())
    if (!l.has_face(image_of(emb, f))) return std::nullopt;
  return VertexMap(k, l, std::move(emb));
}

bool is_subcomplex(const Complex& k, const Complex& l) {
  return subcomplex_inclusion(k, l).has_value();
}

// ---- categorical operations ----------------------------------------------

ProductResult product_with_projections(const Complex& k, const Complex& l) {
  ProductResult out;
  out.left = k;
  out.right = l;
  const int nk = k.vertex_count(), nl = l.vertex_count();
  out.vertex_pairs.reserve(static_cast<std::size_t>(nk) * nl);
  std::vector<std::string> labels;
  for (int a = 0; a < nk; ++a)
    for (int b = 0; b < nl; ++b) {
      out.vertex_pairs.emplace_back(a, b);
      labels.push_back("(" + k.label(a) + "," + l.label(b) + ")");
    }
  std::vector<VSet> fac;
  for (const auto& fk : k.facets())
    for (const auto& fl : l.facets()) {
      VSet f;
      f.reserve(fk.size() * fl.size());
      for (int a : fk)
        for (int b : fl) f.push_back(a * nl + b);
      fac.push_back(normalized(f));
    }
  out.complex = Complex::from_facets(nk * nl, fac, std::move(labels));
  return out;
}

VertexMap ProductResult::proj_left() const {
  std::vector<int> m(vertex_pairs.size());
  for (std::size_t i = 0; i < vertex_pairs.size(); ++i) m[i] = vertex_pairs[i].first;
  return VertexMap(complex, left, std::move(m));
}

VertexMap ProductResult::proj_right() const {
  std::vector<int> m(vertex_pairs.size());
  for (std::size_t i = 0; i < vertex_pairs.size(); ++i) m[i] = vertex_pairs[i].second;
  return VertexMap(complex, right, std::move(m));
}

int ProductResult::pair_vertex(int a, int b) const {
  return a * right.vertex_count() + b;
}

Complex product(const Complex& k, const Complex& l) {
  return product_with_projections(k, l).complex;
}

Complex coproduct(const Complex& k, const Complex& l) {
  const int nk = k.vertex_count(), nl = l.vertex_count();
  std::vector<VSet> fac = k.facets();
  for (const auto& f : l.facets()) {
    VSet g;
    for (int v : f) g.push_back(v + nk);
    fac.push_back(std::move(g));
  }
  std::vector<std::string> labels;
  for (int v = 0; v < nk; ++v) labels.push_back("a:" + k.label(v));
  for (int v = 0; v < nl; ++v) labels.push_back("b:" + l.label(v));
  return Complex::from_facets(nk + nl, fac, std::move(labels));
}

// ---- exponential ----------------------------------------------------------

ExponentialResult exponential(const Complex& l, const Complex& k, std::int64_t max_vertices) {
  // size guard: |V(L)|^|V(K)| candidate functions
  double estimate = 1.0;
  for (int i = 0; i < k.vertex_count(); ++i) {
    estimate *= std::max(1, l.vertex_count());
    if (estimate > static_cast<double>(max_vertices))
      throw BudgetError("exponential: vertex budget exceeded");
  }

  ExponentialResult out;
  out.vertex_maps = all_simplicial_maps(k, l);
  const int n = static_cast<int>(out.vertex_maps.size());

  // A set S of maps is a face iff for every facet sigma of K the union of
  // images of sigma lands inside one facet of L. Hence the faces are the
  // subsets of the intersections
  //     cell(F) = { f : f(sigma) subset F(sigma) for all sigma }
  // over choice functions F : facets(K) -> facets(L), and the facets of
  // L^K are the maximal such intersections.
  const auto& kf = k.facets();
  const auto& lf = l.facets();
  std::vector<VSet> fac;
  if (n > 0) {
    double choices = 1.0;
    for (std::size_t i = 0; i < kf.size(); ++i) {
      choices *= static_cast<double>(std::max<std::size_t>(1, lf.size()));
      if (choices > 4e6) throw BudgetError("exponential: facet choice budget exceeded");
    }
    // member[si][fi] = maps whose image of facet si fits inside l-facet fi
    std::vector<std::vector<BitMask>> member(kf.size(),
                                             std::vector<BitMask>(lf.size(), BitMask(n)));
    for (int i = 0; i < n; ++i)
      for (std::size_t si = 0; si < kf.size(); ++si) {
        BitMask img = BitMask::from_vset(l.vertex_count(),
                                         image_of(out.vertex_maps[i], kf[si]));
        for (std::size_t fi = 0; fi < lf.size(); ++fi)
          if (img.subset_of(l.facet_masks()[fi])) member[si][fi].set(i);
      }

    std::set<std::vector<std::uint64_t>> seen;  // dedup by raw cell content
    std::vector<BitMask> cells;
    std::vector<std::size_t> choice(kf.size(), 0);
    while (true) {
      BitMask cell(n);
      for (int i = 0; i < n; ++i) cell.set(i);
      for (std::size_t si = 0; si < kf.size(); ++si) cell &= member[si][choice[si]];
      VSet cv = cell.to_vset();
      if (!cv.empty()) {
        std::vector<std::uint64_t> key(cv.begin(), cv.end());
        if (seen.insert(key).second) cells.push_back(cell);
      }
      // next choice function
      std::size_t pos = 0;
      while (pos < kf.size() && ++choice[pos] == lf.size()) choice[pos++] = 0;
      if (pos == kf.size()) break;  // wrapped around (or no facets at all)
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < cells.size() && maximal; ++b)
        if (a != b && cells[a].subset_of(cells[b]) && !(cells[a] == cells[b]))
          maximal = false;
      if (maximal) fac.push_back(cells[a].to_vset());
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string name = "f";
    for (int v : out.vertex_maps[i]) name += "." + l.label(v);
    labels.push_back(std::move(name));
  }
  out.complex = Complex::from_facets(n, fac, std::move(labels));
  return out;
}

// ---- pushout ---------------------------------------------------------------

PushoutResult pushout_mono(const VertexMap& i, const VertexMap& u) {
  if (i.source() != u.source())
    throw std::invalid_argument("pushout_mono: maps must share their source");
  if (!i.injective())
    throw std::invalid_argument("pushout_mono: i must be injective");
  const Complex& k = i.source();
  const Complex& l = i.target();
  const Complex& a = u.target();

  // i is injective, so each vertex of A absorbs the L-vertices i(k) with
  // u(k) = a, and every other L-vertex keeps its own class.
  std::vector<int> l_class(l.vertex_count(), -1);
  for (int kv = 0; kv < k.vertex_count(); ++kv) l_class[i(kv)] = u(kv);

  const int na = a.vertex_count();
  int next = na;
  std::vector<int> l_to_b(l.vertex_count());
  std::vector<std::string> labels = a.labels();
  for (int lv = 0; lv < l.vertex_count(); ++lv) {
    if (l_class[lv] >= 0) {
      l_to_b[lv] = l_class[lv];
    } else {
      l_to_b[lv] = next++;
      labels.push_back(l.label(lv));
    }
  }
  std::vector<int> a_to_b(na);
  std::iota(a_to_b.begin(), a_to_b.end(), 0);

  std::vector<VSet> fac;
  for (const auto& f : a.facets()) fac.push_back(image_of(a_to_b, f));
  for (const auto& f : l.facets()) fac.push_back(image_of(l_to_b, f));
  Complex b = Complex::from_facets(next, fac, std::move(labels));

  PushoutResult out{b, VertexMap(l, b, std::move(l_to_b)), VertexMap(a, b, std::move(a_to_b))};
  return out;
}

// ---- flag / cliques ---------------------------------------------------------

namespace {

void bron_kerbosch(const std::vector<BitMask>& adj, BitMask r, BitMask p, BitMask x,
                   std::vector<VSet>& out) {
  const int n = static_cast<int>(adj.size());
  if (p.count() == 0 && x.count() == 0) {
    out.push_back(r.to_vset());
    return;
  }
  // pivot: vertex of P u X with the most candidates eliminated
  int pivot = -1, best = -1;
  for (int v = 0; v < n; ++v) {
    if (!p.test(v) && !x.test(v)) continue;
    BitMask t = p;
    t &= adj[v];
    int c = t.count();
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!p.test(v) || (pivot >= 0 && adj[pivot].test(v))) continue;
    BitMask r2 = r;
    r2.set(v);
    BitMask p2 = p, x2 = x;
    p2 &= adj[v];
    x2 &= adj[v];
    bron_kerbosch(adj, r2, p2, x2, out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<VSet> maximal_cliques_serial(const std::vector<BitMask>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<VSet> out;
  BitMask r(n), p(n), x(n);
  for (int v = 0; v < n; ++v) p.set(v);
  bron_kerbosch(adjacency, r, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VSet> maximal_cliques(const std::vector<BitMask>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (!par::enabled() || n < 64) return maximal_cliques_serial(adjacency);

  // split on the top-level branch vertex; branch v only explores cliques
  // containing v and no earlier vertex, so the branches are independent
  std::vector<std::vector<VSet>> parts(n);
  par::for_index(n, [&](std::int64_t v) {
    BitMask r(n), p(n), x(n);
    r.set(static_cast<int>(v));
    for (int w = 0; w < n; ++w) {
      if (!adjacency[v].test(w)) continue;
      if (w < v)
        x.set(w);
      else
        p.set(w);
    }
    bron_kerbosch(adjacency, r, p, x, parts[v]);
  });
  std::vector<VSet> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_flag(const Complex& k) {
  const int n = k.vertex_count();
  std::vector<BitMask> adj(n, BitMask(n));
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        adj[f[i]].set(f[j]);
        adj[f[j]].set(f[i]);
      }
  for (const auto& c : maximal_cliques(adj))
    if (!k.has_face(c)) return false;
  return true;
}

// ---- map enumeration and isomorphism ---------------------------------------

namespace {

struct MapEnumerator {
  const Complex& k;
  const Complex& l;
  std::int64_t budget;
  const std::function<bool(const std::vector<int>&)>& cb;
  std::vector<int> assign;
  std::vector<int> free_order;  // unpinned vertices, ascending
  // facets of k indexed by the free vertex assigned last, so each facet is
  // checked as soon as it is fully assigned
  std::vector<std::vector<const VSet*>> check_at;
  bool budget_hit = false;
  bool stopped = false;

  MapEnumerator(const Complex& kk, const Complex& ll, const std::vector<int>& partial,
                std::int64_t b, const std::function<bool(const std::vector<int>&)>& f)
      : k(kk), l(ll), budget(b), cb(f), assign(partial) {
    std::vector<int> rank(k.vertex_count(), -1);
    for (int v = 0; v < k.vertex_count(); ++v)
      if (assign[v] < 0) {
        rank[v] = static_cast<int>(free_order.size());
        free_order.push_back(v);
      }
    check_at.resize(free_order.size() + 1);
    for (const auto& f2 : k.facets()) {
      int last = -1;
      for (int v : f2) last = std::max(last, rank[v]);
      check_at[last + 1].push_back(&f2);
    }
  }

  bool partial_ok(std::size_t idx) const {
    for (const VSet* f : check_at[idx])
      if (!l.has_face(image_of(assign, *f))) return false;
    return true;
  }

  void rec(std::size_t idx) {
    if (stopped || budget_hit) return;
    if (budget-- <= 0) {
      budget_hit = true;
      return;
    }
    if (idx == free_order.size()) {
      if (!cb(assign)) stopped = true;
      return;
    }
    int v = free_order[idx];
    for (int w = 0; w < l.vertex_count(); ++w) {
      assign[v] = w;
      if (partial_ok(idx + 1)) rec(idx + 1);
      if (stopped || budget_hit) break;
    }
    assign[v] = -1;
  }

  bool run() {
    // facets pinned entirely by the partial assignment are checked first
    if (!partial_ok(0)) return true;
    rec(0);
    return !budget_hit;
  }
};

}  // namespace

bool for_each_simplicial_extension(const Complex& k, const Complex& l,
                                   const std::vector<int>& partial, std::int64_t budget,
                                   const std::function<bool(const std::vector<int>&)>& cb) {
  if (static_cast<int>(partial.size()) != k.vertex_count())
    throw std::invalid_argument("partial assignment has wrong size");
  bool any_free = false;
  for (int v : partial) any_free |= (v < 0);
  if (l.vertex_count() == 0 && any_free) return true;  // nothing to map into
  MapEnumerator e(k, l, partial, budget, cb);
  return e.run();
}

bool for_each_simplicial_map(const Complex& k, const Complex& l, std::int64_t budget,
                             const std::function<bool(const std::vector<int>&)>& cb) {
  return for_each_simplicial_extension(k, l, std::vector<int>(k.vertex_count(), -1),
                                       budget, cb);
}

std::vector<std::vector<int>> all_simplicial_maps(const Complex& k, const Complex& l,
                                                  std::int64_t budget) {
  std::vector<std::vector<int>> out;
  bool complete = for_each_simplicial_map(k, l, budget, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  if (!complete) throw BudgetError("map enumeration budget exceeded");
  return out;
}

namespace {

// iterated color refinement on the 1-skeleton, seeded with the multiset of
// sizes of facets through each vertex
std::vector<int> vertex_colors(const Complex& k) {
  const int n = k.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        if (i != j) adj[f[i]].push_back(f[j]);
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  std::vector<std::vector<int>> sig(n);
  for (const auto& f : k.facets())
    for (int v : f) sig[v].push_back(static_cast<int>(f.size()));
  for (auto& s : sig) std::sort(s.begin(), s.end());

  std::vector<int> color(n);
  {
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) {
      auto [it, _] = ids.emplace(sig[v], static_cast<int>(ids.size()));
      color[v] = it->second;
    }
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      auto [it, _] = ids.emplace(std::make_pair(color[v], std::move(nb)),
                                 static_cast<int>(ids.size()));
      next[v] = it->second;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::vector<std::size_t> face_vector(const Complex& k) {
  // facet-size histogram; cheaper than the full closure and iso-invariant
  std::vector<std::size_t> hist;
  for (const auto& f : k.facets()) {
    if (f.size() > hist.size()) hist.resize(f.size(), 0);
    ++hist[f.size() - 1];
  }
  return hist;
}

struct IsoSearch {
  const Complex& k;
  const Complex& l;
  std::vector<int> colors_k, colors_l;
  std::vector<int> order;        // source vertices, rarest color first
  std::vector<int> assign;       // k vertex -> l vertex
  std::vector<char> used;        // l vertex taken
  std::set<VSet> l_facets;
  std::int64_t budget;
  bool exhausted = false;

  IsoSearch(const Complex& kk, const Complex& ll, std::int64_t b)
      : k(kk), l(ll), budget(b) {
    colors_k = vertex_colors(k);
    colors_l = vertex_colors(l);
    assign.assign(k.vertex_count(), -1);
    used.assign(l.vertex_count(), 0);
    for (const auto& f : l.facets()) l_facets.insert(f);
    std::map<int, int> freq;
    for (int c : colors_k) ++freq[c];
    order.resize(k.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b2) {
      if (freq[colors_k[a]] != freq[colors_k[b2]])
        return freq[colors_k[a]] < freq[colors_k[b2]];
      return a < b2;
    });
  }

  bool consistent(int v) const {
    // every facet through v whose vertices are all assigned must land on a
    // facet of l; partially assigned facets must land inside some face
    for (const auto& f : k.facets()) {
      if (!std::binary_search(f.begin(), f.end(), v)) continue;
      VSet img;
      bool complete = true;
      for (int w : f) {
        if (assign[w] < 0) {
          complete = false;
        } else {
          img.push_back(assign[w]);
        }
      }
      std::sort(img.begin(), img.end());
      if (static_cast<int>(img.size()) !=
          std::count_if(f.begin(), f.end(), [&](int w) { return assign[w] >= 0; }))
        return false;  // collision inside the face
      if (complete) {
        if (!l_facets.count(img)) return false;
      } else if (!l.has_face(img)) {
        return false;
      }
    }
    return true;
  }

  bool rec(std::size_t idx) {
    if (budget-- <= 0) {
      exhausted = true;
      return false;
    }
    if (idx == order.size()) return true;
    int v = order[idx];
    for (int w = 0; w < l.vertex_count(); ++w) {
      if (used[w] || colors_l[w] != colors_k[v]) continue;
      assign[v] = w;
      used[w] = 1;
      if (consistent(v) && rec(idx + 1)) return true;
      assign[v] = -1;
      used[w] = 0;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

Outcome<std::vector<int>> isomorphic(const Complex& k, const Complex& l,
                                     std::int64_t budget) {
  if (k.vertex_count() != l.vertex_count()) return Outcome<std::vector<int>>::no();
  if (k.facets().size() != l.facets().size()) return Outcome<std::vector<int>>::no();
  if (face_vector(k) != face_vector(l)) return Outcome<std::vector<int>>::no();
  {
    auto ck = vertex_colors(k), cl = vertex_colors(l);
    // color refinement ids are not canonical across complexes; compare class
    // size histograms only
    std::map<int, int> hk, hl;
    for (int c : ck) ++hk[c];
    for (int c : cl) ++hl[c];
    std::vector<int> sk, sl;
    for (auto& [c, m] : hk) sk.push_back(m);
    for (auto& [c, m] : hl) sl.push_back(m);
    std::sort(sk.begin(), sk.end());
    std::sort(sl.begin(), sl.end());
    if (sk != sl) return Outcome<std::vector<int>>::no();
  }
  IsoSearch s(k, l, budget);
  // colors must be matched by a shared canonical id: recolor both by the
  // sorted signature so classes correspond
  {
    // joint refinement: run the refinement on the disjoint union so the
    // color ids live in a common namespace
    Complex both = coproduct(k, l);
    auto colors = vertex_colors(both);
    s.colors_k.assign(colors.begin(), colors.begin() + k.vertex_count());
    s.colors_l.assign(colors.begin() + k.vertex_count(), colors.end());
  }
  if (s.rec(0))
    return Outcome<std::vector<int>>::found(s.assign);
  if (s.exhausted) return Outcome<std::vector<int>>::unknown();
  return Outcome<std::vector<int>>::no();
}

}  // namespace xho
