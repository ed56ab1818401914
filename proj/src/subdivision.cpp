#include "xho/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace xho {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relation) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative poset size");
  below_.assign(n, BitMask(n));
  for (int a = 0; a < n; ++a) below_[a].set(a);
  for (auto [a, b] : relation) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("poset relation element out of range");
    below_[a].set(b);
  }
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !below_[a].test(b)) continue;
        BitMask merged = below_[a];
        merged |= below_[b];
        if (!(merged == below_[a])) {
          below_[a] = merged;
          changed = true;
        }
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (below_[a].test(b) && below_[b].test(a))
        throw std::invalid_argument("relation is not antisymmetric");
}

int OrderedComplex::max_vertex(const VSet& face) const {
  if (face.empty()) throw std::invalid_argument("empty face has no maximum");
  for (int v : face) {
    bool top = true;
    for (int w : face)
      if (!order.leq(w, v)) {
        top = false;
        break;
      }
    if (top) return v;
  }
  throw std::logic_error("face is not totally ordered");
}

OrderedComplex ordered(const Complex& k, const Poset& order) {
  if (order.size() != k.vertex_count())
    throw std::invalid_argument("order size does not match vertex count");
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        if (!order.comparable(f[i], f[j]))
          throw std::invalid_argument("a face is not totally ordered");
  return OrderedComplex{k, order};
}

OrderedComplex ordered_by_ids(const Complex& k) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < k.vertex_count(); ++a)
    for (int b = a + 1; b < k.vertex_count(); ++b) rel.emplace_back(a, b);
  return OrderedComplex{k, Poset(k.vertex_count(), rel)};
}

FacePoset face_poset(const Complex& k) {
  FacePoset out;
  out.elements = k.faces();
  const int m = static_cast<int>(out.elements.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (out.elements[i].size() > out.elements[j].size()) continue;
      if (std::includes(out.elements[j].begin(), out.elements[j].end(),
                        out.elements[i].begin(), out.elements[i].end()))
        rel.emplace_back(i, j);
    }
  out.poset = Poset(m, rel);
  return out;
}

OrderedComplex order_complex(const Poset& p, const std::vector<std::string>& labels) {
  const int n = p.size();
  std::vector<BitMask> comparability(n, BitMask(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.comparable(a, b)) comparability[a].set(b);
  // chains are exactly the cliques of the comparability graph
  auto facets = maximal_cliques(comparability);
  Complex base = Complex::from_facets(n, facets, labels);
  return OrderedComplex{base, p};
}

namespace {

std::string face_label(const Complex& k, const VSet& face) {
  std::string out = "[";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ",";
    out += k.label(face[i]);
  }
  return out + "]";
}

}  // namespace

int SdResult::vertex_of(const VSet& face) const {
  for (std::size_t i = 0; i < vertex_face.size(); ++i)
    if (vertex_face[i] == face) return static_cast<int>(i);
  throw std::invalid_argument("no subdivision vertex for that face");
}

SdResult sd(const Complex& k) {
  FacePoset fp = face_poset(k);
  std::vector<std::string> labels;
  labels.reserve(fp.elements.size());
  for (const auto& f : fp.elements) labels.push_back(face_label(k, f));
  SdResult out;
  out.complex = order_complex(fp.poset, labels);
  out.vertex_face = std::move(fp.elements);
  return out;
}

Sd2Result sd2(const Complex& k) {
  Sd2Result out;
  out.first = sd(k);
  out.second = sd(out.first.complex.base);
  return out;
}

VertexMap last_vertex_map(const SdResult& sd_k, const OrderedComplex& k) {
  std::vector<int> assign;
  assign.reserve(sd_k.vertex_face.size());
  for (const auto& face : sd_k.vertex_face) assign.push_back(k.max_vertex(face));
  return VertexMap(sd_k.complex.base, k.base, std::move(assign));
}

VertexMap last_vertex_map(const OrderedComplex& k) {
  return last_vertex_map(sd(k.base), k);
}

VertexMap last_vertex_map(const Complex& k) {
  return last_vertex_map(ordered_by_ids(k));
}

VertexMap last_vertex_map2(const Sd2Result& s, const Complex& k) {
  VertexMap inner = last_vertex_map(s.second, s.first.complex);
  VertexMap outer = last_vertex_map(s.first, ordered_by_ids(k));
  return VertexMap::compose(outer, inner);
}

SdInclusionResult sd_inclusion(int n) {
  if (n < 0) throw std::invalid_argument("sd_inclusion: n must be >= 0");
  Complex dn = delta(n);
  Sd2Result s = sd2(dn);
  std::vector<int> assign(n + 1);
  for (int v = 0; v <= n; ++v) {
    // the chain {0} < {0,1} < ... < {0..v} of faces of Delta^n, as a face
    // of Sd Delta^n, names a vertex of Sd^2 Delta^n
    VSet chain;
    for (int j = 0; j <= v; ++j) {
      VSet face(j + 1);
      for (int t = 0; t <= j; ++t) face[t] = t;
      chain.push_back(s.first.vertex_of(face));
    }
    std::sort(chain.begin(), chain.end());
    assign[v] = s.second.vertex_of(chain);
  }
  VertexMap inclusion(dn, s.complex(), std::move(assign));
  return SdInclusionResult{std::move(s), std::move(inclusion)};
}

}  // namespace xho
