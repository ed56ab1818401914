#include "xho/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "xho/parallel.hpp"

namespace xho {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

}  // namespace

struct Graph::Impl {
  int n = 0;
  GraphMode mode = GraphMode::Reflexive;
  std::vector<BitMask> adj;  // symmetric; diagonal = stored loops
  std::vector<std::string> labels;
};

Graph::Graph() : impl_(std::make_shared<Impl>()) {}

Graph::Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Graph Graph::reflexive(int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels) {
  return make(GraphMode::Reflexive, n, edges, std::move(labels));
}

Graph Graph::loop(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels) {
  return make(GraphMode::Loop, n, edges, std::move(labels));
}

Graph Graph::make(GraphMode mode, int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->mode = mode;
  impl->adj.assign(n, BitMask(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v && mode == GraphMode::Reflexive)
      throw std::invalid_argument("reflexive graphs keep loops implicit");
    impl->adj[u].set(v);
    impl->adj[v].set(u);
  }
  if (labels.empty()) {
    impl->labels = default_labels(n);
  } else {
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("label count does not match vertex count");
    impl->labels = std::move(labels);
  }
  return Graph(impl);
}

int Graph::vertex_count() const { return impl_->n; }
GraphMode Graph::mode() const { return impl_->mode; }

bool Graph::has_edge(int u, int v) const {
  if (u == v && impl_->mode == GraphMode::Reflexive) return true;
  return impl_->adj[u].test(v);
}

bool Graph::looped(int v) const {
  if (impl_->mode == GraphMode::Reflexive) return true;
  return impl_->adj[v].test(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < impl_->n; ++u)
    for (int v = u; v < impl_->n; ++v)
      if (impl_->adj[u].test(v)) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(int v) const { return impl_->labels.at(v); }
const std::vector<std::string>& Graph::labels() const { return impl_->labels; }

std::optional<int> Graph::vertex_by_label(const std::string& name) const {
  for (int v = 0; v < impl_->n; ++v)
    if (impl_->labels[v] == name) return v;
  return std::nullopt;
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
  return make(impl_->mode, impl_->n, edges(), std::move(labels));
}

bool Graph::operator==(const Graph& other) const {
  return impl_->mode == other.impl_->mode && impl_->n == other.impl_->n &&
         impl_->adj == other.impl_->adj;
}

const std::vector<BitMask>& Graph::adjacency() const { return impl_->adj; }

// ---- GraphMap -------------------------------------------------------------

bool is_graph_hom(const Graph& g, const Graph& h, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
  for (int v : assignment)
    if (v < 0 || v >= h.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(assignment[u], assignment[v])) return false;
  return true;
}

GraphMap::GraphMap(Graph source, Graph target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
  if (source_.mode() != target_.mode())
    throw std::invalid_argument("graph map endpoints must share a mode");
  if (!is_graph_hom(source_, target_, map_))
    throw std::invalid_argument("assignment is not a graph homomorphism");
}

bool GraphMap::operator==(const GraphMap& other) const {
  return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
}

// ---- standard graphs --------------------------------------------------------

Graph complete_reflexive(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::reflexive(n, e);
}

Graph complete_unlooped(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::loop(n, e);
}

Graph path_reflexive(int n) {
  if (n < 0) throw std::invalid_argument("path_reflexive: n must be >= 0");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph::reflexive(n + 1, e);
}

Graph cycle_reflexive(int n) {
  if (n < 3) throw std::invalid_argument("cycle_reflexive: n must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::reflexive(n, e);
}

Graph discrete_reflexive(int n) { return Graph::reflexive(n, {}); }

// ---- functors -----------------------------------------------------------------

Graph skeleton1(const Complex& k) {
  std::vector<std::pair<int, int>> e;
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) e.emplace_back(f[i], f[j]);
  return Graph::reflexive(k.vertex_count(), e, k.labels());
}

Complex clique_complex(const Graph& g) {
  if (g.mode() != GraphMode::Reflexive)
    throw std::invalid_argument("clique_complex needs a reflexive graph; apply max_reflexive first");
  const int n = g.vertex_count();
  std::vector<BitMask> adj(n, BitMask(n));
  for (auto [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  for (int v = 0; v < n; ++v) adj[v].reset(v);
  return Complex::from_facets(n, maximal_cliques(adj), g.labels());
}

Graph max_reflexive(const Graph& g) {
  if (g.mode() != GraphMode::Loop)
    throw std::invalid_argument("max_reflexive expects a loop graph");
  VSet keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.looped(v)) keep.push_back(v);
  std::vector<int> back(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) back[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    if (u != v && back[u] >= 0 && back[v] >= 0) e.emplace_back(back[u], back[v]);
  std::vector<std::string> labels;
  for (int v : keep) labels.push_back(g.label(v));
  return Graph::reflexive(static_cast<int>(keep.size()), e, std::move(labels));
}

Graph add_loops(const Graph& g) {
  if (g.mode() != GraphMode::Loop)
    throw std::invalid_argument("add_loops expects a loop graph");
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    if (u != v) e.emplace_back(u, v);
  return Graph::reflexive(g.vertex_count(), e, g.labels());
}

Graph as_loop(const Graph& g) {
  if (g.mode() != GraphMode::Reflexive)
    throw std::invalid_argument("as_loop expects a reflexive graph");
  std::vector<std::pair<int, int>> e = g.edges();
  for (int v = 0; v < g.vertex_count(); ++v) e.emplace_back(v, v);
  return Graph::loop(g.vertex_count(), e, g.labels());
}

Graph graph_product(const Graph& g, const Graph& h) {
  if (g.mode() != h.mode())
    throw std::invalid_argument("graph_product needs matching modes");
  const int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> e;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ng) * nh);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      for (int c = a; c < ng; ++c)
        for (int d = 0; d < nh; ++d) {
          int p = a * nh + b, q = c * nh + d;
          if (q < p) continue;
          if (p == q && g.mode() == GraphMode::Reflexive) continue;
          if (g.has_edge(a, c) && h.has_edge(b, d)) e.emplace_back(p, q);
        }
  return g.mode() == GraphMode::Reflexive ? Graph::reflexive(ng * nh, e, std::move(labels))
                                          : Graph::loop(ng * nh, e, std::move(labels));
}

// ---- exponentials --------------------------------------------------------------

namespace {

std::vector<std::vector<int>> all_functions(int src, int tgt, std::int64_t max_count) {
  double estimate = 1.0;
  for (int i = 0; i < src; ++i) {
    estimate *= std::max(1, tgt);
    if (estimate > static_cast<double>(max_count))
      throw BudgetError("exponential: vertex budget exceeded");
  }
  if (src > 0 && tgt == 0) return {};
  std::int64_t total = 1;
  for (int i = 0; i < src; ++i) total *= tgt;
  std::vector<std::vector<int>> out(total, std::vector<int>(src, 0));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t x = idx;
    for (int v = src - 1; v >= 0; --v) {
      out[idx][v] = static_cast<int>(x % tgt);
      x /= tgt;
    }
  }
  return out;
}

bool exp_edge(const Graph& g, const Graph& h, const std::vector<std::pair<int, int>>& ge,
              const std::vector<int>& f, const std::vector<int>& fp) {
  for (auto [x, y] : ge) {
    if (!h.has_edge(f[x], fp[y])) return false;
    if (!h.has_edge(f[y], fp[x])) return false;
  }
  return true;
}

GraphExpResult exponential_loop_impl(const Graph& h, const Graph& g,
                                     std::int64_t max_vertices, bool parallel) {
  if (h.mode() != GraphMode::Loop || g.mode() != GraphMode::Loop)
    throw std::invalid_argument("exponential_loop expects loop graphs");
  GraphExpResult out;
  out.vertex_maps = all_functions(g.vertex_count(), h.vertex_count(), max_vertices);
  const int n = static_cast<int>(out.vertex_maps.size());
  const auto ge = g.edges();

  std::vector<BitMask> adj(n, BitMask(n));
  auto fill_row = [&](std::int64_t i) {
    for (int j = 0; j < n; ++j)
      if (exp_edge(g, h, ge, out.vertex_maps[i], out.vertex_maps[j])) adj[i].set(j);
  };
  if (parallel) {
    par::for_index(n, fill_row);
  } else {
    for (int i = 0; i < n; ++i) fill_row(i);
  }

  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (adj[i].test(j)) e.emplace_back(i, j);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string name = "f";
    for (int v : out.vertex_maps[i]) name += "." + h.label(v);
    labels.push_back(std::move(name));
  }
  out.graph = Graph::loop(n, e, std::move(labels));
  return out;
}

}  // namespace

GraphExpResult exponential_loop(const Graph& h, const Graph& g, std::int64_t max_vertices) {
  return exponential_loop_impl(h, g, max_vertices, par::enabled());
}

GraphExpResult exponential_loop_serial(const Graph& h, const Graph& g,
                                       std::int64_t max_vertices) {
  return exponential_loop_impl(h, g, max_vertices, false);
}

GraphExpResult exponential_reflexive(const Graph& h, const Graph& g,
                                     std::int64_t max_vertices) {
  if (h.mode() != GraphMode::Reflexive || g.mode() != GraphMode::Reflexive)
    throw std::invalid_argument("exponential_reflexive expects reflexive graphs");
  GraphExpResult loop_exp = exponential_loop(as_loop(h), as_loop(g), max_vertices);
  GraphExpResult out;
  out.graph = max_reflexive(loop_exp.graph);
  for (int v = 0; v < loop_exp.graph.vertex_count(); ++v)
    if (loop_exp.graph.looped(v)) out.vertex_maps.push_back(loop_exp.vertex_maps[v]);
  return out;
}

// ---- homomorphism enumeration ----------------------------------------------------

namespace {

// Backtracking over vertices in id order; edges are checked as soon as both
// endpoints are assigned.
struct HomEnumerator {
  const Graph& g;
  const Graph& h;
  std::int64_t budget;
  std::vector<std::vector<std::pair<int, int>>> pending;  // by max endpoint
  std::vector<int> partial;
  std::vector<std::vector<int>> out;

  HomEnumerator(const Graph& gg, const Graph& hh, std::int64_t b)
      : g(gg), h(hh), budget(b), pending(gg.vertex_count()),
        partial(gg.vertex_count(), -1) {
    for (auto [u, v] : g.edges()) pending[std::max(u, v)].emplace_back(u, v);
  }

  void rec(int v) {
    if (budget-- <= 0) throw BudgetError("hom enumeration budget exceeded");
    if (v == g.vertex_count()) {
      out.push_back(partial);
      return;
    }
    for (int w = 0; w < h.vertex_count(); ++w) {
      partial[v] = w;
      bool ok = true;
      for (auto [x, y] : pending[v])
        if (!h.has_edge(partial[x], partial[y])) {
          ok = false;
          break;
        }
      if (ok) rec(v + 1);
    }
    partial[v] = -1;
  }
};

std::vector<std::vector<int>> hom_assignments_serial(const Graph& g, const Graph& h,
                                                     std::int64_t budget) {
  if (g.vertex_count() == 0) return {{}};
  if (h.vertex_count() == 0) return {};
  HomEnumerator e(g, h, budget);
  e.rec(0);
  return std::move(e.out);
}

std::vector<std::vector<int>> hom_assignments(const Graph& g, const Graph& h,
                                              std::int64_t budget) {
  const int nh = h.vertex_count();
  if (!par::enabled() || g.vertex_count() < 2 || nh < 2)
    return hom_assignments_serial(g, h, budget);

  // split on the image of vertex 0; branch outputs concatenate in image
  // order, matching the serial enumeration exactly
  std::vector<std::vector<std::vector<int>>> parts(nh);
  std::vector<std::exception_ptr> errors(nh);
  par::for_index(nh, [&](std::int64_t w) {
    try {
      HomEnumerator e(g, h, budget / nh + 1);
      e.partial[0] = static_cast<int>(w);
      bool ok = true;
      for (auto [x, y] : e.pending[0])
        if (!h.has_edge(e.partial[x], e.partial[y])) ok = false;
      if (ok) e.rec(1);
      parts[w] = std::move(e.out);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  });
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  std::vector<std::vector<int>> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<GraphMap> enumerate_homs(const Graph& g, const Graph& h, std::int64_t budget) {
  std::vector<GraphMap> out;
  for (auto& a : hom_assignments(g, h, budget)) out.emplace_back(g, h, std::move(a));
  return out;
}

std::vector<GraphMap> enumerate_homs_serial(const Graph& g, const Graph& h,
                                            std::int64_t budget) {
  std::vector<GraphMap> out;
  for (auto& a : hom_assignments_serial(g, h, budget)) out.emplace_back(g, h, std::move(a));
  return out;
}

std::size_t count_homs(const Graph& g, const Graph& h, std::int64_t budget) {
  return hom_assignments(g, h, budget).size();
}

Complex hom_complex(const Graph& g, const Graph& h, std::int64_t max_vertices) {
  if (g.mode() != GraphMode::Loop || h.mode() != GraphMode::Loop)
    throw std::invalid_argument("hom_complex expects loop graphs");
  return clique_complex(max_reflexive(exponential_loop(h, g, max_vertices).graph));
}

}  // namespace xho
