#include "xho/collapse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xho {

std::optional<int> dominated(const Complex& k, int v) {
  if (v < 0 || v >= k.vertex_count())
    throw std::invalid_argument("dominated: vertex out of range");
  // intersection of all facets through v, minus v itself
  BitMask common(k.vertex_count());
  bool first = true;
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    const auto& f = k.facets()[i];
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    if (first) {
      common = k.facet_masks()[i];
      first = false;
    } else {
      common &= k.facet_masks()[i];
    }
  }
  if (first) return std::nullopt;  // no facet contains v
  common.reset(v);
  for (int w = 0; w < k.vertex_count(); ++w)
    if (common.test(w)) return w;
  return std::nullopt;
}

Complex elementary_collapse(const Complex& k, int v) {
  if (!dominated(k, v))
    throw std::invalid_argument("elementary_collapse: vertex is not dominated");
  return deletion(k, {v});
}

namespace {

// every facet through v also contains w
bool dominates(const Complex& k, int v, int w) {
  if (v == w) return false;
  bool any = false;
  for (const auto& f : k.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    any = true;
    if (!std::binary_search(f.begin(), f.end(), w)) return false;
  }
  return any;
}

}  // namespace

Complex replay(const Complex& k, const CollapseSequence& seq) {
  Complex cur = k;
  for (const auto& [deleted, dominator] : seq.steps) {
    auto v = cur.vertex_by_label(deleted);
    if (!v) throw std::invalid_argument("replay: unknown vertex " + deleted);
    auto w = cur.vertex_by_label(dominator);
    if (!w) throw std::invalid_argument("replay: unknown dominator " + dominator);
    if (!dominates(cur, *v, *w))
      throw std::invalid_argument("replay: " + deleted + " is not dominated by " + dominator);
    cur = deletion(cur, {*v});
  }
  return cur;
}

std::pair<Complex, CollapseSequence> core(const Complex& k) {
  Complex cur = k;
  CollapseSequence seq;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < cur.vertex_count(); ++v) {
      if (auto d = dominated(cur, v)) {
        seq.steps.emplace_back(cur.label(v), cur.label(*d));
        cur = deletion(cur, {v});
        progress = true;
        break;
      }
    }
  }
  return {cur, seq};
}

// ---- protected collapse search -----------------------------------------------

namespace {

struct ProtectedSearch {
  const Complex& target;  // k, matched by label
  std::int64_t budget;
  bool budget_hit = false;
  std::set<std::vector<VSet>> seen;  // facet sets already explored
  CollapseSequence found;

  explicit ProtectedSearch(const Complex& k, std::int64_t b) : target(k), budget(b) {}

  bool reached(const Complex& cur) const {
    if (cur.vertex_count() != target.vertex_count()) return false;
    if (cur.facets().size() != target.facets().size()) return false;
    // exact facet-set equality under label translation
    std::vector<VSet> translated;
    translated.reserve(target.facets().size());
    for (const auto& f : target.facets()) {
      VSet img;
      img.reserve(f.size());
      for (int v : f) {
        auto w = cur.vertex_by_label(target.label(v));
        if (!w) return false;
        img.push_back(*w);
      }
      std::sort(img.begin(), img.end());
      translated.push_back(std::move(img));
    }
    std::sort(translated.begin(), translated.end());
    return translated == cur.facets();
  }

  bool protected_vertex(const Complex& cur, int v) const {
    return target.vertex_by_label(cur.label(v)).has_value();
  }

  bool dfs(const Complex& cur, CollapseSequence& trail) {
    if (reached(cur)) {
      found = trail;
      return true;
    }
    if (budget-- <= 0) {
      budget_hit = true;
      return false;
    }
    if (!seen.insert(cur.facets()).second) return false;
    for (int v = 0; v < cur.vertex_count(); ++v) {
      if (protected_vertex(cur, v)) continue;
      auto d = dominated(cur, v);
      if (!d) continue;
      trail.steps.emplace_back(cur.label(v), cur.label(*d));
      if (dfs(deletion(cur, {v}), trail)) return true;
      trail.steps.pop_back();
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

Outcome<CollapseSequence> collapses_to(const Complex& l, const Complex& k,
                                       std::int64_t budget) {
  if (!is_subcomplex(k, l))
    throw std::invalid_argument("collapses_to: k is not a subcomplex of l");

  // greedy pass: delete the least dominated unprotected vertex until stuck
  {
    Complex cur = l;
    CollapseSequence seq;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int v = 0; v < cur.vertex_count(); ++v) {
        if (k.vertex_by_label(cur.label(v))) continue;
        if (auto d = dominated(cur, v)) {
          seq.steps.emplace_back(cur.label(v), cur.label(*d));
          cur = deletion(cur, {v});
          progress = true;
          break;
        }
      }
    }
    ProtectedSearch probe(k, 1);
    if (probe.reached(cur)) return Outcome<CollapseSequence>::found(std::move(seq));
  }

  // full backtracking within budget
  ProtectedSearch search(k, budget);
  CollapseSequence trail;
  if (search.dfs(l, trail)) return Outcome<CollapseSequence>::found(std::move(search.found));
  if (search.budget_hit) return Outcome<CollapseSequence>::unknown();
  return Outcome<CollapseSequence>::no();
}

// ---- NDR witnesses ---------------------------------------------------------------

namespace {

bool faces_contained(const Complex& part, const Complex& whole) {
  // every facet of part, translated by label, is a face of whole
  for (const auto& f : part.facets()) {
    VSet img;
    img.reserve(f.size());
    for (int v : f) {
      auto w = whole.vertex_by_label(part.label(v));
      if (!w) return false;
      img.push_back(*w);
    }
    std::sort(img.begin(), img.end());
    if (!whole.has_face(img)) return false;
  }
  return true;
}

}  // namespace

Outcome<NdrWitness> ndr_witness(const Complex& l, const Complex& k, std::int64_t budget) {
  if (!is_subcomplex(k, l))
    throw std::invalid_argument("ndr_witness: k is not a subcomplex of l");

  Complex nbhd = neighborhood(l, k);
  VSet span;
  for (const auto& name : nbhd.labels()) span.push_back(*l.vertex_by_label(name));
  for (const auto& name : k.labels()) span.push_back(*l.vertex_by_label(name));
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());

  bool saw_unknown = false;
  while (true) {
    Complex l_prime = induced_subcomplex(l, span);
    auto seq = collapses_to(l_prime, k, budget);
    if (seq.is_found())
      return Outcome<NdrWitness>::found(NdrWitness{l_prime, std::move(*seq.value)});
    if (seq.is_unknown()) saw_unknown = true;
    if (static_cast<int>(span.size()) == l.vertex_count()) break;
    // grow by the least absent vertex and retry
    for (int v = 0; v < l.vertex_count(); ++v)
      if (!std::binary_search(span.begin(), span.end(), v)) {
        span.insert(std::lower_bound(span.begin(), span.end(), v), v);
        break;
      }
  }
  return saw_unknown ? Outcome<NdrWitness>::unknown() : Outcome<NdrWitness>::no();
}

bool verify_ndr(const Complex& l, const Complex& k, const NdrWitness& w) {
  if (!is_subcomplex(w.l_prime, l)) return false;
  if (!faces_contained(neighborhood(l, k), w.l_prime)) return false;
  try {
    Complex end = replay(w.l_prime, w.collapse);
    // replay must land exactly on k (label-matched structural equality)
    if (end.vertex_count() != k.vertex_count()) return false;
    if (!is_subcomplex(k, end) || !is_subcomplex(end, k)) return false;
    if (end.facets().size() != k.facets().size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  // the collapse must never delete a vertex of k
  for (const auto& [deleted, dominator] : w.collapse.steps)
    if (k.vertex_by_label(deleted)) return false;
  return true;
}

// ---- collapse -> retraction --------------------------------------------------------

Retraction retraction_from_collapse(const Complex& l, const Complex& k,
                                    const CollapseSequence& seq) {
  auto inc = subcomplex_inclusion(k, l);
  if (!inc) throw std::invalid_argument("retraction_from_collapse: k is not a subcomplex of l");

  // running self-map of l: each step rewrites every occurrence of the
  // deleted vertex to its dominator
  std::vector<std::vector<int>> chain;
  std::vector<int> cur(l.vertex_count());
  for (int v = 0; v < l.vertex_count(); ++v) cur[v] = v;
  chain.push_back(cur);
  for (const auto& [deleted, dominator] : seq.steps) {
    auto dv = l.vertex_by_label(deleted);
    auto mv = l.vertex_by_label(dominator);
    if (!dv || !mv)
      throw std::invalid_argument("retraction_from_collapse: step names unknown vertex");
    for (int v = 0; v < l.vertex_count(); ++v)
      if (cur[v] == *dv) cur[v] = *mv;
    chain.push_back(cur);
  }

  // corestrict the final map to k
  std::vector<int> back_to_k(l.vertex_count(), -1);
  for (int v = 0; v < k.vertex_count(); ++v) back_to_k[inc->assignment()[v]] = v;
  std::vector<int> r_assign(l.vertex_count());
  for (int v = 0; v < l.vertex_count(); ++v) {
    if (back_to_k[cur[v]] < 0)
      throw std::invalid_argument("retraction_from_collapse: sequence does not land in k");
    r_assign[v] = back_to_k[cur[v]];
  }
  return Retraction{*inc, VertexMap(l, k, std::move(r_assign)),
                    ContiguityChain(l, l, std::move(chain))};
}

}  // namespace xho
