#include "xho/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xho {

namespace {

Inclusion labeled_inclusion(Complex source, Complex target) {
  auto inc = subcomplex_inclusion(source, target);
  if (!inc) throw std::logic_error("generator source failed to embed");
  return Inclusion{std::move(source), std::move(target), std::move(*inc)};
}

}  // namespace

Inclusion gen_cofibration(int n, int size_budget) {
  if (n < 0) throw std::invalid_argument("gen_cofibration: n must be >= 0");
  if (n > size_budget) throw BudgetError("gen_cofibration: n exceeds size budget");
  Complex src = n == 0 ? Complex() : sd2(boundary(n)).complex();
  Complex tgt = sd2(delta(n)).complex();
  return labeled_inclusion(std::move(src), std::move(tgt));
}

Inclusion gen_trivial_cofibration(int n, int k, int size_budget) {
  if (n < 1) throw std::invalid_argument("gen_trivial_cofibration: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("gen_trivial_cofibration: k out of range");
  if (n > size_budget) throw BudgetError("gen_trivial_cofibration: n exceeds size budget");
  return labeled_inclusion(sd2(horn(n, k)).complex(), sd2(delta(n)).complex());
}

Inclusion edge_generator() {
  Complex src = point();
  Complex tgt = path_complex(1);
  return Inclusion{src, tgt, VertexMap(src, tgt, {0})};
}

Inclusion generator_for(const Attachment& a) {
  switch (a.kind) {
    case GenKind::Boundary:
      return gen_cofibration(a.n);
    case GenKind::Horn:
      return gen_trivial_cofibration(a.n, a.k);
    case GenKind::Edge:
      return edge_generator();
  }
  throw std::logic_error("unreachable");
}

Complex attach(const Complex& stage, const Inclusion& gen, const VertexMap& attaching) {
  if (attaching.source() != gen.source || attaching.target() != stage)
    throw std::invalid_argument("attach: attaching map endpoints are wrong");
  PushoutResult po = pushout_mono(gen.map, attaching);

  // fresh cell vertices may reuse generator labels already present in the
  // stage; uniquify so later label lookups stay well-defined
  std::set<std::string> used;
  std::vector<std::string> labels = po.complex.labels();
  for (int v = 0; v < stage.vertex_count(); ++v) used.insert(labels[v]);
  for (int v = stage.vertex_count(); v < po.complex.vertex_count(); ++v) {
    while (used.count(labels[v])) labels[v] += "'";
    used.insert(labels[v]);
  }
  return po.complex.relabeled(std::move(labels));
}

std::vector<Complex> replay_cell_structure(const CellStructure& cs) {
  std::vector<Complex> stages{cs.base};
  for (const auto& a : cs.attachments) {
    Inclusion gen = generator_for(a);
    const Complex& stage = stages.back();
    if (static_cast<int>(a.attach_labels.size()) != gen.source.vertex_count())
      throw std::invalid_argument("attachment label count mismatch");
    std::vector<int> assign(a.attach_labels.size());
    for (std::size_t v = 0; v < a.attach_labels.size(); ++v) {
      auto w = stage.vertex_by_label(a.attach_labels[v]);
      if (!w) throw std::invalid_argument("attachment names unknown stage vertex " +
                                          a.attach_labels[v]);
      assign[v] = *w;
    }
    VertexMap attaching(gen.source, stage, std::move(assign));
    stages.push_back(attach(stage, gen, attaching));
  }
  return stages;
}

bool verify_cell_structure(const CellStructure& cs) {
  try {
    replay_cell_structure(cs);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

CellStructure tree_cell_structure(int extra_edges) {
  if (extra_edges < 0) throw std::invalid_argument("negative edge count");
  CellStructure cs{point(), {}};
  std::vector<Complex> stages = {cs.base};
  std::string leaf = cs.base.label(0);
  for (int i = 0; i < extra_edges; ++i) {
    Attachment a{GenKind::Edge, 1, 0, {leaf}};
    cs.attachments.push_back(a);
    stages = replay_cell_structure(cs);
    // grow from the vertex added last
    const Complex& top = stages.back();
    leaf = top.label(top.vertex_count() - 1);
  }
  return cs;
}

CellStructure cycle_cell_structure() {
  // both endpoints of Sd^2 Delta^1 = I_4 glued to one point: the 4-cycle
  CellStructure cs{point(), {}};
  Inclusion gen = gen_cofibration(1);
  std::vector<std::string> attach_labels(gen.source.vertex_count(), cs.base.label(0));
  cs.attachments.push_back(Attachment{GenKind::Boundary, 1, 0, attach_labels});
  return cs;
}

CellStructure sphere_cell_structure(int n) {
  // two copies of Sd^2 Delta^n glued along Sd^2 boundary(n)
  Inclusion gen = gen_cofibration(n);
  CellStructure cs{gen.source, {}};
  std::vector<std::string> identity_labels;
  for (int v = 0; v < gen.source.vertex_count(); ++v)
    identity_labels.push_back(gen.source.label(v));
  cs.attachments.push_back(Attachment{GenKind::Boundary, n, 0, identity_labels});
  cs.attachments.push_back(Attachment{GenKind::Boundary, n, 0, identity_labels});
  return cs;
}

PathRetraction path_retraction(int n) {
  if (n < 1) throw std::invalid_argument("path_retraction: n must be >= 1");
  Complex in = path_complex(n);
  Complex i4n = path_complex(4 * n);
  std::vector<int> j(n + 1), r(4 * n + 1);
  for (int v = 0; v <= n; ++v) j[v] = v;
  for (int v = 0; v <= 4 * n; ++v) r[v] = std::min(v, n);
  return PathRetraction{VertexMap(in, i4n, std::move(j)), VertexMap(i4n, in, std::move(r))};
}

// ---- lifting ---------------------------------------------------------------------

void LiftingProblem::validate() const {
  if (i.source() != top.source()) throw std::invalid_argument("lifting square: A mismatch");
  if (i.target() != bottom.source()) throw std::invalid_argument("lifting square: B mismatch");
  if (p.source() != top.target()) throw std::invalid_argument("lifting square: X mismatch");
  if (p.target() != bottom.target()) throw std::invalid_argument("lifting square: Y mismatch");
  for (int a = 0; a < i.source().vertex_count(); ++a)
    if (p(top(a)) != bottom(i(a)))
      throw std::invalid_argument("lifting square does not commute");
}

Outcome<VertexMap> solve_lifting(const LiftingProblem& lp, std::int64_t budget) {
  lp.validate();
  const Complex& b = lp.i.target();
  const Complex& x = lp.p.source();

  std::vector<int> partial(b.vertex_count(), -1);
  for (int a = 0; a < lp.i.source().vertex_count(); ++a) {
    int bv = lp.i(a);
    int want = lp.top(a);
    if (partial[bv] >= 0 && partial[bv] != want)
      return Outcome<VertexMap>::no();  // i collapses vertices with different tops
    partial[bv] = want;
  }
  // fixed part must already satisfy the bottom triangle
  for (int bv = 0; bv < b.vertex_count(); ++bv)
    if (partial[bv] >= 0 && lp.p(partial[bv]) != lp.bottom(bv))
      return Outcome<VertexMap>::no();

  // candidate images are restricted by p o h = bottom; encode the
  // restriction by checking inside the callback-driven enumeration
  std::optional<std::vector<int>> found;
  struct Solver {
    const LiftingProblem& lp;
    const Complex& b;
    const Complex& x;
    std::int64_t budget;
    bool budget_hit = false;
    std::vector<int> assign;
    std::vector<int> free_vertices;
    std::vector<std::vector<const VSet*>> check_at;
    std::optional<std::vector<int>>& found;

    Solver(const LiftingProblem& l, std::vector<int> partial,
           std::optional<std::vector<int>>& out, std::int64_t bud)
        : lp(l), b(l.i.target()), x(l.p.source()), budget(bud),
          assign(std::move(partial)), found(out) {
      std::vector<int> rank(b.vertex_count(), -1);
      for (int v = 0; v < b.vertex_count(); ++v)
        if (assign[v] < 0) {
          rank[v] = static_cast<int>(free_vertices.size());
          free_vertices.push_back(v);
        }
      check_at.resize(free_vertices.size() + 1);
      for (const auto& f : b.facets()) {
        int last = -1;
        for (int v : f) last = std::max(last, rank[v]);
        check_at[last + 1].push_back(&f);
      }
    }

    bool ok_at(std::size_t idx) const {
      for (const VSet* f : check_at[idx])
        if (!x.has_face(image_of(assign, *f))) return false;
      return true;
    }

    void rec(std::size_t idx) {
      if (found || budget_hit) return;
      if (budget-- <= 0) {
        budget_hit = true;
        return;
      }
      if (idx == free_vertices.size()) {
        found = assign;
        return;
      }
      int v = free_vertices[idx];
      for (int w = 0; w < x.vertex_count(); ++w) {
        if (lp.p(w) != lp.bottom(v)) continue;  // bottom triangle
        assign[v] = w;
        if (ok_at(idx + 1)) rec(idx + 1);
        if (found || budget_hit) return;
      }
      assign[v] = -1;
    }
  };

  Solver solver(lp, std::move(partial), found, budget);
  if (!solver.ok_at(0)) return Outcome<VertexMap>::no();
  solver.rec(0);
  if (found) return Outcome<VertexMap>::found(VertexMap(b, x, std::move(*found)));
  return solver.budget_hit ? Outcome<VertexMap>::unknown() : Outcome<VertexMap>::no();
}

FibrationReport is_trivial_fibration_up_to(const VertexMap& p, int n_max,
                                           std::int64_t square_budget,
                                           std::int64_t lift_budget) {
  FibrationReport report;
  report.n_max = n_max;
  bool saw_unknown = false;

  for (int n = 0; n <= n_max; ++n) {
    Inclusion gen = gen_cofibration(n, std::max(n_max, 4));
    const Complex& a = gen.source;
    const Complex& b = gen.target;

    std::int64_t squares_left = square_budget;
    bool failed = false;

    // lexicographic tops A -> X; for each, extensions of p o top along the
    // generator inclusion enumerate the commuting bottoms B -> Y
    for_each_simplicial_map(a, p.source(), 1000000000LL, [&](const std::vector<int>& top) {
      std::vector<int> forced(b.vertex_count(), -1);
      for (int av = 0; av < a.vertex_count(); ++av)
        forced[gen.map(av)] = p(top[av]);
      for_each_simplicial_extension(
          b, p.target(), forced, 1000000000LL, [&](const std::vector<int>& bottom) {
            LiftingProblem lp{gen.map, p, VertexMap(a, p.source(), top),
                              VertexMap(b, p.target(), bottom)};
            auto lift = solve_lifting(lp, lift_budget);
            ++report.squares_checked;
            if (lift.is_no()) failed = true;
            if (lift.is_unknown()) saw_unknown = true;
            --squares_left;
            return !failed && squares_left > 0;
          });
      return !failed && squares_left > 0;
    });
    if (failed) {
      report.verdict = Status::No;
      return report;
    }
  }
  report.verdict = saw_unknown ? Status::Unknown : Status::Found;
  return report;
}

}  // namespace xho
