#include "cvd/kernel.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "cvd/clique_shrink.hpp"
#include "cvd/expansion.hpp"

namespace cvd {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Reduced: return "reduced";
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
  }
  return "?";
}

void BoundLog::check(const std::string& name, bool ok, const std::string& detail) {
  ++checks[name];
  if (!ok) violations.push_back(name + (detail.empty() ? "" : ": " + detail));
}

void BoundLog::merge(const BoundLog& other) {
  for (const auto& [name, n] : other.checks) checks[name] += n;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

AnnotatedInstance canonical_yes(int k) { return AnnotatedInstance(Graph{}, k); }

AnnotatedInstance canonical_no() {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex();
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 1);
  return AnnotatedInstance(std::move(g), 0);
}

namespace {

bool is_clique(const Graph& g, const VertexList& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

std::size_t relevant_edge_count(const AnnotatedInstance& inst) {
  return inst.graph.num_edges() - inst.labels.size();
}

// Lexicographic progress measure; every rule application must decrease it.
using Measure = std::tuple<std::size_t, long long, std::size_t>;
Measure measure(const AnnotatedInstance& inst) {
  return {inst.graph.num_vertices(), -static_cast<long long>(inst.count(EdgeLabel::Mandatory)),
          relevant_edge_count(inst)};
}

}  // namespace

Step rule_incident_mandatory(Editor& ed) {
  AnnotatedInstance& inst = ed.instance();
  bool changed = false;
  while (true) {
    VertexId hit = 0;
    for (VertexId v : inst.mandatory_endpoints())
      if (inst.mandatory_degree(v) >= static_cast<std::size_t>(inst.k) + 1) {
        hit = v;
        break;
      }
    if (hit == 0) break;
    ed.count("rule2");
    if (!ed.apply("rule2", OpKind::Solution, {hit})) return Step::No;
    changed = true;
  }
  const auto k = static_cast<std::size_t>(inst.k);
  if (inst.count(EdgeLabel::Mandatory) > k * k) return Step::No;
  return changed ? Step::Changed : Step::None;
}

IndependentDegreeContext independent_context(const AnnotatedInstance& inst, VertexId v, const VertexList& blocker) {
  const Graph& g = inst.graph;
  IndependentDegreeContext ctx;
  ctx.v = v;
  ctx.blocker = blocker;
  VertexList nr = set_difference(relevant_neighbors(inst, v), blocker);
  ctx.independent = mis_chordal(g.induced(nr));
  VertexList nv(g.neighbors(v).begin(), g.neighbors(v).end());
  ctx.rest = set_difference(nv, set_union(blocker, ctx.independent));

  VertexList removed = set_union(set_union(VertexList{v}, blocker), ctx.rest);
  Graph h = g.without(removed);
  std::map<VertexId, int> comp_of;
  for (VertexId z : ctx.independent) {
    if (comp_of.contains(z)) {
      throw InvariantError("independent component of " + std::to_string(v) + " holds two vertices of I");
    }
    VertexList comp;
    std::deque<VertexId> queue{z};
    comp_of[z] = static_cast<int>(ctx.components.size());
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (VertexId y : h.neighbors(x))
        if (!comp_of.contains(y)) {
          comp_of[y] = static_cast<int>(ctx.components.size());
          queue.push_back(y);
        }
    }
    normalize(comp);
    for (VertexId y : comp)
      if (y != z && g.has_edge(v, y))
        throw InvariantError("independent component holds a second neighbor of " + std::to_string(v));
    ctx.components.push_back(std::move(comp));
    ctx.z.push_back(z);
  }
  // Every X vertex seeing a component also sees its I-vertex.
  for (std::size_t i = 0; i < ctx.components.size(); ++i)
    for (VertexId x : ctx.rest) {
      bool touches = std::any_of(ctx.components[i].begin(), ctx.components[i].end(),
                                 [&](VertexId y) { return g.has_edge(x, y); });
      if (touches && !g.has_edge(x, ctx.z[i]))
        throw InvariantError("X vertex " + std::to_string(x) + " misses the I-vertex of its component");
    }
  return ctx;
}

HHat build_hhat(const AnnotatedInstance& inst, const IndependentDegreeContext& ctx) {
  const Graph& g = inst.graph;
  HHat hh;
  hh.edges.resize(ctx.blocker.size());
  for (std::size_t bi = 0; bi < ctx.blocker.size(); ++bi) {
    VertexId b = ctx.blocker[bi];
    bool close = g.has_edge(b, ctx.v);
    (close ? hh.close : hh.far).push_back(b);
    for (std::size_t i = 0; i < ctx.components.size(); ++i) {
      const auto& comp = ctx.components[i];
      bool touches = std::any_of(comp.begin(), comp.end(), [&](VertexId y) { return g.has_edge(b, y); });
      if (touches && (!close || !g.has_edge(b, ctx.z[i]))) hh.edges[bi].push_back(static_cast<int>(i));
    }
  }
  return hh;
}

Step independent_degree_step(Editor& ed, const VertexList& modulator,
                             const std::map<VertexId, VertexList>& blockers, std::int64_t delta, BoundLog* log) {
  AnnotatedInstance& inst = ed.instance();
  for (VertexId v : inst.graph.vertices()) {
    const VertexList& bv = contains(modulator, v) ? blockers.at(v) : modulator;
    VertexList nr = set_difference(relevant_neighbors(inst, v), bv);
    std::size_t alpha = mis_chordal(inst.graph.induced(nr)).size();
    if (static_cast<std::int64_t>(alpha + bv.size()) <= delta) continue;

    IndependentDegreeContext ctx = independent_context(inst, v, bv);
    HHat hh = build_hhat(inst, ctx);
    std::vector<char> touched(ctx.components.size(), 0);
    for (const auto& list : hh.edges)
      for (int a : list) touched[a] = 1;
    bool any_isolated = false;
    for (std::size_t i = 0; i < ctx.components.size(); ++i)
      if (!touched[i]) {
        ed.count("rule3");
        ed.apply("rule3", OpKind::Irrelevant, {v, ctx.z[i]});
        any_isolated = true;
      }
    if (any_isolated) return Step::Changed;

    Bipartite h(static_cast<int>(bv.size()), static_cast<int>(ctx.components.size()));
    for (std::size_t bi = 0; bi < hh.edges.size(); ++bi)
      for (int a : hh.edges[bi]) h.add_edge(static_cast<int>(bi), a);
    Expansion e = q_expansion(h, inst.k + 2);
    ed.count("rule4");
    for (int bi : e.X) {
      VertexId b = bv[bi];
      if (inst.graph.has_edge(b, v) && inst.label(b, v) == EdgeLabel::Mandatory) continue;
      ed.apply("rule4", OpKind::Mandatory, {b, v});
    }
    for (int a : e.Y) ed.apply("rule4", OpKind::Irrelevant, {v, ctx.z[a]});
    return Step::Changed;
  }
  if (log) log->check("independent-degree<=delta", true);
  return Step::None;
}

namespace {

struct Modulator {
  VertexList approx;                          // provider solution
  std::map<VertexId, VertexList> blockers;    // for members of approx
  VertexList redundant;                       // approx plus blockers
  std::int64_t f = 0;
  std::optional<VertexId> forced;
};

Modulator compute_modulator(const AnnotatedInstance& inst, const SolutionProvider& provider) {
  const Graph& g = inst.graph;
  Modulator m;
  m.approx = provider.solve(g);
  normalize(m.approx);
  if (!is_chordal(g.without(m.approx)))
    throw InvariantError("solution provider '" + provider.name + "' returned a non-solution");
  const int clones = std::max({static_cast<int>(m.approx.size()), inst.k, 1});
  m.redundant = m.approx;
  m.f = static_cast<std::int64_t>(m.approx.size());
  for (VertexId v : m.approx) {
    BlockerResult b = v_blocker(g, v, provider, clones);
    VertexList blocker;
    if (b.is_forced()) {
      // Only an optimal provider certifies that v lies in every small solution.
      if (provider.optimal && clones >= inst.k) {
        m.forced = v;
        return m;
      }
      blocker = greedy_solution(g, v);
    } else {
      blocker = std::move(b.blocker);
    }
    m.f = std::max<std::int64_t>(m.f, static_cast<std::int64_t>(blocker.size()));
    m.redundant = set_union(m.redundant, blocker);
    m.blockers.emplace(v, std::move(blocker));
  }
  return m;
}

}  // namespace

Step bound_independent_degree(Editor& ed, const SolutionProvider& provider, BoundLog* log) {
  bool changed = false;
  while (true) {
    AnnotatedInstance& inst = ed.instance();
    if (is_chordal(inst.graph)) return changed ? Step::Changed : Step::None;
    Modulator m = compute_modulator(inst, provider);
    if (m.forced) {
      ed.count("forced");
      if (!ed.apply("forced", OpKind::Solution, {*m.forced})) return Step::No;
      changed = true;
      continue;
    }
    const std::int64_t delta = (inst.k + 3) * m.f;
    Step s = independent_degree_step(ed, m.approx, m.blockers, delta, log);
    if (s == Step::None) return changed ? Step::Changed : Step::None;
    changed = true;
  }
}

int rule_simplicial_removal(Editor& ed, const VertexList& dprime) {
  AnnotatedInstance& inst = ed.instance();
  int removed = 0;
  bool again = true;
  while (again) {
    again = false;
    for (VertexId v : inst.graph.vertices()) {
      if (contains(dprime, v)) continue;
      if (!is_clique(inst.graph, relevant_neighbors(inst, v))) continue;
      ed.count("rule5");
      ed.apply("rule5", OpKind::Delete, {v});
      ++removed;
      again = true;
      break;
    }
  }
  return removed;
}

PathDecomposition analyze_clique_forest(const AnnotatedInstance& inst, const VertexList& dprime,
                                        std::int64_t delta_prime, BoundLog* log) {
  Graph gd = inst.graph.without(dprime);
  if (!is_chordal(gd)) throw InvariantError("G \\ D' is not chordal");
  PathDecomposition pd;
  pd.forest = clique_forest(gd);
  const CliqueForest& f = pd.forest;
  const int nb = static_cast<int>(f.bags.size());
  auto adj = f.adjacency();
  std::vector<char> has_private(nb, 0);
  for (const auto& [v, bags] : f.bag_of)
    if (bags.size() == 1) has_private[bags.front()] = 1;
  std::vector<char> in_vf(nb, 0);
  for (int i = 0; i < nb; ++i) {
    if (has_private[i]) pd.private_bags.push_back(i);
    if (adj[i].size() <= 1) ++pd.leaves;
    if (adj[i].size() >= 3) ++pd.branch_nodes;
    if (has_private[i] || adj[i].size() >= 3) {
      in_vf[i] = 1;
      pd.vf.push_back(i);
    }
  }
  for (int a : pd.vf)
    for (int b : adj[a]) {
      std::vector<int> path{a};
      int prev = a, cur = b;
      while (!in_vf[cur]) {
        path.push_back(cur);
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      if (path.front() < path.back()) pd.paths.push_back(std::move(path));
    }
  if (log) {
    const std::int64_t cap = static_cast<std::int64_t>(dprime.size()) * delta_prime;
    log->check("bags<=|V|", static_cast<std::size_t>(nb) <= std::max<std::size_t>(gd.num_vertices(), 0));
    log->check("leaves<=|D'|delta'", pd.leaves <= cap, std::to_string(pd.leaves) + " > " + std::to_string(cap));
    log->check("private-bags<=|D'|delta'", static_cast<std::int64_t>(pd.private_bags.size()) <= cap);
    log->check("branch-nodes<=|D'|delta'", pd.branch_nodes <= cap);
    log->check("paths<=2|D'|delta'", static_cast<std::int64_t>(pd.paths.size()) <= 2 * cap);
  }
  return pd;
}

bool complies(const Graph& g, const std::vector<VertexList>& bags, VertexId d) {
  VertexList nd(g.neighbors(d).begin(), g.neighbors(d).end());
  bool all = std::all_of(bags.begin(), bags.end(), [&](const VertexList& b) {
    return std::includes(nd.begin(), nd.end(), b.begin(), b.end());
  });
  if (all) return true;
  std::vector<VertexList> traces;
  for (const auto& b : bags) traces.push_back(set_intersection(b, nd));
  auto nested = [&](bool forward) {
    for (std::size_t i = 0; i + 1 < traces.size(); ++i) {
      const auto& a = forward ? traces[i] : traces[i + 1];
      const auto& b = forward ? traces[i + 1] : traces[i];
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
    return true;
  };
  return nested(true) || nested(false);
}

PathSplit split_path_complying(const Graph& g, const std::vector<VertexList>& bags, const VertexList& dprime) {
  const int t = static_cast<int>(bags.size());
  std::map<VertexId, int> first, last;
  for (int p = 0; p < t; ++p)
    for (VertexId v : bags[p]) {
      if (!first.contains(v)) first[v] = p;
      last[v] = p;
    }
  std::vector<char> removed(t, 0);
  for (VertexId d : dprime) {
    int left = -1, right = -1;
    for (int p = 0; p < t; ++p)
      for (VertexId v : bags[p]) {
        if (!g.has_edge(d, v)) continue;
        if (last[v] == p && left < 0) left = p;
        if (first[v] == p) right = std::max(right, p);
      }
    if (left >= 0) removed[left] = 1;
    if (right >= 0) removed[right] = 1;
  }
  PathSplit s;
  std::vector<int> run;
  for (int p = 0; p <= t; ++p) {
    if (p < t && !removed[p]) {
      run.push_back(p);
      continue;
    }
    if (p < t) s.removed.push_back(p);
    if (!run.empty()) {
      std::vector<VertexList> piece;
      for (int q : run) piece.push_back(bags[q]);
      bool ok = std::all_of(dprime.begin(), dprime.end(), [&](VertexId d) { return complies(g, piece, d); });
      s.pieces.push_back(run);
      s.compliant.push_back(ok);
      run.clear();
    }
  }
  return s;
}

Step reduce_manageable_path(Editor& ed, const std::vector<VertexList>& bags, const VertexList& dprime,
                            std::int64_t small_delta, BoundLog* log) {
  AnnotatedInstance& inst = ed.instance();
  const Graph& g = inst.graph;
  const std::size_t t = bags.size();
  if (t == 0) return Step::None;
  VertexList all, common = bags.front();
  for (const auto& b : bags) {
    all = set_union(all, b);
    common = set_intersection(common, b);
  }
  VertexList u_set = set_difference(all, set_union(bags.front(), bags.back()));
  if (static_cast<std::int64_t>(u_set.size()) <= small_delta) return Step::None;

  VertexList d_all;
  for (VertexId d : dprime)
    if (std::all_of(all.begin(), all.end(), [&](VertexId x) { return g.has_edge(d, x); })) d_all.push_back(d);
  bool added = false;
  for (std::size_t i = 0; i < d_all.size(); ++i)
    for (std::size_t j = i + 1; j < d_all.size(); ++j)
      if (!g.has_edge(d_all[i], d_all[j])) {
        ed.count("rule1");
        ed.apply("rule1", OpKind::Mandatory, {d_all[i], d_all[j]});
        added = true;
      }
  if (added) return Step::Changed;

  const auto k = static_cast<std::size_t>(inst.k);
  // For each separator pattern W keep the index with the fewest U vertices.
  std::map<VertexList, std::pair<std::size_t, std::size_t>> family;
  const VertexList a_or_u = set_union(common, u_set);
  for (std::size_t i = 0; i + 1 < t; ++i) {
    VertexList s = set_intersection(bags[i], bags[i + 1]);
    VertexList w = set_difference(s, a_or_u);
    std::size_t in_u = set_intersection(s, u_set).size();
    if (w.size() > k || in_u > k) continue;
    auto it = family.find(w);
    if (it == family.end() || in_u < it->second.first) family[w] = {in_u, i};
  }
  if (log)
    log->check("W-family<=2k+1", family.size() <= 2 * k + 1,
               std::to_string(family.size()) + " > " + std::to_string(2 * k + 1));
  VertexList m;
  for (const auto& [w, best] : family) {
    std::size_t i = best.second;
    m = set_union(m, set_intersection(set_intersection(bags[i], bags[i + 1]), u_set));
  }
  VertexList candidates = set_difference(u_set, m);
  if (candidates.empty()) throw InvariantError("degree-2 path: U \\ M is empty while |U| > delta");
  ed.count("rule6");
  ed.apply("rule6", OpKind::Saturate, {candidates.front()});
  return Step::Changed;
}

void rule_unmark_mandatory(Editor& ed, BoundLog* log) {
  AnnotatedInstance& inst = ed.instance();
  for (const Edge& e : inst.edges_with(EdgeLabel::Mandatory)) {
    const std::size_t before = inst.graph.num_vertices();
    ed.count("rule7");
    ed.apply("rule7", OpKind::Gadget, {e.first, e.second});
    if (log)
      log->check("gadget==2(k+1)",
                 inst.graph.num_vertices() - before == 2 * static_cast<std::size_t>(inst.k + 1));
  }
  if (!inst.labels.empty()) ed.apply("rule7", OpKind::ClearLabels, {});
}

namespace {

class Pipeline {
public:
  Pipeline(AnnotatedInstance& inst, const KernelOptions& opt) : ed_(inst), opt_(opt) {}

  Verdict run(KernelOutcome& out) {
    Verdict v = loop(out);
    if (v == Verdict::Reduced) rule_unmark_mandatory(ed_, &out.bounds);
    return v;
  }

  Editor& editor() { return ed_; }

private:
  void set_thresholds(KernelOutcome& out, std::int64_t f, std::size_t dprime, std::int64_t path_kappa) {
    const AnnotatedInstance& inst = ed_.instance();
    Thresholds& t = out.thresholds;
    t.k = inst.k;
    t.f = f;
    t.delta = (inst.k + 3) * f;
    t.delta_prime = t.delta + inst.k;
    t.kappa = mark_budget(dprime, inst.k, t.delta).total();
    t.small_delta = 2 * (inst.k + 1) + 6 * t.kappa;
    t.path_kappa = path_kappa;
  }

  Verdict decide(KernelOutcome& out, Verdict v, std::string reason) {
    out.reason = std::move(reason);
    ed_.record("decide", v == Verdict::Yes ? OpKind::DecideYes : OpKind::DecideNo);
    return v;
  }

  Verdict loop(KernelOutcome& out) {
    AnnotatedInstance& inst = ed_.instance();
    std::optional<Measure> last;
    auto progress = [&]() {
      Measure now = measure(inst);
      if (last && !(now < *last)) throw InvariantError("reduction made no progress");
      last = now;
    };
    while (true) {
      ++out.passes;
      if (out.passes > 1) progress();
      else last = measure(inst);
      if (!out.thresholds.k && !out.thresholds.f) set_thresholds(out, 0, 0, 0);

      if (is_chordal(inst.graph)) {
        if (auto cover = annotated_cvd(inst)) {
          out.solution = set_union(VertexList(inst.forced.begin(), inst.forced.end()), *cover);
          return decide(out, Verdict::Yes, "chordal and mandatory edges coverable");
        }
        return decide(out, Verdict::No, "mandatory edges need more than k vertices");
      }
      if (inst.k == 0) return decide(out, Verdict::No, "budget exhausted with a hole left");

      Step s = rule_incident_mandatory(ed_);
      if (s == Step::No) return decide(out, Verdict::No, "more than k^2 mandatory edges");
      if (s == Step::Changed) continue;
      const auto k = static_cast<std::size_t>(inst.k);
      out.bounds.check("mandatory<=k^2", inst.count(EdgeLabel::Mandatory) <= k * k);

      Modulator m = compute_modulator(inst, opt_.provider);
      if (opt_.provider.optimal && m.approx.size() > k)
        return decide(out, Verdict::No, "optimal solution exceeds k");
      if (m.forced) {
        ed_.count("forced");
        if (!ed_.apply("forced", OpKind::Solution, {*m.forced})) return decide(out, Verdict::No, "forced vertex");
        continue;
      }
      VertexList dprime = set_union(m.redundant, inst.mandatory_endpoints());
      const std::int64_t delta = (inst.k + 3) * m.f;
      set_thresholds(out, m.f, dprime.size(), 0);

      if (independent_degree_step(ed_, m.approx, m.blockers, delta, &out.bounds) != Step::None) continue;

      VertexList d_shrink = dprime;
      ShrinkOptions so;
      so.threshold = opt_.shrink_threshold;
      ShrinkReport sr = shrink_step(ed_, d_shrink, delta, so);
      out.unresolved_cliques += sr.unresolved;
      out.bounds.check("t-witness-marks<=budget", sr.worst.t_witness <= sr.budget.t_witness);
      out.bounds.check("t*-witness-marks<=budget", sr.worst.t_star_witness <= sr.budget.t_star_witness);
      out.bounds.check("fragment-marks<=budget", sr.worst.fragment <= sr.budget.fragment);
      out.bounds.check("mandatory-marks<=budget", sr.worst.mandatory <= sr.budget.mandatory);
      if (sr.decided_no) return decide(out, Verdict::No, "forced vertex with k = 0");
      if (sr.changed) continue;

      if (rule_simplicial_removal(ed_, dprime) > 0) continue;

      PathDecomposition pd = analyze_clique_forest(inst, dprime, delta + inst.k, &out.bounds);
      const auto max_bag = static_cast<std::int64_t>(pd.forest.max_bag_size());
      const std::int64_t kappa = out.thresholds.kappa;
      const std::int64_t path_kappa = opt_.tight_kappa ? max_bag : std::max(kappa, max_bag);
      out.thresholds.path_kappa = path_kappa;
      const std::int64_t small_delta = 2 * (inst.k + 1) + 6 * path_kappa;

      bool changed = false;
      for (const auto& path : pd.paths) {
        std::vector<VertexList> bags;
        for (int b : path) bags.push_back(pd.forest.bags[b]);
        PathSplit split = split_path_complying(inst.graph, bags, dprime);
        for (std::size_t q = 0; q < split.pieces.size() && !changed; ++q) {
          if (!split.compliant[q]) {
            ++out.noncomplying_paths;
            continue;
          }
          std::vector<VertexList> qb;
          for (int p : split.pieces[q]) qb.push_back(bags[p]);
          changed = reduce_manageable_path(ed_, qb, dprime, small_delta, &out.bounds) == Step::Changed;
        }
        if (changed) break;
      }
      if (changed) continue;
      return Verdict::Reduced;
    }
  }

  Editor ed_;
  const KernelOptions& opt_;
};

std::pair<std::size_t, std::size_t> size_of(const AnnotatedInstance& inst) {
  return {inst.graph.num_vertices(), inst.graph.num_edges()};
}

void materialize(KernelOutcome& out, Verdict v, const AnnotatedInstance& work) {
  out.verdict = v;
  if (v == Verdict::Yes) out.instance = canonical_yes(work.k);
  else if (v == Verdict::No) out.instance = canonical_no();
  else out.instance = work;
}

KernelOutcome run_once(const AnnotatedInstance& input, const KernelOptions& opt) {
  KernelOutcome out;
  AnnotatedInstance work = input;
  Pipeline p(work, opt);
  Verdict v = p.run(out);
  out.trace = p.editor().trace();
  out.rules = p.editor().rule_counts();
  materialize(out, v, work);
  if (v != Verdict::Yes) out.solution = work.forced;
  return out;
}

}  // namespace

KernelOutcome kernelize(const AnnotatedInstance& input, const KernelOptions& opt) {
  if (input.k < 0) throw DomainError("kernelize: negative budget");
  if (!input.is_valid()) throw DomainError("kernelize: malformed instance");
  KernelOutcome first = run_once(input, opt);
  if (first.verdict != Verdict::Reduced || !opt.bootstrap) return first;

  KernelOutcome second = run_once(first.instance, opt);
  first.bootstrap_ran = true;
  first.bounds.check("bootstrap-not-larger", true);
  if (size_of(second.instance) > size_of(first.instance)) return first;

  KernelOutcome merged = std::move(second);
  merged.bootstrap_ran = true;
  merged.bootstrap_accepted = true;
  Trace trace = std::move(first.trace);
  trace.insert(trace.end(), merged.trace.begin(), merged.trace.end());
  merged.trace = std::move(trace);
  for (const auto& [rule, n] : first.rules) merged.rules[rule] += n;
  BoundLog bounds = std::move(first.bounds);
  bounds.merge(merged.bounds);
  merged.bounds = std::move(bounds);
  merged.passes += first.passes;
  merged.unresolved_cliques += first.unresolved_cliques;
  merged.noncomplying_paths += first.noncomplying_paths;
  merged.solution = set_union(first.solution, merged.solution);
  return merged;
}

AnnotatedInstance replay_trace(const AnnotatedInstance& input, const Trace& trace) {
  AnnotatedInstance inst = input;
  for (const TraceOp& op : trace) {
    if (op.kind == OpKind::DecideYes) return canonical_yes(inst.k);
    if (op.kind == OpKind::DecideNo) return canonical_no();
    if (!apply_op(inst, op)) throw DomainError("trace removes a vertex into the solution with k = 0");
  }
  return inst;
}

bool implied_answer(const KernelOutcome& out) {
  switch (out.verdict) {
    case Verdict::Yes: return true;
    case Verdict::No: return false;
    case Verdict::Reduced: return annotated_cvd(out.instance).has_value();
  }
  return false;
}

}  // namespace cvd
