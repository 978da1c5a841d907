#include "cvd/clique_shrink.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cvd/expansion.hpp"

namespace cvd {

MarkBudget mark_budget(std::size_t modulator_size, int k, std::int64_t delta) {
  const std::int64_t d = static_cast<std::int64_t>(modulator_size);
  const std::int64_t kk = k;
  MarkBudget b;
  b.t_witness = d * 6 * kk * kk * (kk + 1);
  b.t_star_witness = d * delta * (kk + 2) * (kk + 2) * (kk + 2);
  b.fragment = d * d * d * (kk + 2);
  b.mandatory = kk * kk;
  return b;
}

namespace {

bool is_clique(const Graph& g, const VertexList& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

// BFS from `from` whose interior avoids vertices adjacent to t. Returns the
// path to the first vertex accepted by `goal`, or an empty list.
template <class Goal>
VertexList guarded_path(const Graph& gd, const Graph& g, VertexId t, VertexId from, Goal goal) {
  std::map<VertexId, VertexId> prev{{from, from}};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : gd.neighbors(x)) {
      if (prev.contains(y)) continue;
      prev[y] = x;
      if (goal(y)) {
        VertexList path{y};
        for (VertexId z = y; z != from; z = prev[z]) path.push_back(prev[z]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!g.has_edge(t, y)) queue.push_back(y);
    }
  }
  return {};
}

std::size_t smallest_bag_containing(const CliqueForest& f, const VertexList& s) {
  std::vector<int> common = f.bag_of.at(s.front());
  for (VertexId v : s) {
    std::vector<int> next;
    const auto& b = f.bag_of.at(v);
    std::set_intersection(common.begin(), common.end(), b.begin(), b.end(), std::back_inserter(next));
    common = std::move(next);
  }
  if (common.empty()) throw InvariantError("clique contained in no bag");
  return static_cast<std::size_t>(common.front());
}

// Distance between a bag and the nearest bag holding v (-1 if unreachable).
int vertex_distance(const CliqueForest& f, const std::vector<int>& dist, VertexId v) {
  int best = -1;
  for (int b : f.bag_of.at(v))
    if (dist[b] >= 0 && (best < 0 || dist[b] < best)) best = dist[b];
  return best;
}

VertexList closest(const CliqueForest& f, int bag, VertexList pool, std::size_t count) {
  auto dist = forest_distances(f, bag);
  std::vector<std::pair<long long, VertexId>> keyed;
  for (VertexId v : pool) {
    int d = vertex_distance(f, dist, v);
    keyed.emplace_back(d < 0 ? (1LL << 40) : d, v);
  }
  std::sort(keyed.begin(), keyed.end());
  VertexList out;
  for (std::size_t i = 0; i < keyed.size() && i < count; ++i) out.push_back(keyed[i].second);
  return out;
}

bool holes_share_only(const std::vector<VertexList>& cycles, const VertexList& shared) {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      VertexList a = cycles[i], b = cycles[j];
      normalize(a);
      normalize(b);
      if (set_intersection(a, b) != shared) return false;
    }
  return true;
}

struct Context {
  const AnnotatedInstance& inst;
  const Graph& g;
  Graph gd;
  const VertexList& d;
  const VertexList& clique;
  CliqueForest forest;
  int root = 0;
  int k = 0;
};

// Result of a marking sub-step that may short-circuit the whole lemma.
struct Early {
  MarkOutcome::Kind kind = MarkOutcome::Kind::Marks;
  VertexId forced = 0;
  Edge mandatory;
  std::string note;
};

std::optional<Early> mark_t_star(Context& c, VertexId t, const VertexList& q, std::set<VertexId>& marks) {
  const int k = c.k;
  int xq = static_cast<int>(smallest_bag_containing(c.forest, q));
  auto path = forest_path(c.forest, xq, c.root);
  if (path.empty()) return std::nullopt;
  auto first_pos = [&](VertexId v) {
    for (std::size_t p = 0; p < path.size(); ++p)
      if (contains(c.forest.bags[path[p]], v)) return static_cast<long long>(p);
    return -1LL;
  };
  auto last_pos = [&](VertexId v) {
    for (std::size_t p = path.size(); p-- > 0;)
      if (contains(c.forest.bags[path[p]], v)) return static_cast<long long>(p);
    return -1LL;
  };
  // Keys make all positions distinct; a u key precedes a v key at the same
  // bag so that key(u) < key(v) exactly when u and v share a bag.
  using Key = std::tuple<long long, int, VertexId>;
  std::vector<std::pair<Key, VertexId>> us, vs;
  for (VertexId u : set_intersection(c.clique, relevant_neighbors(c.inst, t)))
    us.push_back({Key{first_pos(u), 0, u}, u});
  for (VertexId v : q) vs.push_back({Key{last_pos(v), 1, v}, v});
  std::sort(us.begin(), us.end());
  std::sort(vs.begin(), vs.end());
  if (us.empty() || vs.empty()) return std::nullopt;

  std::vector<std::size_t> beta{0}, alpha;
  while (true) {
    const Key& kb = vs[beta.back()].first;
    auto ia = std::find_if(us.begin(), us.end(), [&](const auto& p) { return p.first > kb; });
    if (ia == us.end()) break;
    alpha.push_back(static_cast<std::size_t>(ia - us.begin()));
    const Key& ka = us[alpha.back()].first;
    auto ib = std::find_if(vs.begin(), vs.end(), [&](const auto& p) { return p.first > ka; });
    if (ib == vs.end()) break;
    beta.push_back(static_cast<std::size_t>(ib - vs.begin()));
  }
  const std::size_t ell = beta.size();
  const std::size_t k2 = static_cast<std::size_t>(k + 2);
  if (ell <= k2 * k2) {
    for (std::size_t a : alpha)
      for (std::size_t j = a; j < us.size() && j <= a + k2 - 1; ++j) marks.insert(us[j].second);
    return std::nullopt;
  }

  // Too many alternations: k+1 holes through t certify t or a new mandatory edge.
  auto in_k = [&](VertexId y) { return contains(c.clique, y); };
  std::vector<VertexList> holes;
  std::vector<std::size_t> picks;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(k + 1); ++j) picks.push_back(k2 * j - 1);
  for (std::size_t i : picks) {
    VertexId v = vs[beta[i]].second, u = us[alpha[i]].second;
    auto p = guarded_path(c.gd, c.g, t, v, [&](VertexId y) { return y == u && in_k(y); });
    if (p.empty()) return Early{MarkOutcome::Kind::Unresolved, 0, {}, "missing t* witness path"};
    VertexList cycle{t};
    cycle.insert(cycle.end(), p.begin(), p.end());
    if (!check_hole(c.g, Hole{cycle}).empty())
      return Early{MarkOutcome::Kind::Unresolved, 0, {}, "t* witness cycle is not a hole"};
    holes.push_back(std::move(cycle));
  }
  if (holes_share_only(holes, {t})) return Early{MarkOutcome::Kind::Forced, t, {}, "flower of t* holes"};
  for (std::size_t a = 0; a < holes.size(); ++a)
    for (std::size_t b = a + 1; b < holes.size(); ++b) {
      VertexList ha = holes[a], hb = holes[b];
      normalize(ha);
      normalize(hb);
      for (VertexId w : set_intersection(ha, hb)) {
        if (w == t || c.g.has_edge(t, w)) continue;
        std::vector<VertexList> squares;
        for (std::size_t i = 1; i <= static_cast<std::size_t>(k + 1); ++i) {
          std::size_t idx = picks[a] + i;
          if (idx >= alpha.size()) break;
          squares.push_back({t, vs[beta[idx]].second, w, us[alpha[idx]].second});
        }
        bool ok = squares.size() == static_cast<std::size_t>(k + 1);
        for (const auto& s : squares) ok = ok && check_hole(c.g, Hole{s}).empty();
        VertexList shared{t, w};
        normalize(shared);
        if (ok && holes_share_only(squares, shared))
          return Early{MarkOutcome::Kind::Mandatory, 0, Edge(t, w), "t* squares through w"};
      }
    }
  return Early{MarkOutcome::Kind::Unresolved, 0, {}, "t* alternation without certificate"};
}

// Holes whose only D vertices are l1 and l2 and that meet K in one vertex.
std::optional<Early> mark_two_labels(Context& c, VertexId l1, VertexId l2, const VertexList& pool,
                                     std::set<VertexId>& marks) {
  const int k = c.k;
  auto depth = forest_distances(c.forest, c.root);
  struct Candidate {
    int bag;
    VertexList interior;
  };
  std::map<int, Candidate> by_bag;
  for (VertexId u : pool) {
    std::set<VertexId> seen;
    for (VertexId s : c.gd.vertices()) {
      if (s == u || c.gd.has_edge(u, s) || seen.contains(s)) continue;
      // Component of s in G \ D minus N[u].
      VertexList comp;
      std::deque<VertexId> queue{s};
      seen.insert(s);
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        comp.push_back(x);
        for (VertexId y : c.gd.neighbors(x))
          if (y != u && !c.gd.has_edge(u, y) && !seen.contains(y)) {
            seen.insert(y);
            queue.push_back(y);
          }
      }
      normalize(comp);
      std::map<VertexId, VertexId> prev{{l1, l1}};
      std::deque<VertexId> bfs{l1};
      while (!bfs.empty() && !prev.contains(l2)) {
        VertexId x = bfs.front();
        bfs.pop_front();
        for (VertexId y : c.g.neighbors(x)) {
          if (prev.contains(y)) continue;
          if (y == l2 && x != l1) {
            prev[y] = x;
            break;
          }
          if (!contains(comp, y)) continue;
          prev[y] = x;
          bfs.push_back(y);
        }
      }
      if (!prev.contains(l2)) continue;
      VertexList interior;
      for (VertexId z = prev[l2]; z != l1; z = prev[z]) interior.push_back(z);
      std::reverse(interior.begin(), interior.end());
      int best = -1;
      for (VertexId z : comp)
        for (int b : c.forest.bag_of.at(z))
          if (depth[b] >= 0 && (best < 0 || depth[b] < depth[best] || (depth[b] == depth[best] && b < best)))
            best = b;
      if (best < 0) continue;  // other tree: covered by the label-triple marks
      by_bag.try_emplace(best, Candidate{best, interior});
    }
  }
  if (by_bag.empty()) return std::nullopt;
  std::vector<Candidate> selected;
  for (const auto& [bag, cand] : by_bag) {
    bool has_descendant = false;
    for (const auto& [other, unused] : by_bag) {
      if (other == bag) continue;
      auto p = forest_path(c.forest, c.root, other);
      if (std::find(p.begin(), p.end(), bag) != p.end()) has_descendant = true;
    }
    if (!has_descendant) selected.push_back(cand);
  }
  if (selected.size() <= static_cast<std::size_t>(k + 1)) {
    for (const auto& cand : selected)
      for (VertexId v : closest(c.forest, cand.bag, pool, static_cast<std::size_t>(k + 1))) marks.insert(v);
    return std::nullopt;
  }
  // Certificate: k+1 holes l1 - u_j - l2 - P_j with distinct u_j and
  // pairwise disjoint P_j.
  for (std::size_t a = 0; a < selected.size(); ++a)
    for (std::size_t b = a + 1; b < selected.size(); ++b) {
      VertexList x = selected[a].interior, y = selected[b].interior;
      normalize(x);
      normalize(y);
      if (!set_intersection(x, y).empty())
        return Early{MarkOutcome::Kind::Unresolved, 0, {}, "overlapping two-label fragments"};
    }
  Bipartite h(static_cast<int>(selected.size()), static_cast<int>(pool.size()));
  for (std::size_t a = 0; a < selected.size(); ++a)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      bool free = std::none_of(selected[a].interior.begin(), selected[a].interior.end(),
                               [&](VertexId z) { return z == pool[j] || c.g.has_edge(z, pool[j]); });
      if (free) h.add_edge(static_cast<int>(a), static_cast<int>(j));
    }
  auto match = max_matching(h);
  std::vector<VertexList> holes;
  for (std::size_t a = 0; a < selected.size() && holes.size() < static_cast<std::size_t>(k + 1); ++a) {
    if (match[a] < 0) continue;
    VertexList cycle{pool[match[a]], l1};
    cycle.insert(cycle.end(), selected[a].interior.begin(), selected[a].interior.end());
    cycle.push_back(l2);
    if (!check_hole(c.g, Hole{cycle}).empty()) continue;
    holes.push_back(std::move(cycle));
  }
  VertexList shared{l1, l2};
  normalize(shared);
  if (holes.size() == static_cast<std::size_t>(k + 1) && holes_share_only(holes, shared))
    return Early{MarkOutcome::Kind::Mandatory, 0, Edge(l1, l2), "two-label fragments"};
  return Early{MarkOutcome::Kind::Unresolved, 0, {}, "two-label fragments without certificate"};
}

}  // namespace

DangerReport dangerous_sets(const AnnotatedInstance& inst, const VertexList& d, const VertexList& clique,
                            VertexId t) {
  const Graph& g = inst.graph;
  if (!contains(d, t)) throw DomainError("dangerous_sets: t is not in D");
  Graph gd = g.without(d);
  if (clique.empty() || !is_clique(gd, clique)) throw DomainError("dangerous_sets: K is not a clique of G \\ D");
  for (VertexId v : clique)
    if (!gd.has_vertex(v)) throw DomainError("dangerous_sets: K meets D");
  for (VertexId u : gd.neighbors(clique.front()))
    if (!contains(clique, u) &&
        std::all_of(clique.begin(), clique.end(), [&](VertexId w) { return gd.has_edge(u, w); }))
      throw DomainError("dangerous_sets: K is not maximal in G \\ D");

  DangerReport r;
  r.t = t;
  const VertexList tr = relevant_neighbors(inst, t);
  for (VertexId v : tr) {
    if (contains(d, v) || contains(clique, v)) continue;
    // Collect every K vertex reachable through vertices without label t.
    std::map<VertexId, VertexId> prev{{v, v}};
    std::deque<VertexId> queue{v};
    VertexList reached;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : gd.neighbors(x)) {
        if (prev.contains(y)) continue;
        prev[y] = x;
        if (contains(clique, y)) reached.push_back(y);
        if (!g.has_edge(t, y)) queue.push_back(y);
      }
    }
    normalize(reached);
    VertexList tw, sw;
    for (VertexId u : reached) {
      if (!g.has_edge(t, u)) tw.push_back(u);
      else if (contains(tr, u) && !g.has_edge(u, v)) sw.push_back(u);
    }
    if (!tw.empty()) {
      r.t_dangerous.push_back(v);
      r.t_witnesses[v] = tw;
    }
    if (!sw.empty()) {
      r.t_star_dangerous.push_back(v);
      r.t_star_witnesses[v] = sw;
    }
    if (!tw.empty() || !sw.empty()) {
      VertexId target = !tw.empty() ? tw.front() : sw.front();
      VertexList path{target};
      for (VertexId z = target; z != v; z = prev[z]) path.push_back(prev[z]);
      std::reverse(path.begin(), path.end());
      r.witness_paths[v] = std::move(path);
    }
  }
  return r;
}

MarkOutcome mark_clique(const AnnotatedInstance& inst, const VertexList& d, std::int64_t delta,
                        const VertexList& clique) {
  Context c{inst, inst.graph, inst.graph.without(d), d, clique, {}, 0, inst.k};
  c.forest = clique_forest(c.gd);
  auto it = std::find(c.forest.bags.begin(), c.forest.bags.end(), clique);
  if (it == c.forest.bags.end()) throw DomainError("mark_clique: K is not a maximal clique of G \\ D");
  c.root = static_cast<int>(it - c.forest.bags.begin());
  const int k = inst.k;
  const std::size_t keep = static_cast<std::size_t>(k + 1);

  std::set<VertexId> t_marks, star_marks, frag_marks, mand_marks;
  auto early = [](const Early& e) {
    MarkOutcome o;
    o.kind = e.kind;
    o.forced = e.forced;
    o.mandatory = e.mandatory;
    o.note = e.note;
    return o;
  };

  for (VertexId t : d) {
    DangerReport rep = dangerous_sets(inst, d, clique, t);
    if (!rep.t_dangerous.empty()) {
      Graph h = c.gd.induced(rep.t_dangerous);
      if (mis_chordal(h).size() > static_cast<std::size_t>(6 * k * k))
        return early({MarkOutcome::Kind::Unresolved, 0, {}, "independent t-dangerous set above 6k^2"});
      for (const VertexList& q : clique_cover_chordal(h)) {
        VertexList pool;
        for (VertexId v : q) pool = set_union(pool, rep.t_witnesses.at(v));
        int bag = static_cast<int>(smallest_bag_containing(c.forest, q));
        for (VertexId u : closest(c.forest, bag, pool, keep)) t_marks.insert(u);
      }
    }
    if (!rep.t_star_dangerous.empty()) {
      Graph h = c.gd.induced(rep.t_star_dangerous);
      if (static_cast<std::int64_t>(mis_chordal(h).size()) > delta)
        return early({MarkOutcome::Kind::Unresolved, 0, {}, "independent t*-dangerous set above delta"});
      for (const VertexList& q : clique_cover_chordal(h))
        if (auto e = mark_t_star(c, t, q, star_marks)) return early(*e);
    }
  }

  // Label triples need not be distinct: l1 == l2 covers K vertices whose
  // only fragment label toward the cycle is l1.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i; j < d.size(); ++j) {
      const VertexId l1 = d[i], l2 = d[j];
      VertexList pool;
      for (VertexId u : clique)
        if (c.g.has_edge(l1, u) && c.g.has_edge(l2, u)) pool.push_back(u);
      if (pool.empty()) continue;
      for (std::size_t m = 0; m <= d.size(); ++m) {
        if (m == i || m == j) continue;
        std::size_t taken = 0;
        for (VertexId u : pool) {
          if (taken == keep) break;
          if (m < d.size() && c.g.has_edge(d[m], u)) continue;
          frag_marks.insert(u);
          ++taken;
        }
      }
      if (i != j && !c.g.has_edge(l1, l2))
        if (auto e = mark_two_labels(c, l1, l2, pool, frag_marks)) return early(*e);
    }

  for (VertexId u : inst.mandatory_endpoints())
    if (contains(clique, u)) mand_marks.insert(u);

  MarkOutcome out;
  out.counts = {static_cast<std::int64_t>(t_marks.size()), static_cast<std::int64_t>(star_marks.size()),
                static_cast<std::int64_t>(frag_marks.size()), static_cast<std::int64_t>(mand_marks.size())};
  std::set<VertexId> all;
  for (const auto* s : {&t_marks, &star_marks, &frag_marks, &mand_marks}) all.insert(s->begin(), s->end());
  out.marks.assign(all.begin(), all.end());
  return out;
}

ShrinkReport shrink_step(Editor& ed, VertexList& d, std::int64_t delta, const ShrinkOptions& opt) {
  AnnotatedInstance& inst = ed.instance();
  normalize(d);
  ShrinkReport r;
  r.budget = mark_budget(d.size(), inst.k, delta);
  const std::int64_t threshold = opt.threshold.value_or(r.budget.total());
  Graph gd = inst.graph.without(d);
  if (!is_chordal(gd)) throw DomainError("shrink_cliques: D is not a chordal deletion set");
  CliqueForest f = clique_forest(gd);
  for (const VertexList& bag : f.bags) {
    if (static_cast<std::int64_t>(bag.size()) <= threshold) continue;
    MarkOutcome o = mark_clique(inst, d, delta, bag);
    r.worst.t_witness = std::max(r.worst.t_witness, o.counts.t_witness);
    r.worst.t_star_witness = std::max(r.worst.t_star_witness, o.counts.t_star_witness);
    r.worst.fragment = std::max(r.worst.fragment, o.counts.fragment);
    r.worst.mandatory = std::max(r.worst.mandatory, o.counts.mandatory);
    switch (o.kind) {
      case MarkOutcome::Kind::Unresolved:
        ++r.unresolved;
        continue;
      case MarkOutcome::Kind::Forced:
        ed.count("shrink-forced");
        if (!ed.apply("shrink-forced", OpKind::Solution, {o.forced})) {
          r.decided_no = true;
          return r;
        }
        d = set_difference(d, VertexList{o.forced});
        ++r.forced;
        r.changed = true;
        return r;
      case MarkOutcome::Kind::Mandatory:
        ed.count("shrink-mandatory");
        ed.apply("shrink-mandatory", OpKind::Mandatory, {o.mandatory.first, o.mandatory.second});
        ++r.mandatory;
        r.changed = true;
        return r;
      case MarkOutcome::Kind::Marks: {
        VertexList drop = set_difference(bag, o.marks);
        if (drop.empty()) continue;
        ed.count("shrink-clique");
        for (VertexId u : drop) ed.apply("shrink-clique", OpKind::Delete, {u});
        r.deleted += static_cast<int>(drop.size());
        r.changed = true;
        return r;
      }
    }
  }
  return r;
}

ShrinkReport shrink_cliques(Editor& ed, VertexList& d, std::int64_t delta, const ShrinkOptions& opt) {
  ShrinkReport total;
  while (true) {
    ShrinkReport r = shrink_step(ed, d, delta, opt);
    total.budget = r.budget;
    total.deleted += r.deleted;
    total.forced += r.forced;
    total.mandatory += r.mandatory;
    total.unresolved = r.unresolved;
    total.worst.t_witness = std::max(total.worst.t_witness, r.worst.t_witness);
    total.worst.t_star_witness = std::max(total.worst.t_star_witness, r.worst.t_star_witness);
    total.worst.fragment = std::max(total.worst.fragment, r.worst.fragment);
    total.worst.mandatory = std::max(total.worst.mandatory, r.worst.mandatory);
    total.changed = total.changed || r.changed;
    if (r.decided_no) {
      total.decided_no = true;
      return total;
    }
    if (!r.changed) return total;
  }
}

}  // namespace cvd
