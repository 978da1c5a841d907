#include "cvd/solvers.hpp"

#include <algorithm>

#include "cvd/chordal.hpp"

namespace cvd {

namespace {

bool search(const Graph& g, int budget) {
  auto hole = find_hole(g);
  if (!hole) return true;
  if (budget == 0) return false;
  for (VertexId v : hole->cycle) {
    VertexId drop[] = {v};
    if (search(g.without(drop), budget - 1)) return true;
  }
  return false;
}

int minimum_size(const Graph& g, int limit) {
  for (int s = 0; s <= limit; ++s)
    if (search(g, s)) return s;
  return -1;
}

// Lexicographically smallest solution of exact size s, knowing one exists
// and none is smaller.
VertexList lex_min(const Graph& g, int s) {
  VertexList out;
  Graph current = g;
  for (int left = s; left > 0; --left) {
    bool found = false;
    for (VertexId v : current.vertices()) {
      VertexId drop[] = {v};
      Graph next = current.without(drop);
      if (search(next, left - 1)) {
        out.push_back(v);
        current = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("exact solver lost its solution");
  }
  return out;
}

}  // namespace

bool has_cvd_solution(const Graph& g, int k) { return k >= 0 && search(g, k); }

std::optional<VertexList> exact_cvd(const Graph& g, int k) {
  if (k < 0) return std::nullopt;
  int s = minimum_size(g, k);
  if (s < 0) return std::nullopt;
  return lex_min(g, s);
}

namespace {

bool annotated_search(const AnnotatedInstance& inst, const Graph& g, VertexList& chosen, int budget) {
  for (const auto& [e, l] : inst.labels) {
    if (l != EdgeLabel::Mandatory || contains(chosen, e.first) || contains(chosen, e.second)) continue;
    if (budget == 0) return false;
    for (VertexId v : {e.first, e.second}) {
      VertexList next = set_union(chosen, VertexList{v});
      VertexId drop[] = {v};
      if (annotated_search(inst, g.without(drop), next, budget - 1)) {
        chosen = std::move(next);
        return true;
      }
    }
    return false;
  }
  auto hole = find_hole(g);
  if (!hole) return true;
  if (budget == 0) return false;
  for (VertexId v : hole->cycle) {
    VertexList next = set_union(chosen, VertexList{v});
    VertexId drop[] = {v};
    if (annotated_search(inst, g.without(drop), next, budget - 1)) {
      chosen = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<VertexList> annotated_cvd(const AnnotatedInstance& inst) {
  if (inst.k < 0) return std::nullopt;
  VertexList chosen;
  if (!annotated_search(inst, inst.graph, chosen, inst.k)) return std::nullopt;
  return chosen;
}

VertexList greedy_solution(const Graph& g, std::optional<VertexId> forbidden) {
  Graph current = g;
  VertexList out;
  while (auto hole = find_hole(current)) {
    VertexId pick = 0;
    std::size_t best = 0;
    for (VertexId v : hole->cycle) {
      if (forbidden && v == *forbidden) continue;
      std::size_t d = current.degree(v);
      if (pick == 0 || d > best || (d == best && v < pick)) {
        pick = v;
        best = d;
      }
    }
    out.push_back(pick);
    current.remove_vertex(pick);
  }
  normalize(out);
  return out;
}

SolutionProvider greedy_provider() {
  return {"greedy", false, [](const Graph& g) { return greedy_solution(g); }};
}

SolutionProvider exact_provider() {
  return {"exact", true, [](const Graph& g) {
            int s = minimum_size(g, static_cast<int>(g.num_vertices()));
            return lex_min(g, s);
          }};
}

BlockerResult v_blocker(const Graph& g, VertexId v, const SolutionProvider& provider, int budget) {
  if (!g.has_vertex(v)) throw DomainError("v_blocker: unknown vertex " + std::to_string(v));
  if (budget < 1) throw DomainError("v_blocker: budget must be positive");
  Graph twin = g;
  VertexList clique{v};
  for (int i = 0; i < budget; ++i) {
    VertexId c = twin.add_vertex();
    for (VertexId u : g.neighbors(v)) twin.add_edge(c, u);
    for (VertexId u : clique) twin.add_edge(c, u);
    clique.push_back(c);
  }
  normalize(clique);
  VertexList s = provider.solve(twin);
  normalize(s);
  // A set hitting only part of the twin class stays a solution without it.
  bool all = std::includes(s.begin(), s.end(), clique.begin(), clique.end());
  if (all) return {v, {}};
  s = set_difference(s, clique);
  if (static_cast<int>(s.size()) > budget) return {v, {}};
  return {std::nullopt, std::move(s)};
}

RedundantResult redundant_solution(const Graph& g, const VertexList& d0,
                                   const SolutionProvider& provider, int budget) {
  VertexList base = d0;
  normalize(base);
  if (!is_chordal(g.without(base))) throw DomainError("redundant_solution: D0 is not a solution");
  RedundantResult r;
  r.solution = base;
  for (VertexId v : base) {
    auto b = v_blocker(g, v, provider, budget);
    if (b.is_forced()) return {b.forced, {}, {}};
    r.solution = set_union(r.solution, b.blocker);
    r.blockers.emplace(v, std::move(b.blocker));
  }
  return r;
}

bool is_redundant(const Graph& g, const VertexList& d) {
  for (VertexId u : d) {
    VertexList rest;
    for (VertexId w : d)
      if (w != u) rest.push_back(w);
    if (!is_chordal(g.without(rest))) return false;
  }
  return true;
}

}  // namespace cvd
