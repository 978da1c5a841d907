#include "cvd/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cvd/compact.hpp"

namespace cvd {

namespace {

std::vector<int> mcs_indices(const CompactGraph& cg) {
  const int n = cg.size();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (!visited[i] && (best < 0 || weight[i] > weight[best])) best = i;
    visited[best] = 1;
    order.push_back(best);
    for (int j : cg.adj(best))
      if (!visited[j]) ++weight[j];
  }
  return order;
}

struct PeoFailure {
  int v, a, b;
};

// Checks the MCS order: the earlier-visited neighbors of each vertex must be
// a clique. Uses the parent test, so a failure names one non-adjacent pair.
std::optional<PeoFailure> check_mcs(const CompactGraph& cg, const std::vector<int>& order) {
  const int n = cg.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v : order) {
    int parent = -1;
    for (int u : cg.adj(v))
      if (pos[u] < pos[v] && (parent < 0 || pos[u] > pos[parent])) parent = u;
    if (parent < 0) continue;
    for (int u : cg.adj(v))
      if (pos[u] < pos[v] && u != parent && !cg.adjacent(u, parent))
        return PeoFailure{v, u, parent};
  }
  return std::nullopt;
}

// Shortest a-b path avoiding N[v] \ {a,b}; together with v it closes a hole.
std::optional<std::vector<int>> hole_through(const CompactGraph& cg, int v, int a, int b) {
  const int n = cg.size();
  std::vector<int> prev(n, -2);
  auto blocked = [&](int x) { return x == v || (x != a && x != b && cg.adjacent(v, x)); };
  std::deque<int> queue{a};
  prev[a] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (int y : cg.adj(x)) {
      if (prev[y] != -2 || blocked(y)) continue;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  if (prev[b] == -2) return std::nullopt;
  std::vector<int> cycle{v};
  std::vector<int> path;
  for (int x = b; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

Hole canonical_hole(const CompactGraph& cg, const std::vector<int>& idx) {
  VertexList c;
  for (int i : idx) c.push_back(cg.id(i));
  auto min_it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), min_it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return Hole{std::move(c)};
}

}  // namespace

NotChordalError::NotChordalError(Hole witness)
    : DomainError("graph is not chordal"), witness_(std::move(witness)) {}

std::string check_hole(const Graph& g, const Hole& hole) {
  const auto& c = hole.cycle;
  if (c.size() < 4) return "cycle has fewer than four vertices";
  VertexList sorted = c;
  normalize(sorted);
  if (sorted.size() != c.size()) return "cycle repeats a vertex";
  for (VertexId v : c)
    if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      bool adj = g.has_edge(c[i], c[j]);
      if (consecutive && !adj)
        return "missing cycle edge {" + std::to_string(c[i]) + "," + std::to_string(c[j]) + "}";
      if (!consecutive && adj)
        return "chord {" + std::to_string(c[i]) + "," + std::to_string(c[j]) + "}";
    }
  }
  return {};
}

VertexList mcs_order(const Graph& g) {
  CompactGraph cg(g);
  VertexList out;
  for (int i : mcs_indices(cg)) out.push_back(cg.id(i));
  return out;
}

bool is_chordal(const Graph& g) {
  CompactGraph cg(g);
  return !check_mcs(cg, mcs_indices(cg)).has_value();
}

std::optional<Hole> find_hole(const Graph& g) {
  CompactGraph cg(g);
  auto failure = check_mcs(cg, mcs_indices(cg));
  if (!failure) return std::nullopt;
  auto [v, a, b] = *failure;
  if (auto cycle = hole_through(cg, v, std::min(a, b), std::max(a, b)))
    return canonical_hole(cg, *cycle);
  // Exhaustive fallback: some vertex of any hole sees its two cycle
  // neighbors joined by a path outside its closed neighborhood.
  for (int x = 0; x < cg.size(); ++x) {
    const auto& nb = cg.adj(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!cg.adjacent(nb[i], nb[j]))
          if (auto cycle = hole_through(cg, x, nb[i], nb[j])) return canonical_hole(cg, *cycle);
  }
  throw InvariantError("MCS rejected the graph but no hole was found");
}

VertexList perfect_elimination_order(const Graph& g) {
  CompactGraph cg(g);
  const int n = cg.size();
  std::vector<char> gone(n, 0);
  VertexList order;
  order.reserve(n);
  auto simplicial = [&](int v) {
    std::vector<int> live;
    for (int u : cg.adj(v))
      if (!gone[u]) live.push_back(u);
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j)
        if (!cg.adjacent(live[i], live[j])) return false;
    return true;
  };
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!gone[v] && simplicial(v)) pick = v;
    if (pick < 0) {
      auto hole = find_hole(g);
      if (!hole) throw InvariantError("no simplicial vertex in a chordal graph");
      throw NotChordalError(*hole);
    }
    gone[pick] = 1;
    order.push_back(cg.id(pick));
  }
  return order;
}

std::vector<std::vector<int>> CliqueForest::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::size_t CliqueForest::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return best;
}

CliqueForest clique_forest(const Graph& g) {
  CompactGraph cg(g);
  auto order = mcs_indices(cg);
  if (check_mcs(cg, order)) throw NotChordalError(*find_hole(g));
  const int n = cg.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<VertexList> candidates;
  for (int v : order) {
    VertexList c{cg.id(v)};
    for (int u : cg.adj(v))
      if (pos[u] < pos[v]) c.push_back(cg.id(u));
    normalize(c);
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const VertexList& a, const VertexList& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  std::vector<VertexList> maximal;
  for (auto& c : candidates) {
    bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const VertexList& m) {
      return std::includes(m.begin(), m.end(), c.begin(), c.end());
    });
    if (!dominated) maximal.push_back(std::move(c));
  }
  std::sort(maximal.begin(), maximal.end());

  CliqueForest f;
  f.bags = std::move(maximal);
  const int nb = static_cast<int>(f.bags.size());
  for (int i = 0; i < nb; ++i)
    for (VertexId v : f.bags[i]) f.bag_of[v].push_back(i);

  struct Candidate {
    std::size_t weight;
    int a, b;
  };
  std::vector<Candidate> pairs;
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      std::size_t w = set_intersection(f.bags[i], f.bags[j]).size();
      if (w > 0) pairs.push_back({w, i, j});
    }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });
  std::vector<int> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : pairs) {
    int ra = find(p.a), rb = find(p.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    f.tree_edges.emplace_back(p.a, p.b);
  }
  std::sort(f.tree_edges.begin(), f.tree_edges.end());
  return f;
}

std::string check_clique_forest(const Graph& g, const CliqueForest& f) {
  const int nb = static_cast<int>(f.bags.size());
  if (static_cast<std::size_t>(nb) > g.num_vertices() && !(g.empty() && nb == 0))
    return "more bags than vertices";
  for (int i = 0; i < nb; ++i) {
    const auto& bag = f.bags[i];
    if (bag.empty()) return "empty bag";
    for (std::size_t a = 0; a < bag.size(); ++a) {
      if (!g.has_vertex(bag[a])) return "bag holds unknown vertex";
      for (std::size_t b = a + 1; b < bag.size(); ++b)
        if (!g.has_edge(bag[a], bag[b])) return "bag " + std::to_string(i) + " is not a clique";
    }
    // Maximal: no outside vertex adjacent to the whole bag.
    for (VertexId u : g.neighbors(bag.front())) {
      if (contains(bag, u)) continue;
      bool all = std::all_of(bag.begin(), bag.end(), [&](VertexId w) { return g.has_edge(u, w); });
      if (all) return "bag " + std::to_string(i) + " is not a maximal clique";
    }
  }
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      if (f.bags[i] == f.bags[j]) return "duplicate bag";
  for (VertexId v : g.vertices()) {
    bool in_some = std::any_of(f.bags.begin(), f.bags.end(),
                               [&](const VertexList& b) { return contains(b, v); });
    if (!in_some) return "vertex " + std::to_string(v) + " is in no bag";
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(f.bags.begin(), f.bags.end(), [&](const VertexList& b) {
      return contains(b, e.first) && contains(b, e.second);
    });
    if (!covered) return "edge not covered by a bag";
  }
  std::vector<int> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : f.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) return "tree edge out of range";
    int ra = find(a), rb = find(b);
    if (ra == rb) return "tree edges contain a cycle";
    parent[ra] = rb;
  }
  // Running intersection: bags containing v induce a connected subforest.
  auto adj = f.adjacency();
  for (VertexId v : g.vertices()) {
    std::vector<int> holders;
    for (int i = 0; i < nb; ++i)
      if (contains(f.bags[i], v)) holders.push_back(i);
    std::vector<char> seen(nb, 0);
    std::deque<int> queue{holders.front()};
    seen[holders.front()] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      ++reached;
      for (int y : adj[x])
        if (!seen[y] && contains(f.bags[y], v)) {
          seen[y] = 1;
          queue.push_back(y);
        }
    }
    if (reached != holders.size())
      return "bags containing vertex " + std::to_string(v) + " are not connected";
  }
  return {};
}

VertexList mis_chordal(const Graph& g) {
  VertexList out;
  for (VertexId v : perfect_elimination_order(g)) {
    bool free = std::none_of(out.begin(), out.end(), [&](VertexId u) { return g.has_edge(u, v); });
    if (free) out.push_back(v);
  }
  normalize(out);
  return out;
}

std::vector<VertexList> clique_cover_chordal(const Graph& g) {
  VertexList peo = perfect_elimination_order(g);
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = i;
  std::map<VertexId, bool> covered;
  std::vector<VertexList> cover;
  for (VertexId v : peo) {
    if (covered[v]) continue;
    VertexList clique{v};
    covered[v] = true;
    for (VertexId u : g.neighbors(v))
      if (pos[u] > pos[v] && !covered[u]) {
        clique.push_back(u);
        covered[u] = true;
      }
    normalize(clique);
    cover.push_back(std::move(clique));
  }
  return cover;
}

std::size_t max_clique_size(const Graph& g) { return clique_forest(g).max_bag_size(); }

std::vector<int> forest_distances(const CliqueForest& f, int from) {
  auto adj = f.adjacency();
  std::vector<int> dist(f.bags.size(), -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

std::vector<int> forest_path(const CliqueForest& f, int from, int to) {
  auto adj = f.adjacency();
  std::vector<int> prev(f.bags.size(), -2);
  std::deque<int> queue{from};
  prev[from] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj[x])
      if (prev[y] == -2) {
        prev[y] = x;
        queue.push_back(y);
      }
  }
  if (prev[to] == -2) return {};
  std::vector<int> path;
  for (int x = to; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace cvd
