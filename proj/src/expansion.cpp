#include "cvd/expansion.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "cvd/graph.hpp"

namespace cvd {

void Bipartite::add_edge(int a, int b) {
  if (a < 0 || a >= a_size || b < 0 || b >= b_size) throw DomainError("bipartite edge out of range");
  auto& list = adj[a];
  auto it = std::lower_bound(list.begin(), list.end(), b);
  if (it == list.end() || *it != b) list.insert(it, b);
}

bool Bipartite::has_edge(int a, int b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

namespace {

// Kuhn's algorithm; the returned vector maps B vertices to A partners.
std::vector<int> kuhn(const std::vector<std::vector<int>>& adj, int b_size, std::vector<int>& match_a) {
  std::vector<int> match_b(b_size, -1);
  match_a.assign(adj.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int a) {
    for (int b : adj[a]) {
      if (seen[b]) continue;
      seen[b] = 1;
      if (match_b[b] < 0 || augment(match_b[b])) {
        match_b[b] = a;
        match_a[a] = b;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < adj.size(); ++a) {
    seen.assign(b_size, 0);
    augment(static_cast<int>(a));
  }
  return match_b;
}

}  // namespace

std::vector<int> max_matching(const Bipartite& h) {
  std::vector<int> match_a;
  kuhn(h.adj, h.b_size, match_a);
  return match_a;
}

Expansion q_expansion(const Bipartite& h, int c) {
  if (c < 1) throw DomainError("expansion: c must be positive");
  if (h.a_size == 0) throw DomainError("expansion: side A is empty");
  if (static_cast<long long>(h.b_size) < static_cast<long long>(c) * h.a_size)
    throw DomainError("expansion: |B| < c|A|");
  std::vector<char> touched(h.b_size, 0);
  for (const auto& list : h.adj)
    for (int b : list) touched[b] = 1;
  if (std::find(touched.begin(), touched.end(), 0) != touched.end())
    throw DomainError("expansion: side B has an isolated vertex");

  // Clone every A vertex c times; clone i*c+j belongs to A vertex i.
  std::vector<std::vector<int>> clones;
  for (int a = 0; a < h.a_size; ++a)
    for (int j = 0; j < c; ++j) clones.push_back(h.adj[a]);
  std::vector<int> match_a;
  std::vector<int> match_b = kuhn(clones, h.b_size, match_a);

  // Alternating reachability from unmatched clones (Koenig).
  std::vector<char> in_z(clones.size(), 0);
  std::vector<char> b_seen(h.b_size, 0);
  std::deque<int> queue;
  for (std::size_t i = 0; i < clones.size(); ++i)
    if (match_a[i] < 0) {
      in_z[i] = 1;
      queue.push_back(static_cast<int>(i));
    }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int b : clones[x]) {
      if (b_seen[b]) continue;
      b_seen[b] = 1;
      int partner = match_b[b];
      if (partner >= 0 && !in_z[partner]) {
        in_z[partner] = 1;
        queue.push_back(partner);
      }
    }
  }

  Expansion e;
  for (int a = 0; a < h.a_size; ++a) {
    bool reached = false;
    for (int j = 0; j < c; ++j) reached = reached || in_z[a * c + j];
    if (reached) continue;
    e.X.push_back(a);
    auto& star = e.stars[a];
    for (int j = 0; j < c; ++j) star.push_back(match_a[a * c + j]);
    std::sort(star.begin(), star.end());
    e.Y.insert(e.Y.end(), star.begin(), star.end());
  }
  std::sort(e.Y.begin(), e.Y.end());
  if (e.X.empty()) throw InvariantError("expansion: construction produced an empty X");
  if (auto problem = check_expansion(h, c, e); !problem.empty())
    throw InvariantError("expansion: " + problem);
  return e;
}

std::string check_expansion(const Bipartite& h, int c, const Expansion& e) {
  if (e.X.empty() || e.Y.empty()) return "X or Y is empty";
  if (e.Y.size() != static_cast<std::size_t>(c) * e.X.size()) return "|Y| != c|X|";
  std::vector<int> in_x(h.a_size, 0), covered(h.b_size, 0);
  for (int x : e.X) {
    if (x < 0 || x >= h.a_size) return "X vertex out of range";
    in_x[x] = 1;
    auto it = e.stars.find(x);
    if (it == e.stars.end() || it->second.size() != static_cast<std::size_t>(c))
      return "star of wrong size";
    for (int y : it->second) {
      if (y < 0 || y >= h.b_size) return "star vertex out of range";
      if (!h.has_edge(x, y)) return "star uses a non-edge";
      if (covered[y]++) return "stars overlap";
    }
  }
  if (e.stars.size() != e.X.size()) return "stars for vertices outside X";
  for (int y : e.Y)
    if (covered[y] != 1) return "Y differs from the union of stars";
  for (int a = 0; a < h.a_size; ++a)
    if (!in_x[a])
      for (int b : h.adj[a])
        if (covered[b]) return "a Y vertex has a neighbor outside X";
  return {};
}

}  // namespace cvd
