#include "cvd/generators.hpp"

#include <algorithm>
#include <set>

namespace cvd {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below: zero bound");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"gnp", "planted-chordal-plus-noise", "long-clique-path", "flower"};
  return names;
}

Graph gnp(int n, double p, Rng& rng) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (VertexId u = 1; u <= static_cast<VertexId>(n); ++u)
    for (VertexId v = u + 1; v <= static_cast<VertexId>(n); ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph random_chordal(int n, Rng& rng, int tree_nodes) {
  if (tree_nodes <= 0) tree_nodes = std::max(1, n);
  std::vector<std::vector<int>> tree(tree_nodes);
  for (int i = 1; i < tree_nodes; ++i) {
    int parent = static_cast<int>(rng.below(i));
    tree[i].push_back(parent);
    tree[parent].push_back(i);
  }
  std::vector<std::set<int>> subtree(n);
  for (int v = 0; v < n; ++v) {
    int root = static_cast<int>(rng.below(tree_nodes));
    int target = 1 + static_cast<int>(rng.below(std::min(tree_nodes, 4)));
    std::vector<int> frontier{root};
    subtree[v].insert(root);
    while (static_cast<int>(subtree[v].size()) < target) {
      std::vector<int> options;
      for (int x : subtree[v])
        for (int y : tree[x])
          if (!subtree[v].contains(y)) options.push_back(y);
      if (options.empty()) break;
      subtree[v].insert(options[rng.below(options.size())]);
    }
  }
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool meet = std::any_of(subtree[u].begin(), subtree[u].end(), [&](int x) { return subtree[v].contains(x); });
      if (meet) g.add_edge(u + 1, v + 1);
    }
  return g;
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw DomainError("generate: " + what);
}

Generated planted(const GeneratorSpec& s, Rng& rng) {
  need(s.holes >= 0 && s.holes <= s.n, "holes must lie in 0..n");
  const int base = s.n - s.holes;
  Graph g = random_chordal(base, rng, std::max(1, base / 2));
  // Noise vertices attach to random base vertices; deleting them restores chordality.
  for (int i = 0; i < s.holes; ++i) {
    VertexId x = g.add_vertex();
    for (VertexId v = 1; v < x; ++v)
      if (rng.chance(0.35)) g.add_edge(x, v);
  }
  Generated out{AnnotatedInstance(std::move(g), s.k), {}};
  out.comments.push_back("planted " + std::to_string(s.holes));
  return out;
}

Generated long_clique_path(const GeneratorSpec& s, Rng& rng) {
  need(s.bags >= 1 && s.bagsize >= 1, "bags and bagsize must be positive");
  need(s.extra >= 0, "extra must be non-negative");
  // Sliding windows {i, ..., i+bagsize-1} are the maximal cliques, in a path.
  const int len = s.bags + s.bagsize - 1;
  Graph g;
  for (int i = 0; i < len; ++i) g.add_vertex();
  for (int u = 1; u <= len; ++u)
    for (int v = u + 1; v < u + s.bagsize && v <= len; ++v) g.add_edge(u, v);
  // Each extra vertex sees two far-apart path vertices, closing a long hole.
  for (int i = 0; i < s.extra && len > s.bagsize; ++i) {
    VertexId x = g.add_vertex();
    int a = 1 + static_cast<int>(rng.below(len - s.bagsize));
    int b = a + s.bagsize + static_cast<int>(rng.below(len - a - s.bagsize + 1));
    g.add_edge(x, a);
    g.add_edge(x, b);
  }
  return {AnnotatedInstance(std::move(g), s.k), {}};
}

Generated flower(const GeneratorSpec& s) {
  need(s.petals >= 0, "petals must be non-negative");
  // Petals are 4-cycles meeting only in the centre.
  Graph g;
  VertexId c = g.add_vertex();
  for (int i = 0; i < s.petals; ++i) {
    VertexId a = g.add_vertex(), b = g.add_vertex(), d = g.add_vertex();
    g.add_edge(c, a);
    g.add_edge(a, b);
    g.add_edge(b, d);
    g.add_edge(d, c);
  }
  return {AnnotatedInstance(std::move(g), s.k), {"flower " + std::to_string(s.petals)}};
}

}  // namespace

Generated generate(const GeneratorSpec& s) {
  need(s.k >= 0, "k must be non-negative");
  need(s.n >= 0, "n must be non-negative");
  Rng rng(s.seed);
  Generated out;
  if (s.name == "gnp") {
    need(s.p >= 0 && s.p <= 1, "p must lie in [0,1]");
    out = {AnnotatedInstance(gnp(s.n, s.p, rng), s.k), {}};
  } else if (s.name == "planted-chordal-plus-noise") {
    out = planted(s, rng);
  } else if (s.name == "long-clique-path") {
    out = long_clique_path(s, rng);
  } else if (s.name == "flower") {
    out = flower(s);
  } else {
    throw DomainError("unknown generator '" + s.name + "'");
  }
  out.comments.insert(out.comments.begin(), "generator " + s.name + " seed " + std::to_string(s.seed));
  return out;
}

}  // namespace cvd
