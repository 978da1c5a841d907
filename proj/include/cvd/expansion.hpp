#pragma once

#include <map>
#include <string>
#include <vector>

namespace cvd {

/// Bipartite graph with sides indexed 0..a_size-1 and 0..b_size-1.
/// adj[a] lists the B-side neighbors of a in ascending order.
struct Bipartite {
  int a_size = 0;
  int b_size = 0;
  std::vector<std::vector<int>> adj;

  Bipartite() = default;
  Bipartite(int a, int b) : a_size(a), b_size(b), adj(a) {}
  void add_edge(int a, int b);
  [[nodiscard]] bool has_edge(int a, int b) const;
};

/// X ⊆ A, Y ⊆ B and a c-star per member of X covering Y exactly.
struct Expansion {
  std::vector<int> X;
  std::vector<int> Y;
  std::map<int, std::vector<int>> stars;
};

/// Maximum matching by augmenting paths, lowest indices first.
/// Returns the partner of each A vertex, or -1.
std::vector<int> max_matching(const Bipartite& h);

/// c-expansion from a nonempty X ⊆ A into Y ⊆ B with N(Y) ⊆ X.
/// Requires c >= 1, A nonempty, |B| >= c|A| and no isolated B vertex.
Expansion q_expansion(const Bipartite& h, int c);

/// Empty string when `e` is a valid c-expansion in `h`.
std::string check_expansion(const Bipartite& h, int c, const Expansion& e);

}  // namespace cvd
