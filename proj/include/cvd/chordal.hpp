#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// A chordless cycle on at least four vertices. Canonical form starts at the
/// smallest id and continues towards its smaller cycle neighbor.
struct Hole {
  VertexList cycle;
  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Empty string when `hole` is a chordless cycle of length >= 4 in `g`.
std::string check_hole(const Graph& g, const Hole& hole);

/// Maximum cardinality search visit order; ties go to the smallest id.
VertexList mcs_order(const Graph& g);

bool is_chordal(const Graph& g);

std::optional<Hole> find_hole(const Graph& g);

/// Thrown by algorithms that require a chordal input; carries a witness.
class NotChordalError : public DomainError {
public:
  explicit NotChordalError(Hole witness);
  const Hole& witness() const { return witness_; }

private:
  Hole witness_;
};

/// Perfect elimination order that always eliminates the smallest-id
/// simplicial vertex. Throws NotChordalError on non-chordal input.
VertexList perfect_elimination_order(const Graph& g);

struct CliqueForest {
  std::vector<VertexList> bags;                       // sorted, bags in lexicographic order
  std::vector<std::pair<int, int>> tree_edges;        // (i, j) with i < j
  std::map<VertexId, std::vector<int>> bag_of;        // ascending bag indices

  [[nodiscard]] std::vector<std::vector<int>> adjacency() const;
  [[nodiscard]] std::size_t max_bag_size() const;
};

/// Bags are the maximal cliques; tree edges form a maximum-weight spanning
/// forest of the clique intersection graph. Throws NotChordalError.
CliqueForest clique_forest(const Graph& g);

/// Empty string when `f` is a valid clique forest of `g` (maximal-clique
/// bags, edge coverage, running intersection, acyclicity).
std::string check_clique_forest(const Graph& g, const CliqueForest& f);

/// Maximum independent set via greedy selection along
/// perfect_elimination_order. Throws NotChordalError.
VertexList mis_chordal(const Graph& g);

/// Minimum clique cover of a chordal graph (one clique per MIS vertex).
std::vector<VertexList> clique_cover_chordal(const Graph& g);

std::size_t max_clique_size(const Graph& g);

/// Tree path between two bags (inclusive), empty if they lie in different trees.
std::vector<int> forest_path(const CliqueForest& f, int from, int to);

/// BFS distances from one bag to all others (-1 when unreachable).
std::vector<int> forest_distances(const CliqueForest& f, int from);

}  // namespace cvd
