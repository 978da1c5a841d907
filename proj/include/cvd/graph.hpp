#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvd {

/// Stable vertex identifier. Ids are never reused once a vertex is deleted.
using VertexId = std::uint32_t;

using VertexList = std::vector<VertexId>;

/// Thrown when an operation's precondition on its arguments is violated.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant of the pipeline is broken.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Unordered vertex pair stored with `first < second`.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeLabel : std::uint8_t { Relevant, Irrelevant, Mandatory };

const char* to_string(EdgeLabel label);

/// Undirected simple graph with sorted adjacency lists keyed by stable ids.
class Graph {
public:
  Graph() = default;

  /// Adds a vertex with the next fresh id and returns it.
  VertexId add_vertex();
  /// Adds a vertex with an explicit id. Throws if the id is already present.
  void add_vertex(VertexId id);
  void remove_vertex(VertexId v);

  /// Returns true if the edge was newly inserted.
  bool add_edge(VertexId u, VertexId v);
  bool remove_edge(VertexId u, VertexId v);

  [[nodiscard]] bool has_vertex(VertexId v) const { return adj_.contains(v); }
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  [[nodiscard]] VertexList vertices() const;
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::size_t num_vertices() const { return adj_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return num_edges_; }
  [[nodiscard]] bool empty() const { return adj_.empty(); }

  /// Smallest id that has never been handed out.
  [[nodiscard]] VertexId next_id() const { return next_id_; }

  [[nodiscard]] Graph induced(std::span<const VertexId> keep) const;
  [[nodiscard]] Graph without(std::span<const VertexId> drop) const;

  /// Checks symmetry, sortedness, no loops, no parallel edges, edge count.
  [[nodiscard]] bool is_valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  const VertexList& adj_of(VertexId v) const;
  VertexList& adj_of(VertexId v);

  std::map<VertexId, VertexList> adj_;
  std::size_t num_edges_ = 0;
  VertexId next_id_ = 1;
};

/// Graph with irrelevant/mandatory edge annotations, budget and the audit
/// trail of vertices committed to the solution.
struct AnnotatedInstance {
  Graph graph;
  std::map<Edge, EdgeLabel> labels;  // only non-Relevant entries
  int k = 0;
  VertexList forced;

  AnnotatedInstance() = default;
  AnnotatedInstance(Graph g, int budget) : graph(std::move(g)), k(budget) {}

  [[nodiscard]] EdgeLabel label(VertexId u, VertexId v) const;
  /// Sets the label of an existing edge. Relevant erases the annotation.
  void set_label(VertexId u, VertexId v, EdgeLabel label);

  [[nodiscard]] std::vector<Edge> edges_with(EdgeLabel label) const;
  [[nodiscard]] std::size_t count(EdgeLabel label) const;
  [[nodiscard]] std::size_t mandatory_degree(VertexId v) const;
  /// Endpoints of mandatory edges, ascending.
  [[nodiscard]] VertexList mandatory_endpoints() const;

  /// Graph invariants plus: every annotation refers to an existing edge.
  [[nodiscard]] bool is_valid() const;

  friend bool operator==(const AnnotatedInstance&, const AnnotatedInstance&) = default;
};

/// Neighbors joined to `v` by a Relevant edge, ascending.
VertexList relevant_neighbors(const AnnotatedInstance& inst, VertexId v);

/// Inserts {u,v} if absent and labels it Mandatory.
void add_mandatory_edge(AnnotatedInstance& inst, VertexId u, VertexId v);

/// Deletes `v` into the solution and decrements k. Returns false without
/// touching the instance when k == 0 (the instance is then a no-instance).
[[nodiscard]] bool remove_vertex_into_solution(AnnotatedInstance& inst, VertexId v);

/// Turns N(u) into a clique (new edges Relevant) and deletes u. k unchanged.
void saturate_and_remove(AnnotatedInstance& inst, VertexId u);

/// Deletes a vertex and the annotations of its incident edges.
void delete_vertex(AnnotatedInstance& inst, VertexId v);

// Sorted-set helpers shared across modules.
[[nodiscard]] bool contains(std::span<const VertexId> sorted, VertexId v);
[[nodiscard]] VertexList set_union(std::span<const VertexId> a, std::span<const VertexId> b);
[[nodiscard]] VertexList set_difference(std::span<const VertexId> a, std::span<const VertexId> b);
[[nodiscard]] VertexList set_intersection(std::span<const VertexId> a, std::span<const VertexId> b);
void normalize(VertexList& v);

}  // namespace cvd
