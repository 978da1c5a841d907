#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "cvd/graph.hpp"

namespace cvd {

/// Strategy producing a chordal deletion set for any graph.
struct SolutionProvider {
  std::string name;
  /// True when every returned set is a minimum solution. Only then may a
  /// blocker computation conclude that a vertex belongs to every small solution.
  bool optimal = false;
  std::function<VertexList(const Graph&)> solve;
};

SolutionProvider greedy_provider();
SolutionProvider exact_provider();

/// Minimum solution of size <= k, lexicographically smallest among minimum
/// ones, or nullopt when none exists.
std::optional<VertexList> exact_cvd(const Graph& g, int k);

/// Whether some solution of size <= k exists (no minimisation).
bool has_cvd_solution(const Graph& g, int k);

/// Some S with |S| <= k that covers every mandatory edge and leaves G \ S
/// chordal, or nullopt. Irrelevant labels are ignored.
std::optional<VertexList> annotated_cvd(const AnnotatedInstance& inst);

/// Repeatedly deletes the hole vertex of maximum degree (smallest id on
/// ties). A forbidden vertex is never chosen.
VertexList greedy_solution(const Graph& g, std::optional<VertexId> forbidden = std::nullopt);

struct BlockerResult {
  std::optional<VertexId> forced;
  VertexList blocker;
  [[nodiscard]] bool is_forced() const { return forced.has_value(); }
};

/// Solves the graph with `budget` true twins of v added and reads off a
/// solution avoiding v, or reports v as forced.
BlockerResult v_blocker(const Graph& g, VertexId v, const SolutionProvider& provider, int budget);

struct RedundantResult {
  std::optional<VertexId> forced;
  VertexList solution;
  std::map<VertexId, VertexList> blockers;
  [[nodiscard]] bool is_forced() const { return forced.has_value(); }
};

/// D0 plus a v-blocker for every v in D0.
RedundantResult redundant_solution(const Graph& g, const VertexList& d0,
                                   const SolutionProvider& provider, int budget);

/// Every single-vertex removal from d leaves a chordal deletion set.
bool is_redundant(const Graph& g, const VertexList& d);

}  // namespace cvd
