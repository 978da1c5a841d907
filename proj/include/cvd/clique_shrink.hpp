#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cvd/chordal.hpp"
#include "cvd/graph.hpp"
#include "cvd/trace.hpp"

namespace cvd {

/// Per-category limits on the number of marked clique vertices.
struct MarkBudget {
  std::int64_t t_witness = 0;
  std::int64_t t_star_witness = 0;
  std::int64_t fragment = 0;
  std::int64_t mandatory = 0;
  [[nodiscard]] std::int64_t total() const { return t_witness + t_star_witness + fragment + mandatory; }
};

MarkBudget mark_budget(std::size_t modulator_size, int k, std::int64_t delta);

/// Vertices outside D ∪ K that reach K from a relevant neighbor of t
/// through vertices not adjacent to t.
struct DangerReport {
  VertexId t = 0;
  VertexList t_dangerous;
  VertexList t_star_dangerous;
  std::map<VertexId, VertexList> t_witnesses;
  std::map<VertexId, VertexList> t_star_witnesses;
  /// Path from each dangerous vertex to its smallest witness (t-witness first).
  std::map<VertexId, VertexList> witness_paths;
};

DangerReport dangerous_sets(const AnnotatedInstance& inst, const VertexList& d, const VertexList& clique,
                            VertexId t);

struct MarkCounts {
  std::int64_t t_witness = 0;
  std::int64_t t_star_witness = 0;
  std::int64_t fragment = 0;
  std::int64_t mandatory = 0;
};

struct MarkOutcome {
  enum class Kind { Marks, Forced, Mandatory, Unresolved };
  Kind kind = Kind::Marks;
  VertexList marks;
  MarkCounts counts;
  VertexId forced = 0;
  Edge mandatory;
  std::string note;
};

/// Marks the vertices of the maximal clique `clique` of G \ D that must
/// survive, or returns a certified forced vertex or mandatory pair.
/// Unresolved means a bound failed without a certificate; the caller keeps
/// the clique untouched.
MarkOutcome mark_clique(const AnnotatedInstance& inst, const VertexList& d, std::int64_t delta,
                        const VertexList& clique);

struct ShrinkOptions {
  /// Cliques larger than this are processed; defaults to the budget total.
  std::optional<std::int64_t> threshold;
};

struct ShrinkReport {
  bool changed = false;
  bool decided_no = false;
  int deleted = 0;
  int forced = 0;
  int mandatory = 0;
  int unresolved = 0;
  MarkCounts worst;  // largest per-category counts seen on any processed clique
  MarkBudget budget;
};

/// Performs at most one shrinking action (a batch deletion, a forced vertex
/// or a mandatory edge). D must be a chordal deletion set.
ShrinkReport shrink_step(Editor& ed, VertexList& d, std::int64_t delta, const ShrinkOptions& opt = {});

/// Repeats shrink_step until every maximal clique of G \ D is within the
/// threshold or only unresolved cliques remain.
ShrinkReport shrink_cliques(Editor& ed, VertexList& d, std::int64_t delta, const ShrinkOptions& opt = {});

}  // namespace cvd
