#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvd/chordal.hpp"
#include "cvd/graph.hpp"
#include "cvd/solvers.hpp"
#include "cvd/trace.hpp"

namespace cvd {

struct KernelOptions {
  SolutionProvider provider = greedy_provider();
  /// Rerun the whole pipeline once on its own output.
  bool bootstrap = true;
  /// Size the degree-2 path stage by the largest bag instead of the clique
  /// marking budget. Both are valid bag bounds; the measured one is tighter.
  bool tight_kappa = false;
  /// Overrides the clique size above which cliques are shrunk.
  std::optional<std::int64_t> shrink_threshold;
};

enum class Verdict { Reduced, Yes, No };
const char* to_string(Verdict v);

struct Thresholds {
  int k = 0;
  std::int64_t f = 0;
  std::int64_t delta = 0;        // (k+3) f
  std::int64_t delta_prime = 0;  // delta + k
  std::int64_t kappa = 0;        // clique marking budget
  std::int64_t small_delta = 0;  // 2(k+1) + 6 kappa
  std::int64_t path_kappa = 0;   // bag bound actually used on degree-2 paths
};

/// Named runtime checks of the counting bounds; any violation is recorded.
struct BoundLog {
  std::map<std::string, std::int64_t> checks;
  std::vector<std::string> violations;
  void check(const std::string& name, bool ok, const std::string& detail = {});
  void merge(const BoundLog& other);
};

struct KernelOutcome {
  Verdict verdict = Verdict::Reduced;
  /// Reduced instance, or the canonical instance for a decided verdict.
  AnnotatedInstance instance;
  /// Vertices already committed to the solution, plus a completion for YES.
  VertexList solution;
  std::string reason;
  Trace trace;
  std::map<std::string, int> rules;
  Thresholds thresholds;
  BoundLog bounds;
  int passes = 0;
  int unresolved_cliques = 0;
  int noncomplying_paths = 0;
  bool bootstrap_ran = false;
  bool bootstrap_accepted = false;
};

AnnotatedInstance canonical_yes(int k);
AnnotatedInstance canonical_no();

KernelOutcome kernelize(const AnnotatedInstance& input, const KernelOptions& opt = {});

/// Replays a trace on a copy of the input; decide ops produce the canonical
/// instances.
AnnotatedInstance replay_trace(const AnnotatedInstance& input, const Trace& trace);

/// Decision implied by the outcome, solving a reduced instance exactly.
bool implied_answer(const KernelOutcome& out);

// Individual stages, exposed for testing.

enum class Step { None, Changed, Yes, No };

/// Rule 2 exhaustively, then the |E_M| <= k^2 test.
Step rule_incident_mandatory(Editor& ed);

struct IndependentDegreeContext {
  VertexId v = 0;
  VertexList blocker;
  VertexList independent;  // I
  VertexList rest;         // X = N(v) \ (B_v ∪ I)
  std::vector<VertexList> components;
  std::vector<VertexId> z;  // z[i] is the I-vertex of components[i]
};

/// Builds the context for v and checks the component lemmas (throws
/// InvariantError if they fail, which means B_v is not a v-blocker).
IndependentDegreeContext independent_context(const AnnotatedInstance& inst, VertexId v, const VertexList& blocker);

struct HHat {
  VertexList close;  // B_c
  VertexList far;    // B_f
  /// edges[i] lists components adjacent to blocker[i] (indices into components)
  std::vector<std::vector<int>> edges;
};
HHat build_hhat(const AnnotatedInstance& inst, const IndependentDegreeContext& ctx);

/// One application of Rule 3 (all isolated components at once) or Rule 4
/// at the smallest vertex whose independent degree may exceed delta.
Step independent_degree_step(Editor& ed, const VertexList& modulator,
                             const std::map<VertexId, VertexList>& blockers, std::int64_t delta,
                             BoundLog* log = nullptr);

/// Independent-degree stage run to completion, recomputing blockers with
/// the provider after every change.
Step bound_independent_degree(Editor& ed, const SolutionProvider& provider, BoundLog* log = nullptr);

/// Rule 5 exhaustively on vertices outside dprime. Returns removals.
int rule_simplicial_removal(Editor& ed, const VertexList& dprime);

struct PathDecomposition {
  CliqueForest forest;
  std::vector<int> private_bags;
  std::vector<int> vf;
  std::vector<std::vector<int>> paths;  // bag indices, from the smaller endpoint
  int leaves = 0;
  int branch_nodes = 0;
};

PathDecomposition analyze_clique_forest(const AnnotatedInstance& inst, const VertexList& dprime,
                                        std::int64_t delta_prime, BoundLog* log = nullptr);

bool complies(const Graph& g, const std::vector<VertexList>& bags, VertexId d);

struct PathSplit {
  std::vector<int> removed;                 // positions on the path
  std::vector<std::vector<int>> pieces;     // positions of each manageable subpath
  std::vector<bool> compliant;
};

PathSplit split_path_complying(const Graph& g, const std::vector<VertexList>& bags, const VertexList& dprime);

/// Rule 1 on non-adjacent D_a pairs or one Rule 6 deletion, when the
/// interior U of the path exceeds small_delta.
Step reduce_manageable_path(Editor& ed, const std::vector<VertexList>& bags, const VertexList& dprime,
                            std::int64_t small_delta, BoundLog* log = nullptr);

/// Rule 7: replaces every mandatory edge by k+1 four-cycles and drops all labels.
void rule_unmark_mandatory(Editor& ed, BoundLog* log = nullptr);

}  // namespace cvd
