#pragma once

#include <map>
#include <string>
#include <vector>

#include "cvd/graph.hpp"

namespace cvd {

/// Primitive instance edits. Every reduction is expressed through these so
/// that a recorded trace can be replayed on a fresh copy of the input.
enum class OpKind : std::uint8_t {
  Solution,     // args {v}: delete v into the solution, k -= 1
  Delete,       // args {v}: delete v, k unchanged
  Saturate,     // args {u}: make N(u) a clique, delete u
  Mandatory,    // args {u, v}: insert edge if needed, label Mandatory
  Irrelevant,   // args {u, v}: label an existing edge Irrelevant
  Gadget,       // args {x, y}: k+1 fresh paths x - x_i - y_i - y
  ClearLabels,  // drop every annotation
  DecideYes,
  DecideNo,
};

const char* to_string(OpKind kind);

struct TraceOp {
  std::string rule;
  OpKind kind = OpKind::Delete;
  VertexList args;
  friend bool operator==(const TraceOp&, const TraceOp&) = default;
};

using Trace = std::vector<TraceOp>;

/// Applies one edit. Returns false only for Solution when k == 0, in which
/// case the instance is untouched. Decide ops are no-ops here.
bool apply_op(AnnotatedInstance& inst, const TraceOp& op);

/// Applies edits to an instance while recording them and counting rules.
class Editor {
public:
  explicit Editor(AnnotatedInstance& inst) : inst_(inst) {}

  [[nodiscard]] AnnotatedInstance& instance() { return inst_; }
  [[nodiscard]] const AnnotatedInstance& instance() const { return inst_; }
  [[nodiscard]] const Trace& trace() const { return trace_; }
  [[nodiscard]] const std::map<std::string, int>& rule_counts() const { return counts_; }

  bool apply(const std::string& rule, OpKind kind, VertexList args);
  /// Counts one application of a rule that may consist of several ops.
  void count(const std::string& rule) { ++counts_[rule]; }
  void record(const std::string& rule, OpKind kind) { trace_.push_back({rule, kind, {}}); }

private:
  AnnotatedInstance& inst_;
  Trace trace_;
  std::map<std::string, int> counts_;
};

}  // namespace cvd
