#include "cvd/trace.hpp"

namespace cvd {

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Solution: return "solution";
    case OpKind::Delete: return "delete";
    case OpKind::Saturate: return "saturate";
    case OpKind::Mandatory: return "mandatory";
    case OpKind::Irrelevant: return "irrelevant";
    case OpKind::Gadget: return "gadget";
    case OpKind::ClearLabels: return "clear-labels";
    case OpKind::DecideYes: return "decide-yes";
    case OpKind::DecideNo: return "decide-no";
  }
  return "?";
}

namespace {

void need(const TraceOp& op, std::size_t n) {
  if (op.args.size() != n)
    throw DomainError(std::string("trace op ") + to_string(op.kind) + " expects " + std::to_string(n) +
                      " arguments");
}

}  // namespace

bool apply_op(AnnotatedInstance& inst, const TraceOp& op) {
  switch (op.kind) {
    case OpKind::Solution:
      need(op, 1);
      return remove_vertex_into_solution(inst, op.args[0]);
    case OpKind::Delete:
      need(op, 1);
      delete_vertex(inst, op.args[0]);
      return true;
    case OpKind::Saturate:
      need(op, 1);
      saturate_and_remove(inst, op.args[0]);
      return true;
    case OpKind::Mandatory:
      need(op, 2);
      // Rule 4 may promote an edge that an earlier pass marked irrelevant.
      if (inst.graph.has_edge(op.args[0], op.args[1]))
        inst.set_label(op.args[0], op.args[1], EdgeLabel::Mandatory);
      else
        add_mandatory_edge(inst, op.args[0], op.args[1]);
      return true;
    case OpKind::Irrelevant:
      need(op, 2);
      inst.set_label(op.args[0], op.args[1], EdgeLabel::Irrelevant);
      return true;
    case OpKind::Gadget: {
      need(op, 2);
      const VertexId x = op.args[0], y = op.args[1];
      for (int i = 0; i <= inst.k; ++i) {
        VertexId xi = inst.graph.add_vertex();
        VertexId yi = inst.graph.add_vertex();
        inst.graph.add_edge(x, xi);
        inst.graph.add_edge(xi, yi);
        inst.graph.add_edge(yi, y);
      }
      return true;
    }
    case OpKind::ClearLabels:
      inst.labels.clear();
      return true;
    case OpKind::DecideYes:
    case OpKind::DecideNo:
      return true;
  }
  return true;
}

bool Editor::apply(const std::string& rule, OpKind kind, VertexList args) {
  TraceOp op{rule, kind, std::move(args)};
  if (!apply_op(inst_, op)) return false;
  trace_.push_back(std::move(op));
  return true;
}

}  // namespace cvd
