#include "cvd/graph.hpp"

#include <algorithm>
#include <string>

namespace cvd {

const char* to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::Relevant: return "relevant";
    case EdgeLabel::Irrelevant: return "irrelevant";
    case EdgeLabel::Mandatory: return "mandatory";
  }
  return "?";
}

namespace {

bool insert_sorted(VertexList& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool erase_sorted(VertexList& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

std::string vname(VertexId v) { return std::to_string(v); }

}  // namespace

VertexId Graph::add_vertex() {
  VertexId id = next_id_;
  add_vertex(id);
  return id;
}

void Graph::add_vertex(VertexId id) {
  if (id == 0) throw DomainError("vertex id 0 is reserved");
  if (!adj_.emplace(id, VertexList{}).second)
    throw DomainError("vertex " + vname(id) + " already exists");
  next_id_ = std::max(next_id_, id + 1);
}

void Graph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw DomainError("unknown vertex " + vname(v));
  for (VertexId u : it->second) erase_sorted(adj_.at(u), v);
  num_edges_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw DomainError("self-loop on vertex " + vname(u));
  VertexList& nu = adj_of(u);
  VertexList& nv = adj_of(v);
  if (!insert_sorted(nu, v)) return false;
  insert_sorted(nv, u);
  ++num_edges_;
  return true;
}

bool Graph::remove_edge(VertexId u, VertexId v) {
  VertexList& nu = adj_of(u);
  VertexList& nv = adj_of(v);
  if (!erase_sorted(nu, v)) return false;
  erase_sorted(nv, u);
  --num_edges_;
  return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const { return adj_of(v); }

VertexList Graph::vertices() const {
  VertexList out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [v, nbrs] : adj_)
    for (VertexId u : nbrs)
      if (v < u) out.emplace_back(v, u);
  return out;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  Graph g;
  VertexList sorted(keep.begin(), keep.end());
  normalize(sorted);
  for (VertexId v : sorted) {
    if (!has_vertex(v)) throw DomainError("unknown vertex " + vname(v));
    g.adj_.emplace(v, VertexList{});
  }
  for (VertexId v : sorted) {
    VertexList& out = g.adj_.at(v);
    for (VertexId u : adj_of(v))
      if (contains(sorted, u)) out.push_back(u);
    g.num_edges_ += out.size();
  }
  g.num_edges_ /= 2;
  g.next_id_ = next_id_;
  return g;
}

Graph Graph::without(std::span<const VertexId> drop) const {
  VertexList sorted(drop.begin(), drop.end());
  normalize(sorted);
  VertexList keep;
  for (const auto& [v, _] : adj_)
    if (!contains(sorted, v)) keep.push_back(v);
  return induced(keep);
}

bool Graph::is_valid() const {
  std::size_t half_edges = 0;
  for (const auto& [v, nbrs] : adj_) {
    if (v == 0 || v >= next_id_) return false;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v) return false;
      if (i > 0 && nbrs[i - 1] >= nbrs[i]) return false;
      auto it = adj_.find(nbrs[i]);
      if (it == adj_.end()) return false;
      if (!std::binary_search(it->second.begin(), it->second.end(), v)) return false;
    }
    half_edges += nbrs.size();
  }
  return half_edges == 2 * num_edges_;
}

const VertexList& Graph::adj_of(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw DomainError("unknown vertex " + vname(v));
  return it->second;
}

VertexList& Graph::adj_of(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw DomainError("unknown vertex " + vname(v));
  return it->second;
}

EdgeLabel AnnotatedInstance::label(VertexId u, VertexId v) const {
  auto it = labels.find(Edge(u, v));
  return it == labels.end() ? EdgeLabel::Relevant : it->second;
}

void AnnotatedInstance::set_label(VertexId u, VertexId v, EdgeLabel l) {
  if (!graph.has_edge(u, v))
    throw DomainError("cannot label missing edge {" + vname(u) + "," + vname(v) + "}");
  if (l == EdgeLabel::Relevant)
    labels.erase(Edge(u, v));
  else
    labels[Edge(u, v)] = l;
}

std::vector<Edge> AnnotatedInstance::edges_with(EdgeLabel l) const {
  std::vector<Edge> out;
  if (l == EdgeLabel::Relevant) {
    for (const Edge& e : graph.edges())
      if (!labels.contains(e)) out.push_back(e);
    return out;
  }
  for (const auto& [e, lab] : labels)
    if (lab == l) out.push_back(e);
  return out;
}

std::size_t AnnotatedInstance::count(EdgeLabel l) const {
  if (l == EdgeLabel::Relevant) return graph.num_edges() - labels.size();
  std::size_t n = 0;
  for (const auto& [e, lab] : labels) n += lab == l;
  return n;
}

std::size_t AnnotatedInstance::mandatory_degree(VertexId v) const {
  std::size_t d = 0;
  for (VertexId u : graph.neighbors(v)) d += label(u, v) == EdgeLabel::Mandatory;
  return d;
}

VertexList AnnotatedInstance::mandatory_endpoints() const {
  VertexList out;
  for (const auto& [e, lab] : labels)
    if (lab == EdgeLabel::Mandatory) {
      out.push_back(e.first);
      out.push_back(e.second);
    }
  normalize(out);
  return out;
}

bool AnnotatedInstance::is_valid() const {
  if (!graph.is_valid() || k < 0) return false;
  for (const auto& [e, lab] : labels)
    if (lab == EdgeLabel::Relevant || !graph.has_edge(e.first, e.second)) return false;
  return true;
}

VertexList relevant_neighbors(const AnnotatedInstance& inst, VertexId v) {
  VertexList out;
  for (VertexId u : inst.graph.neighbors(v))
    if (inst.label(u, v) == EdgeLabel::Relevant) out.push_back(u);
  return out;
}

void add_mandatory_edge(AnnotatedInstance& inst, VertexId u, VertexId v) {
  if (u == v) throw DomainError("mandatory edge would be a self-loop on " + vname(u));
  if (!inst.graph.has_vertex(u)) throw DomainError("unknown vertex " + vname(u));
  if (!inst.graph.has_vertex(v)) throw DomainError("unknown vertex " + vname(v));
  if (inst.label(u, v) == EdgeLabel::Irrelevant)
    throw InvariantError("edge {" + vname(u) + "," + vname(v) + "} is irrelevant; cannot make it mandatory");
  inst.graph.add_edge(u, v);
  inst.set_label(u, v, EdgeLabel::Mandatory);
}

void delete_vertex(AnnotatedInstance& inst, VertexId v) {
  for (VertexId u : inst.graph.neighbors(v)) inst.labels.erase(Edge(u, v));
  inst.graph.remove_vertex(v);
}

bool remove_vertex_into_solution(AnnotatedInstance& inst, VertexId v) {
  if (!inst.graph.has_vertex(v)) throw DomainError("unknown vertex " + vname(v));
  if (inst.k == 0) return false;
  delete_vertex(inst, v);
  --inst.k;
  inst.forced.push_back(v);
  return true;
}

void saturate_and_remove(AnnotatedInstance& inst, VertexId u) {
  VertexList nbrs(inst.graph.neighbors(u).begin(), inst.graph.neighbors(u).end());
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) inst.graph.add_edge(nbrs[i], nbrs[j]);
  delete_vertex(inst, u);
}

bool contains(std::span<const VertexId> sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

VertexList set_union(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexList set_difference(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexList set_intersection(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void normalize(VertexList& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace cvd
