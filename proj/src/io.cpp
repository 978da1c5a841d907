#include "cvd/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace cvd {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long number(std::string_view tok, int line, const char* what) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + std::string(tok) + "'");
  return x;
}

}  // namespace

AnnotatedInstance parse_instance(std::string_view text, std::vector<std::string>* comments) {
  long long n = -1, m = 0, k = 0;
  int header_line = 0;
  std::map<Edge, int> edge_line;
  struct Note {
    Edge e;
    EdgeLabel label;
    int line;
  };
  std::vector<Note> notes;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      if (comments) {
        std::string_view rest = line.substr(line.find('c') + 1);
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.remove_suffix(1);
        comments->emplace_back(rest);
      }
      continue;
    }
    if (tok[0] == "p") {
      if (header_line) throw ParseError(line_no, "duplicate header (first on line " + std::to_string(header_line) + ")");
      if (tok.size() != 5 || tok[1] != "cvd") throw ParseError(line_no, "malformed header, expected 'p cvd <n> <m> <k>'");
      n = number(tok[2], line_no, "n");
      m = number(tok[3], line_no, "m");
      k = number(tok[4], line_no, "k");
      if (n < 0 || m < 0 || k < 0) throw ParseError(line_no, "header values must be non-negative");
      if (n > 100'000'000) throw ParseError(line_no, "n is too large");
      header_line = line_no;
      continue;
    }
    if (tok[0] != "e" && tok[0] != "m" && tok[0] != "i")
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    if (!header_line) throw ParseError(line_no, "edge line before the 'p cvd' header");
    if (tok.size() != 3) throw ParseError(line_no, "expected '" + std::string(tok[0]) + " <u> <v>'");
    long long u = number(tok[1], line_no, "u"), v = number(tok[2], line_no, "v");
    for (long long x : {u, v})
      if (x < 1 || x > n)
        throw ParseError(line_no, "vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    Edge e(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (tok[0] == "e") {
      auto [it, fresh] = edge_line.emplace(e, line_no);
      if (!fresh) throw ParseError(line_no, "duplicate edge (first on line " + std::to_string(it->second) + ")");
    } else {
      notes.push_back({e, tok[0] == "m" ? EdgeLabel::Mandatory : EdgeLabel::Irrelevant, line_no});
    }
  }
  if (!header_line) throw ParseError(line_no, "missing 'p cvd <n> <m> <k>' header");
  if (static_cast<long long>(edge_line.size()) != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges but the body has " +
                                      std::to_string(edge_line.size()));

  Graph g;
  for (long long i = 0; i < n; ++i) g.add_vertex();
  for (const auto& [e, line] : edge_line) g.add_edge(e.first, e.second);
  AnnotatedInstance inst(std::move(g), static_cast<int>(k));
  std::map<Edge, int> noted;
  for (const Note& note : notes) {
    if (!edge_line.contains(note.e))
      throw ParseError(note.line, "annotation on undeclared edge {" + std::to_string(note.e.first) + "," +
                                      std::to_string(note.e.second) + "}");
    auto [it, fresh] = noted.emplace(note.e, note.line);
    if (!fresh) throw ParseError(note.line, "edge already annotated on line " + std::to_string(it->second));
    inst.set_label(note.e.first, note.e.second, note.label);
  }
  return inst;
}

AnnotatedInstance read_instance_file(const std::string& path, std::vector<std::string>* comments) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), comments);
}

AnnotatedInstance compact(const AnnotatedInstance& inst, std::map<VertexId, VertexId>* renumbering) {
  std::map<VertexId, VertexId> id;
  Graph g;
  for (VertexId v : inst.graph.vertices()) id[v] = g.add_vertex();
  for (const Edge& e : inst.graph.edges()) g.add_edge(id[e.first], id[e.second]);
  AnnotatedInstance out(std::move(g), inst.k);
  for (const auto& [e, label] : inst.labels) out.set_label(id[e.first], id[e.second], label);
  if (renumbering) *renumbering = std::move(id);
  return out;
}

std::string write_instance(const AnnotatedInstance& input, const std::vector<std::string>& comments) {
  AnnotatedInstance inst = compact(input);
  std::ostringstream os;
  for (const auto& c : comments) os << "c " << c << '\n';
  os << "p cvd " << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << ' ' << inst.k << '\n';
  for (const Edge& e : inst.graph.edges()) os << "e " << e.first << ' ' << e.second << '\n';
  for (const Edge& e : inst.edges_with(EdgeLabel::Mandatory)) os << "m " << e.first << ' ' << e.second << '\n';
  for (const Edge& e : inst.edges_with(EdgeLabel::Irrelevant)) os << "i " << e.first << ' ' << e.second << '\n';
  return os.str();
}

void write_instance_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

nlohmann::json trace_to_json(const Trace& trace) {
  nlohmann::json ops = nlohmann::json::array();
  for (const TraceOp& op : trace) ops.push_back({{"rule", op.rule}, {"op", to_string(op.kind)}, {"args", op.args}});
  return ops;
}

nlohmann::json run_report(const AnnotatedInstance& input, const KernelOutcome& out, double millis) {
  const Thresholds& t = out.thresholds;
  nlohmann::json j;
  j["n"] = input.graph.num_vertices();
  j["m"] = input.graph.num_edges();
  j["k"] = input.k;
  j["rules"] = out.rules;
  j["thresholds"] = {{"delta", t.delta}, {"delta_prime", t.delta_prime}, {"kappa", t.kappa},
                     {"small_delta", t.small_delta}, {"f", t.f}, {"k", t.k}, {"path_kappa", t.path_kappa}};
  j["verdict"] = to_string(out.verdict);
  j["millis"] = millis;
  j["output"] = {{"n", out.instance.graph.num_vertices()},
                 {"m", out.instance.graph.num_edges()},
                 {"k", out.instance.k}};
  j["passes"] = out.passes;
  j["bootstrap"] = {{"ran", out.bootstrap_ran}, {"accepted", out.bootstrap_accepted}};
  j["unresolved_cliques"] = out.unresolved_cliques;
  j["noncomplying_paths"] = out.noncomplying_paths;
  j["bound_violations"] = out.bounds.violations;
  if (!out.reason.empty()) j["reason"] = out.reason;
  return j;
}

}  // namespace cvd
