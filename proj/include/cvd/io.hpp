#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cvd/graph.hpp"
#include "cvd/kernel.hpp"

namespace cvd {

class ParseError : public DomainError {
public:
  ParseError(int line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

private:
  int line_;
};

/// Reads the `p cvd n m k` text format. Comments are returned separately
/// when `comments` is non-null.
AnnotatedInstance parse_instance(std::string_view text, std::vector<std::string>* comments = nullptr);
AnnotatedInstance read_instance_file(const std::string& path, std::vector<std::string>* comments = nullptr);

/// Renumbers vertices to 1..n in id order. `forced` is dropped.
AnnotatedInstance compact(const AnnotatedInstance& inst, std::map<VertexId, VertexId>* renumbering = nullptr);

/// Canonical text; the instance is compacted first.
std::string write_instance(const AnnotatedInstance& inst, const std::vector<std::string>& comments = {});
void write_instance_file(const std::string& path, const std::string& text);

nlohmann::json trace_to_json(const Trace& trace);
nlohmann::json run_report(const AnnotatedInstance& input, const KernelOutcome& out, double millis);

}  // namespace cvd
