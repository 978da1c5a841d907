#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvd/chordal.hpp"
#include "cvd/cli.hpp"
#include "cvd/generators.hpp"
#include "cvd/io.hpp"
#include "cvd/solvers.hpp"
#include "oracles.hpp"

using namespace cvd;
namespace fs = std::filesystem;

namespace {

const char* kC4 = "p cvd 4 4 1\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";

int parse_error_line(const std::string& text) {
  try {
    (void)parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

class TempDir {
public:
  TempDir() : path_(fs::temp_directory_path() / ("cvd-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& body = {}) const {
    std::string p = (path_ / name).string();
    if (!body.empty()) std::ofstream(p) << body;
    return p;
  }

private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, C4) {
  AnnotatedInstance inst = parse_instance(kC4);
  EXPECT_EQ(inst.graph.num_vertices(), 4u);
  EXPECT_EQ(inst.graph.num_edges(), 4u);
  EXPECT_EQ(inst.k, 1);
}

TEST(Parse, Annotations) {
  AnnotatedInstance inst = parse_instance("c hello\np cvd 3 2 1\ne 1 2\ne 2 3\nm 1 2\ni 3 2\n");
  EXPECT_EQ(inst.edges_with(EdgeLabel::Mandatory), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(inst.label(2, 3), EdgeLabel::Irrelevant);
}

TEST(Parse, ErrorsNameTheLine) {
  EXPECT_EQ(parse_error_line("p cvd 5 1 1\ne 1 2\nm 1 5\n"), 3);
  EXPECT_EQ(parse_error_line("p cvd 3 1 1\ne 1 4\n"), 2);
  EXPECT_EQ(parse_error_line("p cvd 3 2 1\ne 1 2\ne 2 1\n"), 3);
  EXPECT_EQ(parse_error_line("p cvd x 1 1\n"), 1);
  EXPECT_EQ(parse_error_line("c only\ne 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("p cvd 3 2 1\ne 1 2\n"), 1);
  EXPECT_EQ(parse_error_line("p cvd 3 1 1\ne 1 2\nm 1 2\ni 1 2\n"), 4);
  EXPECT_EQ(parse_error_line("p cvd 3 1 1\nq 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("p cvd 3 1 1\ne 2 2\n"), 2);
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("p cvd 2 0 0\np cvd 2 0 0\n"), 2);
}

TEST(Write, CanonicalText) {
  AnnotatedInstance inst = parse_instance("p cvd 3 2 2\ne 3 2\ne 2 1\ni 2 3\n");
  EXPECT_EQ(write_instance(inst, {"x"}), "c x\np cvd 3 2 2\ne 1 2\ne 2 3\ni 2 3\n");
}

TEST(Write, CompactsIds) {
  AnnotatedInstance inst = parse_instance(kC4);
  delete_vertex(inst, 2);
  AnnotatedInstance back = parse_instance(write_instance(inst));
  EXPECT_EQ(back.graph.vertices(), (VertexList{1, 2, 3}));
  EXPECT_EQ(back.graph.num_edges(), 2u);
  std::map<VertexId, VertexId> ids;
  (void)compact(inst, &ids);
  EXPECT_EQ(ids.at(4), 3u);
}

TEST(RoundTrip, GeneratedInstances) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    AnnotatedInstance inst(gnp(rng.between(0, 15), rng.uniform(), rng), rng.between(0, 5));
    for (const Edge& e : inst.graph.edges()) {
      double x = rng.uniform();
      if (x < 0.1) inst.set_label(e.first, e.second, EdgeLabel::Mandatory);
      else if (x < 0.2) inst.set_label(e.first, e.second, EdgeLabel::Irrelevant);
    }
    std::string text = write_instance(inst);
    AnnotatedInstance back = parse_instance(text);
    ASSERT_EQ(back, inst);
    ASSERT_EQ(write_instance(back), text);
  }
}

TEST(Generate, GnpIsDeterministic) {
  GeneratorSpec s;
  s.name = "gnp";
  s.n = 10;
  s.p = 0.3;
  s.seed = 7;
  Generated a = generate(s), b = generate(s);
  EXPECT_EQ(write_instance(a.instance, a.comments), write_instance(b.instance, b.comments));
  s.seed = 8;
  EXPECT_NE(write_instance(generate(s).instance), write_instance(a.instance));
}

TEST(Generate, PlantedSolutionBound) {
  GeneratorSpec s;
  s.name = "planted-chordal-plus-noise";
  s.n = 20;
  s.holes = 3;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    s.seed = seed;
    Generated g = generate(s);
    EXPECT_NE(std::find(g.comments.begin(), g.comments.end(), "planted 3"), g.comments.end());
    EXPECT_TRUE(exact_cvd(g.instance.graph, 3).has_value());
  }
}

TEST(Generate, LongCliquePathIsOnePath) {
  GeneratorSpec s;
  s.name = "long-clique-path";
  s.bags = 40;
  s.bagsize = 5;
  Graph g = generate(s).instance.graph;
  ASSERT_TRUE(is_chordal(g));
  CliqueForest f = clique_forest(g);
  EXPECT_EQ(f.bags.size(), 40u);
  EXPECT_EQ(f.tree_edges.size(), 39u);
  for (const auto& nb : f.adjacency()) EXPECT_LE(nb.size(), 2u);
}

TEST(Generate, FlowerAndUnknown) {
  GeneratorSpec s;
  s.name = "flower";
  s.petals = 3;
  s.k = 2;
  Graph g = generate(s).instance.graph;
  EXPECT_EQ(g.num_vertices(), 10u);
  EXPECT_FALSE(oracle::cvd_answer(AnnotatedInstance(g, 2), VertexId{1}));
  s.name = "nope";
  EXPECT_THROW(generate(s), DomainError);
}

TEST(Report, FieldsAndIdentities) {
  AnnotatedInstance inst = parse_instance(kC4);
  KernelOutcome out = kernelize(inst);
  nlohmann::json j = run_report(inst, out, 1.5);
  for (const char* key : {"n", "m", "k", "rules", "thresholds", "verdict", "millis"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto& t = j["thresholds"];
  for (const char* key : {"delta", "delta_prime", "kappa", "small_delta", "f"}) EXPECT_TRUE(t.contains(key)) << key;
  const long long k = t["k"];
  EXPECT_EQ(t["delta"].get<long long>(), (k + 3) * t["f"].get<long long>());
  EXPECT_EQ(t["delta_prime"].get<long long>(), t["delta"].get<long long>() + k);
  EXPECT_EQ(t["small_delta"].get<long long>(), 2 * (k + 1) + 6 * t["kappa"].get<long long>());
}

TEST(Cli, SolveExactC4) {
  TempDir dir;
  CliRun r = run({"solve", dir.file("c4.txt", kC4), "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{1}\n");
}

TEST(Cli, SolveNoInstance) {
  TempDir dir;
  CliRun r = run({"solve", dir.file("c4.txt", "p cvd 4 4 0\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")});
  EXPECT_EQ(r.code, kExitNo);
  CliRun g = run({"solve", dir.file("c4.txt"), "--greedy"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "{1}\n");
}

TEST(Cli, KernelizeChordalIsCanonicalYes) {
  TempDir dir;
  std::string in = dir.file("in.txt", "p cvd 3 2 2\ne 1 2\ne 2 3\n"), out = dir.file("out.txt");
  CliRun r = run({"kernelize", in, "-o", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_instance(slurp(out)), canonical_yes(2));
}

TEST(Cli, KernelizeNoExitsOne) {
  TempDir dir;
  std::string in = dir.file("in.txt", "p cvd 4 4 0\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"), out = dir.file("out.txt");
  EXPECT_EQ(run({"kernelize", in, "-o", out}).code, kExitNo);
  EXPECT_EQ(parse_instance(slurp(out)), canonical_no());
}

TEST(Cli, KernelizeTraceAndVerify) {
  TempDir dir;
  std::string in = dir.file("in.txt");
  ASSERT_EQ(run({"generate", "gnp", "-n", "11", "-p", "0.35", "-k", "2", "--seed", "3", "-o", in}).code, 0);
  std::string out = dir.file("out.txt"), trace = dir.file("trace.json");
  ASSERT_EQ(run({"kernelize", in, "-o", out, "--trace", trace}).code % 2, run({"kernelize", in, "-o", out}).code % 2);
  auto j = nlohmann::json::parse(slurp(trace));
  EXPECT_TRUE(j.contains("ops"));
  CliRun v = run({"verify", in, out});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("equivalent", 0), 0u);
}

TEST(Cli, VerifyLargeIsInvariantOnly) {
  TempDir dir;
  std::string in = dir.file("in.txt");
  ASSERT_EQ(run({"generate", "flower", "--petals", "8", "-k", "1", "-o", in}).code, 0);
  std::string out = dir.file("out.txt");
  run({"kernelize", in, "-o", out});
  CliRun v = run({"verify", in, out});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("oracle skipped"), std::string::npos);
}

TEST(Cli, StatsPrintsJson) {
  TempDir dir;
  CliRun r = run({"stats", dir.file("c4.txt", kC4)});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["verdict"], "reduced");
}

TEST(Cli, UsageAndParseErrors) {
  TempDir dir;
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--exact", "--greedy", dir.file("c4.txt", kC4)}).code, kExitUsage);
  CliRun bad = run({"solve", dir.file("bad.txt", "p cvd 2 1 0\ne 1 3\n")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"solve", dir.file("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GenerateIsByteIdentical) {
  CliRun a = run({"generate", "planted-chordal-plus-noise", "-n", "14", "--holes", "2", "--seed", "5"});
  CliRun b = run({"generate", "planted-chordal-plus-noise", "-n", "14", "--holes", "2", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("c planted 2"), std::string::npos);
}
