#include <gtest/gtest.h>

#include <functional>

#include "cvd/chordal.hpp"
#include "cvd/clique_shrink.hpp"
#include "cvd/generators.hpp"
#include "cvd/solvers.hpp"
#include "oracles.hpp"

using namespace cvd;

namespace {

/// Dangerous sets by enumerating simple paths in G \ D.
std::pair<VertexList, VertexList> brute_dangerous(const AnnotatedInstance& inst, const VertexList& d,
                                                  const VertexList& clique, VertexId t) {
  const Graph& g = inst.graph;
  Graph gd = g.without(d);
  VertexList td, sd;
  for (VertexId v : relevant_neighbors(inst, t)) {
    if (contains(d, v) || contains(clique, v)) continue;
    bool is_t = false, is_star = false;
    std::set<VertexId> on_path{v};
    std::function<void(VertexId)> walk = [&](VertexId x) {
      for (VertexId y : gd.neighbors(x)) {
        if (on_path.contains(y)) continue;
        if (contains(clique, y)) {
          if (!g.has_edge(t, y)) is_t = true;
          else if (inst.label(t, y) == EdgeLabel::Relevant && !g.has_edge(v, y)) is_star = true;
        }
        if (g.has_edge(t, y)) continue;  // interior vertices must avoid label t
        on_path.insert(y);
        walk(y);
        on_path.erase(y);
      }
    };
    walk(v);
    if (is_t) td.push_back(v);
    if (is_star) sd.push_back(v);
  }
  return {td, sd};
}

Graph interval_graph(Rng& rng, int n, int span, int width) {
  Graph g;
  std::vector<std::pair<int, int>> iv;
  for (int i = 0; i < n; ++i) {
    int a = rng.between(0, span);
    iv.push_back({a, a + rng.between(0, width)});
    g.add_vertex();
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(iv[i].second < iv[j].first || iv[j].second < iv[i].first)) g.add_edge(i + 1, j + 1);
  return g;
}

/// Chordal base plus modulator vertices attached at random.
std::pair<AnnotatedInstance, VertexList> random_instance(Rng& rng, int n, int mods, int k) {
  Graph g = interval_graph(rng, n, n, 6);
  VertexList d;
  for (int i = 0; i < mods; ++i) {
    VertexId t = g.add_vertex();
    d.push_back(t);
    for (int v = 1; v <= n; ++v)
      if (rng.chance(0.3)) g.add_edge(t, v);
  }
  return {AnnotatedInstance(g, k), d};
}

}  // namespace

TEST(MarkBudget, Formula) {
  MarkBudget b = mark_budget(3, 2, 10);
  EXPECT_EQ(b.t_witness, 3 * 6 * 4 * 3);
  EXPECT_EQ(b.t_star_witness, 3 * 10 * 64);
  EXPECT_EQ(b.fragment, 27 * 4);
  EXPECT_EQ(b.mandatory, 4);
  EXPECT_EQ(b.total(), b.t_witness + b.t_star_witness + b.fragment + b.mandatory);
}

TEST(Dangerous, NoRelevantNeighbours) {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex();
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  AnnotatedInstance inst(g, 1);
  DangerReport r = dangerous_sets(inst, {4}, {1, 2, 3}, 4);
  EXPECT_TRUE(r.t_dangerous.empty());
  EXPECT_TRUE(r.t_star_dangerous.empty());
}

TEST(Dangerous, SimpleWitness) {
  // K = {1,2,3}; t = 4 - v = 5 - u = 1, with u not adjacent to t.
  Graph g;
  for (int i = 0; i < 5; ++i) g.add_vertex();
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_edge(4, 5);
  g.add_edge(5, 1);
  AnnotatedInstance inst(g, 1);
  DangerReport r = dangerous_sets(inst, {4}, {1, 2, 3}, 4);
  EXPECT_EQ(r.t_dangerous, (VertexList{5}));
  EXPECT_EQ(r.t_witnesses.at(5), (VertexList{1, 2, 3}));
  EXPECT_EQ(r.witness_paths.at(5), (VertexList{5, 1}));
}

TEST(Dangerous, RejectsNonMaximalClique) {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex();
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  AnnotatedInstance inst(g, 1);
  EXPECT_THROW(dangerous_sets(inst, {4}, {1, 2}, 4), DomainError);
  EXPECT_THROW(dangerous_sets(inst, {4}, {1, 2, 3}, 1), DomainError);
}

TEST(Dangerous, MatchesPathEnumeration) {
  Rng rng(41);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    auto [inst, d] = random_instance(rng, 8, 2, 1);
    for (const Edge& e : inst.graph.edges())
      if (rng.chance(0.1)) inst.set_label(e.first, e.second, EdgeLabel::Irrelevant);
    CliqueForest f = clique_forest(inst.graph.without(d));
    for (const VertexList& bag : f.bags)
      for (VertexId t : d) {
        DangerReport r = dangerous_sets(inst, d, bag, t);
        auto [td, sd] = brute_dangerous(inst, d, bag, t);
        ASSERT_EQ(r.t_dangerous, td);
        ASSERT_EQ(r.t_star_dangerous, sd);
        for (const auto& [v, p] : r.witness_paths) {
          ASSERT_EQ(p.front(), v);
          ASSERT_TRUE(contains(bag, p.back()));
          for (std::size_t j = 0; j + 1 < p.size(); ++j) ASSERT_TRUE(inst.graph.has_edge(p[j], p[j + 1]));
          for (std::size_t j = 1; j + 1 < p.size(); ++j) ASSERT_FALSE(inst.graph.has_edge(t, p[j]));
        }
        ++compared;
      }
  }
  EXPECT_GT(compared, 500);
}

TEST(MarkClique, NoDangerMeansFragmentMarksOnly) {
  Graph g;
  for (int i = 0; i < 8; ++i) g.add_vertex();
  for (VertexId u = 1; u <= 6; ++u)
    for (VertexId v = u + 1; v <= 6; ++v) g.add_edge(u, v);
  g.add_edge(7, 1);
  g.add_edge(7, 2);
  g.add_edge(8, 1);
  g.add_edge(8, 2);
  AnnotatedInstance inst(g, 1);
  VertexList k{1, 2, 3, 4, 5, 6};
  MarkOutcome o = mark_clique(inst, {8}, 10, k);
  ASSERT_EQ(o.kind, MarkOutcome::Kind::Marks);
  EXPECT_EQ(o.counts.t_witness, 0);
  EXPECT_EQ(o.counts.t_star_witness, 0);
  EXPECT_EQ(o.counts.mandatory, 0);
}

TEST(MarkClique, CertificatesAreSound) {
  // Forced vertices and mandatory pairs must hold for every small solution.
  Rng rng(43);
  int certified = 0;
  for (int i = 0; i < 1500; ++i) {
    auto [inst, d] = random_instance(rng, rng.between(8, 13), rng.between(1, 3), rng.between(1, 2));
    if (inst.graph.num_vertices() > 16) continue;
    CliqueForest f = clique_forest(inst.graph.without(d));
    for (const VertexList& bag : f.bags) {
      if (bag.size() < 3) continue;
      MarkOutcome o = mark_clique(inst, d, 20, bag);
      MarkBudget b = mark_budget(d.size(), inst.k, 20);
      EXPECT_LE(o.counts.t_witness, b.t_witness);
      EXPECT_LE(o.counts.t_star_witness, b.t_star_witness);
      EXPECT_LE(o.counts.fragment, b.fragment);
      EXPECT_LE(o.counts.mandatory, b.mandatory);
      if (o.kind == MarkOutcome::Kind::Marks) {
        for (VertexId m : o.marks) EXPECT_TRUE(contains(bag, m));
      } else if (o.kind == MarkOutcome::Kind::Forced) {
        ++certified;
        // No solution of size <= k avoids the forced vertex.
        EXPECT_FALSE(oracle::cvd_answer(inst, o.forced));
      } else if (o.kind == MarkOutcome::Kind::Mandatory) {
        ++certified;
        AnnotatedInstance with = inst;
        add_mandatory_edge(with, o.mandatory.first, o.mandatory.second);
        EXPECT_EQ(oracle::cvd_answer(with), oracle::cvd_answer(inst));
      }
    }
  }
  RecordProperty("certificates", certified);
}

TEST(Shrink, AllCliquesSmallIsIdentity) {
  Rng rng(44);
  auto [inst, d] = random_instance(rng, 10, 1, 1);
  AnnotatedInstance before = inst;
  Editor ed(inst);
  ShrinkReport r = shrink_cliques(ed, d, 10);
  EXPECT_FALSE(r.changed);
  EXPECT_EQ(inst, before);
}

TEST(Shrink, HugeCliqueWithoutModulator) {
  Graph g;
  for (int i = 0; i < 12; ++i) g.add_vertex();
  for (VertexId u = 1; u <= 12; ++u)
    for (VertexId v = u + 1; v <= 12; ++v) g.add_edge(u, v);
  AnnotatedInstance inst(g, 1);
  inst.set_label(3, 7, EdgeLabel::Mandatory);
  const bool before = oracle::cvd_answer(inst);
  Editor ed(inst);
  VertexList d;
  ShrinkOptions opt;
  opt.threshold = 2;
  ShrinkReport r = shrink_cliques(ed, d, 0, opt);
  EXPECT_TRUE(r.changed);
  EXPECT_EQ(inst.graph.vertices(), (VertexList{3, 7}));
  EXPECT_EQ(oracle::cvd_answer(inst), before);
}

TEST(Shrink, SingleLabelVertexSurvives) {
  // Vertex 11 is the only clique vertex adjacent to modulator vertex 10 and
  // lies on the hole 10-11-6-4. Deleting it would turn a NO instance into YES.
  Graph g;
  for (int i = 0; i < 12; ++i) g.add_vertex();
  const std::vector<std::pair<VertexId, VertexId>> edges{{1, 2}, {1, 4}, {1, 5}, {1, 7}, {1, 8}, {1, 9}, {1, 10}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 4}, {3, 5}, {3, 6}, {3, 11}, {3, 12}, {4, 5}, {4, 6}, {4, 7}, {4, 10}, {4, 12}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {5, 10}, {6, 11}, {7, 8}, {7, 9}, {7, 10}, {7, 12}, {8, 9}, {8, 10}, {9, 10}, {10, 11}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  AnnotatedInstance inst(g, 1);
  ASSERT_FALSE(oracle::cvd_answer(inst));
  VertexList d{4, 5, 7, 10};
  ASSERT_TRUE(is_chordal(inst.graph.without(d)));
  Editor ed(inst);
  ShrinkOptions opt;
  opt.threshold = 2;
  ShrinkReport r = shrink_cliques(ed, d, 20, opt);
  EXPECT_TRUE(inst.graph.has_vertex(11));
  EXPECT_FALSE(!r.decided_no && oracle::cvd_answer(inst));
}

TEST(Shrink, RandomInstancesKeepTheAnswer) {
  Rng rng(45);
  int shrunk = 0;
  for (int i = 0; i < 300; ++i) {
    auto [inst, d] = random_instance(rng, rng.between(8, 12), rng.between(1, 2), rng.between(1, 2));
    const bool before = oracle::cvd_answer(inst);
    const std::size_t n0 = inst.graph.num_vertices();
    Editor ed(inst);
    ShrinkOptions opt;
    opt.threshold = 2;
    ShrinkReport r = shrink_cliques(ed, d, 20, opt);
    const bool after = r.decided_no ? false : oracle::cvd_answer(inst);
    ASSERT_EQ(after, before) << "instance " << i;
    if (inst.graph.num_vertices() < n0) ++shrunk;
  }
  EXPECT_GT(shrunk, 50);
}
