#include <gtest/gtest.h>

#include "cvd/chordal.hpp"
#include "cvd/generators.hpp"
#include "oracles.hpp"

using namespace cvd;

namespace {

Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  return make(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                   {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

Graph path(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST(IsChordal, Examples) {
  EXPECT_FALSE(is_chordal(make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  EXPECT_TRUE(is_chordal(complete(4)));
  EXPECT_FALSE(is_chordal(petersen()));
  EXPECT_FALSE(oracle::is_chordal(petersen()));
  EXPECT_TRUE(is_chordal(Graph{}));
}

TEST(FindHole, C5IsItsOwnHole) {
  auto h = find_hole(make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
  ASSERT_TRUE(h);
  EXPECT_EQ(h->cycle, (VertexList{1, 2, 3, 4, 5}));
}

TEST(FindHole, NoneOnChordalInputs) {
  EXPECT_FALSE(find_hole(complete(5)));
  Graph g = make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {4, 5}});
  EXPECT_FALSE(find_hole(g));
  EXPECT_TRUE(oracle::is_chordal(g));
}

TEST(FindHole, PetersenHoleIsValid) {
  auto h = find_hole(petersen());
  ASSERT_TRUE(h);
  EXPECT_TRUE(oracle::valid_hole(petersen(), h->cycle));
  EXPECT_EQ(check_hole(petersen(), *h), "");
}

TEST(CheckHole, RejectsChords) {
  Graph g = make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
  EXPECT_NE(check_hole(g, Hole{{1, 2, 3, 4}}), "");
  EXPECT_NE(check_hole(g, Hole{{1, 2, 3}}), "");
}

TEST(CliqueForest, Path) {
  CliqueForest f = clique_forest(path(3));
  EXPECT_EQ(f.bags, (std::vector<VertexList>{{1, 2}, {2, 3}}));
  EXPECT_EQ(f.tree_edges.size(), 1u);
}

TEST(CliqueForest, Triangle) {
  CliqueForest f = clique_forest(complete(3));
  EXPECT_EQ(f.bags, (std::vector<VertexList>{{1, 2, 3}}));
  EXPECT_TRUE(f.tree_edges.empty());
}

TEST(CliqueForest, DisconnectedEdges) {
  Graph g = make(4, {{1, 2}, {3, 4}});
  CliqueForest f = clique_forest(g);
  EXPECT_EQ(f.bags.size(), 2u);
  EXPECT_TRUE(f.tree_edges.empty());
  EXPECT_EQ(forest_path(f, 0, 1), std::vector<int>{});
  EXPECT_EQ(forest_distances(f, 0), (std::vector<int>{0, -1}));
}

TEST(CliqueForest, NonChordalThrowsWithWitness) {
  Graph c4 = make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  try {
    (void)clique_forest(c4);
    FAIL() << "expected NotChordalError";
  } catch (const NotChordalError& e) {
    EXPECT_TRUE(oracle::valid_hole(c4, e.witness().cycle));
  }
}

TEST(CliqueForest, RandomChordalGraphsValidate) {
  Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    Graph g = i % 2 ? random_chordal(1 + static_cast<int>(rng.below(30)), rng)
                    : oracle::chordal_by_attachment(1 + static_cast<int>(rng.below(30)), rng);
    CliqueForest f = clique_forest(g);
    EXPECT_EQ(check_clique_forest(g, f), "");
    EXPECT_EQ(oracle::check_forest(g, f.bags, f.tree_edges), "");
  }
}

TEST(CheckCliqueForest, CatchesBrokenForests) {
  Graph g = path(4);
  CliqueForest f = clique_forest(g);
  CliqueForest dropped = f;
  dropped.bags.pop_back();
  dropped.tree_edges.pop_back();
  EXPECT_NE(check_clique_forest(g, dropped), "");
  CliqueForest cut = f;
  cut.tree_edges.clear();
  EXPECT_NE(check_clique_forest(g, cut), "");  // running intersection
}

TEST(Mis, Examples) {
  EXPECT_EQ(mis_chordal(complete(5)), (VertexList{1}));
  EXPECT_EQ(mis_chordal(path(5)), (VertexList{1, 3, 5}));
  EXPECT_EQ(mis_chordal(Graph{}), VertexList{});
}

TEST(Mis, RandomChordalMatchesBruteForce) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_chordal(1 + static_cast<int>(rng.below(15)), rng);
    VertexList s = mis_chordal(g);
    EXPECT_TRUE(oracle::independent(g, s));
    EXPECT_EQ(static_cast<int>(s.size()), oracle::mis_size(g));
  }
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique_size(complete(4)), 4u);
  EXPECT_EQ(max_clique_size(make(3, {})), 1u);
  EXPECT_EQ(max_clique_size(path(5)), 2u);
}

TEST(CliqueCover, SizeEqualsIndependenceNumber) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_chordal(1 + static_cast<int>(rng.below(14)), rng);
    auto cover = clique_cover_chordal(g);
    EXPECT_EQ(cover.size(), mis_chordal(g).size());
    VertexList all;
    for (const auto& c : cover) {
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) EXPECT_TRUE(g.has_edge(c[a], c[b]));
      all = set_union(all, c);
    }
    EXPECT_EQ(all, g.vertices());
  }
}

TEST(Peo, EveryLaterNeighborhoodIsAClique) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::chordal_by_attachment(1 + static_cast<int>(rng.below(20)), rng);
    VertexList order = perfect_elimination_order(g);
    ASSERT_EQ(order.size(), g.num_vertices());
    std::map<VertexId, std::size_t> pos;
    for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = p;
    for (VertexId v : order) {
      VertexList later;
      for (VertexId u : g.neighbors(v))
        if (pos[u] > pos[v]) later.push_back(u);
      for (std::size_t a = 0; a < later.size(); ++a)
        for (std::size_t b = a + 1; b < later.size(); ++b) EXPECT_TRUE(g.has_edge(later[a], later[b]));
    }
  }
}

TEST(Chordal, RandomGraphsAgreeWithBruteForce) {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    Graph g = gnp(1 + static_cast<int>(rng.below(8)), rng.uniform(), rng);
    bool expected = oracle::is_chordal(g);
    ASSERT_EQ(is_chordal(g), expected);
    auto h = find_hole(g);
    ASSERT_EQ(h.has_value(), !expected);
    if (h) ASSERT_TRUE(oracle::valid_hole(g, h->cycle));
  }
}
