#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "cvd/expansion.hpp"
#include "cvd/generators.hpp"

using namespace cvd;

namespace {

/// Brute-force search for any c-expansion with N(Y) ⊆ X.
bool expansion_exists(const Bipartite& h, int c) {
  for (int xm = 1; xm < (1 << h.a_size); ++xm) {
    // Y is forced to be the B vertices whose neighbourhood lies inside X.
    std::vector<int> y;
    for (int b = 0; b < h.b_size; ++b) {
      bool inside = true, any = false;
      for (int a = 0; a < h.a_size; ++a)
        if (h.has_edge(a, b)) {
          any = true;
          if (!(xm >> a & 1)) inside = false;
        }
      if (inside && any) y.push_back(b);
    }
    // Every X vertex needs c private partners inside Y: check via clone matching.
    Bipartite clones(std::popcount(static_cast<unsigned>(xm)) * c, static_cast<int>(y.size()));
    int row = 0;
    for (int a = 0; a < h.a_size; ++a) {
      if (!(xm >> a & 1)) continue;
      for (int j = 0; j < c; ++j, ++row)
        for (std::size_t yi = 0; yi < y.size(); ++yi)
          if (h.has_edge(a, y[yi])) clones.add_edge(row, static_cast<int>(yi));
    }
    auto m = max_matching(clones);
    if (std::count(m.begin(), m.end(), -1) == 0) return true;
  }
  return false;
}

}  // namespace

TEST(Matching, PerfectOnDisjointStars) {
  Bipartite h(2, 2);
  h.add_edge(0, 0);
  h.add_edge(0, 1);
  h.add_edge(1, 0);
  EXPECT_EQ(max_matching(h), (std::vector<int>{1, 0}));
}

TEST(QExpansion, SingleStar) {
  Bipartite h(1, 2);
  h.add_edge(0, 0);
  h.add_edge(0, 1);
  Expansion e = q_expansion(h, 2);
  EXPECT_EQ(e.X, (std::vector<int>{0}));
  EXPECT_EQ(e.Y, (std::vector<int>{0, 1}));
}

TEST(QExpansion, TwoDisjointStars) {
  Bipartite h(2, 4);
  h.add_edge(0, 0);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(1, 3);
  Expansion e = q_expansion(h, 2);
  EXPECT_EQ(e.X, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.Y, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(check_expansion(h, 2, e), "");
}

TEST(QExpansion, UnbalancedNeighbourhoods) {
  Bipartite h(2, 4);
  for (int b = 0; b < 4; ++b) h.add_edge(0, b);
  h.add_edge(1, 0);
  EXPECT_TRUE(expansion_exists(h, 2));
  Expansion e = q_expansion(h, 2);
  EXPECT_EQ(check_expansion(h, 2, e), "");
  EXPECT_FALSE(e.X.empty());
}

TEST(QExpansion, PreconditionsEnforced) {
  Bipartite h(2, 3);
  h.add_edge(0, 0);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  EXPECT_THROW(q_expansion(h, 2), std::invalid_argument);  // |B| < c|A|
  Bipartite iso(1, 3);
  iso.add_edge(0, 0);
  iso.add_edge(0, 1);
  EXPECT_THROW(q_expansion(iso, 2), std::invalid_argument);  // isolated B vertex
  EXPECT_THROW(q_expansion(h, 0), std::invalid_argument);
}

TEST(CheckExpansion, RejectsLeakingNeighbourhood) {
  Bipartite h(2, 4);
  for (int b = 0; b < 4; ++b) h.add_edge(0, b);
  h.add_edge(1, 0);
  Expansion bad;
  bad.X = {0};
  bad.Y = {0, 1};
  bad.stars[0] = {0, 1};
  EXPECT_NE(check_expansion(h, 2, bad), "");  // b0 also sees a1
}

TEST(QExpansion, RandomInstancesValidate) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    int a = rng.between(1, 4), c = rng.between(1, 3);
    int b = c * a + rng.between(0, 3);
    Bipartite h(a, b);
    for (int y = 0; y < b; ++y) {
      h.add_edge(rng.between(0, a - 1), y);
      for (int x = 0; x < a; ++x)
        if (rng.chance(0.3)) h.add_edge(x, y);
    }
    ASSERT_TRUE(expansion_exists(h, c));
    Expansion e = q_expansion(h, c);
    ASSERT_EQ(check_expansion(h, c, e), "");
  }
}
