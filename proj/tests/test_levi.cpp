#include <gtest/gtest.h>

#include "kn3/error.hpp"
#include "kn3/levi.hpp"
#include "oracle.hpp"

using namespace kn3;

TEST(Levi, CountsForSmallOrders) {
  const LeviGraph g4 = build_levi({4, 1});
  EXPECT_EQ(g4.vertex_count(), 8);
  EXPECT_EQ(g4.edge_count(), 12);
  const LeviGraph g6 = build_levi({6, 1});
  EXPECT_EQ(g6.vertex_count(), 26);
  EXPECT_EQ(g6.edge_count(), 60);
  const LeviGraph g = build_levi({5, 3});
  EXPECT_EQ(g.triple_count(), 30);
  EXPECT_EQ(g.edge_count(), 90);
}

TEST(Levi, DegreesAndIds) {
  const LeviGraph g = build_levi({6, 2});
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    if (g.is_x(v))
      EXPECT_EQ(inc.size(), 2u * 10u);
    else
      EXPECT_EQ(inc.size(), 3u);
    for (int e : inc) EXPECT_TRUE(g.edge_x(e) == v || g.edge_y(e) == v);
  }
  const int t = g.triple_index_of(5, 2, 4, 1);
  EXPECT_EQ(g.triple(t).v[0], 2);
  EXPECT_EQ(g.triple(t).v[2], 5);
  EXPECT_EQ(g.triple(t).copy, 1);
  EXPECT_EQ(g.vertex_name(g.y_id(t)), "e{2,4,5}#1");
  EXPECT_EQ(build_levi({6, 1}).vertex_name(6), "e{1,2,3}");
}

TEST(Levi, RejectsBadSpecs) {
  EXPECT_THROW(build_levi({3, 1}), Error);
  EXPECT_THROW(build_levi({6, 0}), Error);
  try {
    HypergraphSpec{2, 1}.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
  }
}

TEST(Levi, LowerBoundMatchesEulerFormula) {
  for (int n = 4; n <= 16; n += 2)
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(euler_genus_lower_bound({n, m}), oracle::quad_euler_genus(n, m)) << n << " " << m;
  EXPECT_EQ(euler_genus_lower_bound({6, 1}), 6);
  EXPECT_EQ(euler_genus_lower_bound({7, 1}), 13);
}

TEST(Levi, GenusFormula) {
  EXPECT_EQ(genus_formula({6, 1}, true), 3);
  EXPECT_EQ(genus_formula({6, 1}, false), 6);
  EXPECT_EQ(genus_formula({8, 1}, true), 11);
  EXPECT_EQ(genus_formula({12, 1}, true), 50);
  EXPECT_EQ(genus_formula({12, 1}, false), 100);
  EXPECT_EQ(genus_formula({4, 2}, false), 2);
  for (int n = 4; n <= 16; n += 2)
    for (int m = 1; m <= 3; ++m) {
      const std::int64_t g = (n - 2) * (std::int64_t{m} * n * (n - 1) - 12) / 24;
      EXPECT_EQ(genus_formula({n, m}, true), g);
      if (n > 4 || m > 1) EXPECT_EQ(genus_formula({n, m}, false), 2 * g);
    }
  try {
    genus_formula({7, 1}, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddOrder);
  }
  try {
    genus_formula({4, 1}, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedCase);
  }
}
