#include <gtest/gtest.h>

#include <random>

#include "kn3/builder.hpp"
#include "kn3/census.hpp"
#include "kn3/error.hpp"
#include "kn3/io.hpp"
#include "kn3/scheme.hpp"
#include "oracle.hpp"

using namespace kn3;

namespace {

void expect_minimum(const EmbeddingSet& s, bool orientable) {
  ASSERT_TRUE(is_embedding_set(s, orientable).ok) << is_embedding_set(s, orientable).message;
  const EmbeddingScheme sch = set_to_scheme(s);
  const oracle::Faces f = oracle::flag_faces(sch);
  EXPECT_EQ(f.orientable, orientable);
  EXPECT_EQ(f.euler_genus, oracle::quad_euler_genus(s.n, s.m));
  for (int len : f.lengths) ASSERT_EQ(len, 4);
}

}  // namespace

TEST(Builder, BaseSets) {
  EXPECT_EQ(base_set(BaseKind::Orientable4).n, 4);
  const EmbeddingSet non = base_set(BaseKind::Nonorientable6);
  EXPECT_EQ(non.n, 6);
  EXPECT_FALSE(non.strong);
  const EmbeddingSet multi = base_set(BaseKind::MultiNonorientable4);
  EXPECT_EQ(multi.m, 2);
  expect_minimum(base_set(BaseKind::Orientable4), true);
  expect_minimum(non, false);
  expect_minimum(multi, false);
  expect_minimum(strong_example_6(), true);
}

TEST(Builder, Sigma) {
  EXPECT_EQ(build_sigma(1, 6), (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_EQ(build_sigma(3, 6), (std::vector<Vertex>{2, 1, 5, 6}));
  EXPECT_EQ(build_sigma(5, 8), (std::vector<Vertex>{2, 1, 4, 3, 7, 8}));
  EXPECT_THROW(build_sigma(2, 6), Error);
  EXPECT_THROW(build_sigma(7, 6), Error);
}

TEST(Builder, InsertionTrails) {
  EXPECT_EQ(build_insertion(1, 4).seq, (std::vector<Vertex>{5, 3, 6, 4, 5, 6, 2}));
  EXPECT_EQ(build_insertion(2, 4).seq, (std::vector<Vertex>{6, 3, 5, 4, 6, 5, 1}));
  for (int n = 4; n <= 12; n += 2)
    for (Vertex i = 1; i <= n; ++i) EXPECT_EQ(build_insertion(i, n).seq.size(), static_cast<std::size_t>(2 * n - 1));
}

TEST(Builder, ApexCircuitsAreEulerian) {
  for (int n = 4; n <= 20; n += 2) {
    const auto [tx, ty] = build_apex_circuits(n);
    EXPECT_EQ(tx.excluded, n + 1);
    EXPECT_EQ(ty.excluded, n + 2);
    EXPECT_TRUE(validate_eulerian(tx).ok) << n << ": " << validate_eulerian(tx).message;
    EXPECT_TRUE(validate_eulerian(ty).ok) << n << ": " << validate_eulerian(ty).message;
    EXPECT_TRUE(is_strongly_compatible(tx, ty));
  }
  const auto [tx4, ty4] = build_apex_circuits(4);
  EXPECT_EQ(tx4.size(), 10u);
  EXPECT_EQ(ty4.size(), 10u);
}

TEST(Builder, StepRecordsBrokenTransitions) {
  const EmbeddingSet s6 = build_even(6, true);
  const StepResult r = extend_by_two(s6);
  expect_minimum(r.set, true);
  for (Vertex i = 1; i < 6; i += 2) {
    const Transition t = r.broken[i - 1];
    EXPECT_EQ(t.mid, i + 1);
    EXPECT_EQ(r.broken[i], (Transition{t.b, i, t.a}));
    const auto through = transitions_through(s6.T(i), i + 1);
    EXPECT_NE(std::find(through.begin(), through.end(), t), through.end());
  }
}

TEST(Builder, OrientableBuilds) {
  for (int n = 4; n <= 16; n += 2) {
    const EmbeddingSet s = build_even(n, true);
    EXPECT_TRUE(s.strong);
    expect_minimum(s, true);
    EXPECT_EQ(trace_faces(set_to_scheme(s)).euler_genus / 2, (n - 2) * (n + 3) * (n - 4) / 24);
  }
}

TEST(Builder, NonorientableBuildsKeepPairThreeFive) {
  for (int n = 6; n <= 16; n += 2) {
    const EmbeddingSet s = build_even(n, false);
    EXPECT_FALSE(s.strong);
    expect_minimum(s, false);
    EXPECT_TRUE(is_compatible(s.T(3), s.T(5)));
    EXPECT_FALSE(is_strongly_compatible(s.T(3), s.T(5)));
    EXPECT_FALSE(is_strongly_compatible(s.T(3).reversed(), s.T(5)));
    EXPECT_EQ(trace_faces(set_to_scheme(s)).euler_genus, (n - 2) * (n + 3) * (n - 4) / 12);
  }
}

TEST(Builder, SeededBuildsAreDeterministicAndValid) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    BuildOptions o;
    o.seed = seed;
    const EmbeddingSet a = build_even(10, true, o), b = build_even(10, true, o);
    EXPECT_EQ(io::write_set(a), io::write_set(b));
    expect_minimum(a, true);
    expect_minimum(build_even(10, false, o), false);
  }
}

TEST(Builder, RelabelledStepsStayValid) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    const bool orientable = k % 2 == 0;
    BuildOptions o;
    o.choice = random_choice(10, orientable, rng);
    const EmbeddingSet s = build_even(10, orientable, o);
    ASSERT_TRUE(is_embedding_set(s, false).ok);
    const EmbeddingScheme sch = set_to_scheme(s);
    EXPECT_TRUE(trace_faces(sch).quadrilateral());
    if (orientable) EXPECT_TRUE(is_embedding_set(s, true).ok);
  }
}

TEST(Builder, Errors) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code_of([] { build_even(7, true); }), ErrorCode::OddOrder);
  EXPECT_EQ(code_of([] { build_even(4, false); }), ErrorCode::UnsupportedCase);
  EXPECT_EQ(code_of([] { build_even(2, true); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([] { build_multi(4, 1, false); }), ErrorCode::UnsupportedCase);
  EXPECT_EQ(code_of([] { build_multi(9, 2, true); }), ErrorCode::OddOrder);
  EXPECT_EQ(code_of([] { build_multi(6, 0, true); }), ErrorCode::InvalidSpec);
}

TEST(Builder, Multigraph) {
  for (int n : {4, 6, 8})
    for (int m = 1; m <= 3; ++m) {
      const EmbeddingSet s = build_multi(n, m, true);
      EXPECT_EQ(s.m, m);
      expect_minimum(s, true);
      if (n > 4 || m > 1) expect_minimum(build_multi(n, m, false), false);
    }
  const FaceReport kb = trace_faces(set_to_scheme(build_multi(4, 2, false)));
  EXPECT_EQ(kb.euler_genus, 2);
  EXPECT_FALSE(kb.orientable);
}

TEST(Builder, SpliceNeedsSharedTransition) {
  const EmbeddingSet a = build_even(6, true);
  EmbeddingSet fresh = a;
  // A strong target only accepts same-direction transitions.
  fresh.T(1) = fresh.T(1).reversed();
  try {
    splice_layer(a, fresh);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoCommonTransition);
  }
}

TEST(Builder, Relabel) {
  const EmbeddingSet s = strong_example_6();
  const std::vector<Vertex> perm{2, 3, 1, 6, 4, 5};
  const EmbeddingSet r = relabel(s, perm);
  EXPECT_TRUE(is_embedding_set(r, true).ok);
  EXPECT_EQ(r.T(2).excluded, 2);
  EXPECT_EQ(r.T(2).seq.size(), s.T(1).seq.size());
  EXPECT_EQ(r.T(2).seq[0], perm[s.T(1).seq[0] - 1]);
  EXPECT_THROW(relabel(s, std::vector<Vertex>{1, 1, 2, 3, 4, 5}), Error);
}
