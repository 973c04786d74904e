#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace sflow;
using fixtures::make;

TEST(Suppress, SubdividedThetaWithLoop) {
  auto g = make(5, {{0, 2, '-'}, {2, 1, '-'}, {0, 3, '+'}, {3, 4, '-'}, {4, 1, '-'}, {0, 1, '+'}, {0, 0, '+'}});
  auto [r, rec] = suppress_preprocess(g);
  EXPECT_EQ(r.vertex_count(), 2);
  EXPECT_EQ(r.edge_count(), 3);
  EXPECT_EQ(rec.steps.size(), 4u);
  EXPECT_TRUE(rec.bare_circuits.empty());
  EXPECT_EQ(rec.reduced_to_original, (std::vector<VertexId>{0, 1}));
  auto f = nz_k_flow_search(r, 4);
  ASSERT_TRUE(f.found());
  EXPECT_TRUE(verify_int_flow(g, undo_suppress(rec, *f.value), 4, true));
}

TEST(Suppress, BareCircuitIsKept) {
  auto g = fixtures::circuit(5, 2);
  auto [r, rec] = suppress_preprocess(g);
  EXPECT_EQ(r, g);
  ASSERT_EQ(rec.bare_circuits.size(), 1u);
  EXPECT_EQ(rec.bare_circuits[0].size(), 5u);
  EXPECT_TRUE(rec.empty());
}

TEST(Suppress, MergeIntoNegativeLoop) {
  auto g = make(2, {{0, 1, '+'}, {1, 0, '-'}, {0, 0, '-'}});
  auto [r, rec] = suppress_preprocess(g);
  EXPECT_EQ(r, fixtures::bouquet());
  auto f = eulerian_2_flow(r);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(verify_int_flow(g, undo_suppress(rec, *f), 2, true));
}

TEST(Suppress, MergeIntoPositiveLoopIsDropped) {
  auto g = make(3, {{0, 1, '-'}, {1, 0, '-'}, {0, 2, '+'}, {0, 2, '+'}, {0, 2, '-'}, {2, 2, '-'}});
  auto [r, rec] = suppress_preprocess(g);
  EXPECT_EQ(r.vertex_count(), 2);
  EXPECT_EQ(r.edge_count(), 4);
  auto f = nz_k_flow_search(r, 4);
  ASSERT_TRUE(f.found());
  EXPECT_TRUE(verify_int_flow(g, undo_suppress(rec, *f.value), 4, true));
}

TEST(Suppress, SmallCorpusRoundTrip) {
  int checked = 0;
  for_each_tiny(5, [&](const SignedGraph& g) {
    if (!is_flow_admissible(g)) return;
    auto [r, rec] = suppress_preprocess(g);
    ASSERT_TRUE(is_flow_admissible(r)) << to_sgf(g);
    for (VertexId v = 0; v < r.vertex_count(); ++v)
      if (rec.bare_circuits.empty()) ASSERT_NE(r.degree(v), 2) << to_sgf(g);
    auto f = nz_k_flow_search(r, 6);
    ASSERT_TRUE(f.found()) << to_sgf(g);
    ASSERT_TRUE(verify_int_flow(g, undo_suppress(rec, *f.value), 6, true)) << to_sgf(g);
    ++checked;
  });
  EXPECT_GT(checked, 0);
}

TEST(Suppress, MismatchedFlowThrows) {
  auto [r, rec] = suppress_preprocess(fixtures::k4());
  EXPECT_THROW(undo_suppress(rec, IntFlow(2)), InputError);
}
