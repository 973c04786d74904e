#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace sflow;
using fixtures::make;

TEST(FlowNumber, PinnedValues) {
  EXPECT_EQ(*flow_number(fixtures::circuit(3, 0), 11).value, 2);
  EXPECT_EQ(*flow_number(fixtures::circuit(4, 2), 11).value, 2);
  EXPECT_EQ(*flow_number(fixtures::bouquet(), 11).value, 2);
  EXPECT_EQ(*flow_number(fixtures::k4(), 11).value, 4);
  EXPECT_EQ(*flow_number(fixtures::long_barbell(), 11).value, 3);
  EXPECT_EQ(*flow_number(fixtures::petersen(), 11).value, 5);
}

TEST(FlowNumber, InadmissibleIsAbsent) {
  auto r = flow_number(fixtures::circuit(3, 1), 11);
  EXPECT_EQ(r.outcome, SearchOutcome::absent);
  EXPECT_EQ(nz_k_flow_search(make(2, {{0, 1, '+'}}), 11).outcome, SearchOutcome::absent);
}

TEST(FlowSearch, BudgetIsAThirdOutcome) {
  SearchBudget tiny;
  tiny.node_limit = 5;
  auto r = nz_k_flow_search(fixtures::petersen(), 4, std::nullopt, tiny);
  EXPECT_EQ(r.outcome, SearchOutcome::budget);
  EXPECT_FALSE(r.value.has_value());
}

TEST(FlowSearch, AllowedValueSets) {
  auto g = fixtures::circuit(3, 0);
  std::vector<std::vector<FlowValue>> allowed{{2}, {2, -2}, {1, 2}};
  auto r = nz_k_flow_search(g, 3, allowed);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.value->values(), (std::vector<FlowValue>{2, 2, 2}));
  allowed[2] = {1};
  EXPECT_EQ(nz_k_flow_search(g, 3, allowed).outcome, SearchOutcome::absent);
  EXPECT_THROW(nz_k_flow_search(g, 3, std::vector<std::vector<FlowValue>>{{3}, {1}, {1}}), InputError);
}

TEST(FlowSearch, MonotoneInK) {
  for_each_tiny(3, [](const SignedGraph& g) {
    bool before = false;
    for (int k = 2; k <= 6; ++k) {
      const bool now = nz_k_flow_search(g, k).found();
      ASSERT_TRUE(now || !before) << to_sgf(g);
      before = now;
    }
  });
}

TEST(GroupSearch, FourFlowIffGroupFlow) {
  EXPECT_TRUE(z2z2_nz_flow_search(fixtures::k4()).found());
  EXPECT_EQ(z2z2_nz_flow_search(fixtures::petersen()).outcome, SearchOutcome::absent);
  for_each_tiny(4, [](const SignedGraph& g) {
    auto gz = z2z2_nz_flow_search(g);
    ASSERT_NE(gz.outcome, SearchOutcome::budget);
    if (gz.found()) ASSERT_TRUE(verify_group_flow(g, *gz.value, true));
    ASSERT_EQ(gz.found(), nz_k_flow_search(g.all_positive(), 4).found()) << to_sgf(g);
  });
}

TEST(EdgeColoring, Examples) {
  auto k4 = three_edge_coloring(fixtures::k4());
  ASSERT_TRUE(k4.found());
  EXPECT_TRUE(is_proper_coloring(fixtures::k4(), *k4.value));
  EXPECT_EQ((*k4.value)[0], 0);
  EXPECT_EQ(three_edge_coloring(fixtures::petersen()).outcome, SearchOutcome::absent);
  EXPECT_EQ(three_edge_coloring(make(2, {{0, 0, '+'}, {0, 1, '+'}, {1, 1, '+'}})).outcome, SearchOutcome::absent);
  EXPECT_TRUE(three_edge_coloring(fixtures::theta("+++")).found());
  EXPECT_THROW(three_edge_coloring(fixtures::circuit(3, 0)), InputError);
}
