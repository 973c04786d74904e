#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

using namespace sflow;
using fixtures::make;

TEST(IntFlow, VerifyReportsFirstProblem) {
  auto g = fixtures::circuit(3, 0);
  IntFlow f(std::vector<FlowValue>{1, 1, 1});
  EXPECT_TRUE(verify_int_flow(g, f, 2, true));
  IntFlow z(std::vector<FlowValue>{1, 0, 1});
  auto c = check_int_flow(g, z, 3, true);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.edge, 1);
  EXPECT_TRUE(check_int_flow(g, IntFlow(3), 2, false).ok);
  auto big = check_int_flow(g, IntFlow(std::vector<FlowValue>{3, 3, 3}), 3, true);
  EXPECT_EQ(big.edge, 0);
  auto bad = check_int_flow(g, IntFlow(std::vector<FlowValue>{1, 2, 1}), 5, true);
  EXPECT_EQ(bad.vertex, 1);
  EXPECT_THROW(check_int_flow(g, IntFlow(2), 3, true), InputError);
}

TEST(IntFlow, NegativeLoopTakesTwiceItsValue) {
  auto g = make(2, {{0, 0, '-'}, {0, 1, '+'}, {1, 1, '-'}});
  IntFlow f(std::vector<FlowValue>{1, -2, -1});
  EXPECT_TRUE(verify_int_flow(g, f, 3, true));
}

TEST(IntFlow, CombineSupportLevels) {
  IntFlow a(std::vector<FlowValue>{1, 0, -1}), b(std::vector<FlowValue>{1, 1, 0});
  auto c = combine(a, b, 1, 3);
  EXPECT_EQ(c.values(), (std::vector<FlowValue>{4, 3, -1}));
  EXPECT_EQ(support(a), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(level_set(c, 4), (std::vector<EdgeId>{0}));
  EXPECT_EQ(level_set(c, 1), (std::vector<EdgeId>{2}));
  EXPECT_EQ(c.max_magnitude(), 4);
}

TEST(GroupFlow, ParityPair) {
  EXPECT_EQ(parity_pair(1), z2z2::e10);
  EXPECT_EQ(parity_pair(-2), z2z2::e01);
  EXPECT_EQ(parity_pair(3), z2z2::e11);
  EXPECT_EQ(parity_pair(-4), z2z2::zero);
  EXPECT_EQ(parity_pair(7), z2z2::e11);
}

TEST(GroupFlow, VerifyOnK4) {
  auto g = fixtures::k4();
  // Edges 01 and 23 get (0,1), 02 and 13 get (1,0), 03 and 12 get (1,1).
  GroupFlow gf{Group::z2z2, {1, 2, 3, 3, 2, 1}};
  EXPECT_TRUE(verify_group_flow(g, gf, true));
  gf.values[0] = 2;
  EXPECT_FALSE(verify_group_flow(g, gf, true));
}

TEST(GroupFlow, BitClassesGiveFourFlow) {
  auto g = fixtures::k4();
  GroupFlow gf{Group::z2z2, {1, 2, 3, 3, 2, 1}};
  EdgeMask high(6), low(6);
  for (EdgeId e = 0; e < 6; ++e) {
    high[e] = gf.values[e] & 2;
    low[e] = gf.values[e] & 1;
  }
  auto phi1 = eulerian_2_flow(g, high), phi2 = eulerian_2_flow(g, low);
  ASSERT_TRUE(phi1 && phi2);
  auto f = combine(*phi1, *phi2, 1, 2);
  EXPECT_TRUE(verify_int_flow(g, f, 4, true));
  for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(parity_pair(f[e]) & 2, gf.values[e] & 2);
}

TEST(GroupFlow, ProjectionCheck) {
  GroupFlow gf{Group::z2z2, {3, 1, 2}};
  EXPECT_TRUE(group_to_int_projection_check(gf, IntFlow(std::vector<FlowValue>{3, -2, 5})));
  EXPECT_FALSE(group_to_int_projection_check(gf, IntFlow(std::vector<FlowValue>{1, -2, 5})));
  EXPECT_THROW(group_to_int_projection_check(gf, IntFlow(2)), InputError);
}

TEST(Contraction, PushForwardKeepsFlow) {
  auto g = fixtures::k4("-++++-");
  auto r = nz_k_flow_search(g, 5);
  ASSERT_TRUE(r.found());
  for (const std::vector<EdgeId>& h : {std::vector<EdgeId>{0}, {0, 3}, {0, 1, 3}, {5}}) {
    auto [gc, rec] = contract(g, h);
    auto f2 = push_forward(rec, *r.value);
    EXPECT_TRUE(verify_int_flow(gc, f2, 5, false)) << "contracting " << h.size() << " edges";
  }
}

TEST(Contraction, UnbalancedPartLeavesNegativeLoop) {
  auto g = make(4, {{0, 1, '-'}, {1, 2, '+'}, {2, 0, '+'}, {0, 3, '+'}, {3, 3, '-'}});
  auto [gc, rec] = contract(g, {0, 1, 2});
  ASSERT_EQ(gc.vertex_count(), 2);
  ASSERT_EQ(gc.edge_count(), 3);
  const VertexId hub = rec.vertex_map[0];
  int loops = 0;
  for (const auto& h : gc.half_edges(hub)) loops += gc.edge(h.edge).is_loop();
  EXPECT_EQ(loops, 2);  // one loop, both half-edges
  EXPECT_FALSE(is_balanced(gc));
  EXPECT_EQ(rec.edge_map[3] >= 0, true);
}

TEST(FlowFile, RoundTripAndMirroredOrientation) {
  auto g = make(2, {{0, 1, '+'}, {0, 1, '-'}, {1, 1, '-'}});
  IntFlow f(std::vector<FlowValue>{2, 1, -3});
  std::ostringstream out;
  write_flow(out, g, f, 8);
  std::istringstream in(out.str());
  auto ff = read_flow(in, g);
  EXPECT_EQ(ff.k, 8);
  EXPECT_EQ(ff.flow, f);
  // Edge 0 given under the reversed orientation (-1, +1) with value -2.
  std::istringstream mirrored("flow k=8\nf 0 -2\nf 1 1\nf 2 -3\no 0 -1 1\n");
  EXPECT_EQ(read_flow(mirrored, g).flow, f);
}

TEST(FlowFile, Errors) {
  auto g = make(2, {{0, 1, '+'}});
  auto fails = [&](const std::string& s) {
    std::istringstream in(s);
    EXPECT_THROW(read_flow(in, g), InputError) << s;
  };
  fails("f 0 1\n");
  fails("flow k=3\n");
  fails("flow k=3\nf 0 1\nf 0 1\n");
  fails("flow k=3\nf 3 1\n");
  fails("flow k=3\nf 0 1\no 0 1 1\n");
  fails("flow k=x\nf 0 1\n");
}
