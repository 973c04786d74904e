#include <gtest/gtest.h>

#include <fstream>

#include "fixtures.hpp"

using namespace sflow;
using fixtures::make;

namespace {

SignedGraph sample(const std::string& name) {
  std::ifstream in(std::string(SFLOW_SAMPLES_DIR) + "/" + name);
  return read_sgf(in);
}

std::string transcript_text(const EightFlowTranscript& t) {
  std::ostringstream out;
  write_transcript(out, t);
  return out.str();
}

}  // namespace

TEST(EightFlow, Samples) {
  for (const char* name : {"k4_signed.sgf", "bouquet.sgf", "k33_signed.sgf"}) {
    auto g = sample(name);
    auto [f, t] = eight_flow(g);
    EXPECT_TRUE(verify_int_flow(g, f, 8, true)) << name;
    EXPECT_EQ(t.components.size(), 1u);
  }
  auto [f, t] = eight_flow(sample("k4_signed.sgf"));
  EXPECT_EQ(t.components[0].route, Route::cubic);
  ASSERT_TRUE(t.components[0].cubic.has_value());
  EXPECT_EQ(t.components[0].cubic->terminal(), "2.1");
}

TEST(EightFlow, HypothesisFailures) {
  EXPECT_THROW(eight_flow(sample("petersen_signed.sgf")), HypothesisError);
  EXPECT_THROW(eight_flow(sample("unbalanced_triangle.sgf")), HypothesisError);
  EXPECT_THROW(eight_flow(sample("long_barbell.sgf")), HypothesisError);
  EXPECT_THROW(eight_flow(fixtures::circuit(4, 1)), HypothesisError);
}

TEST(EightFlow, Routes) {
  auto [f1, t1] = eight_flow(fixtures::circuit(4, 2));
  EXPECT_EQ(t1.components[0].route, Route::bare_circuit);
  auto [f2, t2] = eight_flow(fixtures::k4());
  EXPECT_EQ(t2.components[0].route, Route::balanced);
  EXPECT_LE(f2.max_magnitude(), 3);
  auto [f3, t3] = eight_flow(make(1, {{0, 0, '+'}}));
  EXPECT_EQ(t3.components[0].route, Route::trivial);
  EXPECT_EQ(f3[0], 1);
  auto [f4, t4] = eight_flow(fixtures::k4("-++++-"));
  EXPECT_EQ(t4.components[0].route, Route::cubic);
}

TEST(EightFlow, ComponentsAndIsolatedVertices) {
  auto g = make(8, {{0, 1, '+'}, {1, 2, '-'}, {2, 0, '-'}, {4, 5, '-'}, {4, 5, '+'}, {4, 5, '+'}, {5, 4, '-'}});
  auto [f, t] = eight_flow(g);
  EXPECT_TRUE(verify_int_flow(g, f, 8, true));
  EXPECT_EQ(t.components.size(), 5u);
}

TEST(EightFlow, DeterministicTranscript) {
  auto inst = generate_instance({Family::planar_bridgeless, 10, 0.3, 11});
  if (!is_flow_admissible(inst.graph)) GTEST_SKIP();
  auto [f1, t1] = eight_flow(inst.graph);
  auto [f2, t2] = eight_flow(inst.graph);
  EXPECT_EQ(f1, f2);
  EXPECT_EQ(transcript_text(t1), transcript_text(t2));
}

TEST(EightFlow, HighDegreeGoesThroughBlowUps) {
  int with_blow_ups = 0;
  for (auto& inst : generate_corpus({Family::hamiltonian, 10, 0.3, 5}, 30)) {
    if (!is_flow_admissible(inst.graph)) continue;
    auto [f, t] = eight_flow(inst.graph);
    ASSERT_TRUE(verify_int_flow(inst.graph, f, 8, true));
    for (const auto& c : t.components) with_blow_ups += !c.blow_ups.empty();
  }
  EXPECT_GT(with_blow_ups, 0);
}
