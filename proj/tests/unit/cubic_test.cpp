#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"

using namespace sflow;

TEST(CubicParity, PicksFirstEqualPair) {
  auto g = fixtures::k4("-+++++");
  EdgeColoring col{0, 1, 2, 2, 1, 0};
  auto p = classify_parity(g, col);
  EXPECT_EQ(p.parity, (std::array<int, 3>{1, 0, 0}));
  EXPECT_EQ(std::tie(p.r, p.b, p.y), std::make_tuple(1, 2, 0));
}

TEST(CubicEightFlow, K4Signatures) {
  EdgeColoring col{0, 1, 2, 2, 1, 0};
  for (int bits = 0; bits < 64; ++bits) {
    std::string s(6, '+');
    for (int i = 0; i < 6; ++i)
      if (bits >> i & 1) s[i] = '-';
    auto g = fixtures::k4(s);
    if (!is_flow_admissible(g)) {
      EXPECT_THROW(cubic_8_flow(g, col), HypothesisError);
      continue;
    }
    auto [f, t] = cubic_8_flow(g, col);
    EXPECT_TRUE(verify_int_flow(g, f, 8, true));
    EXPECT_LE(f.max_magnitude(), t.bound()) << s;
    EXPECT_EQ(t.recombine(g.edge_count()), f);
  }
}

TEST(CubicEightFlow, GeneratedCorpusStaysWithinCaseBounds) {
  std::map<std::string, int> seen;
  for (int n = 4; n <= 16; n += 2)
    for (double p : {0.1, 0.3, 0.5})
      for (auto& inst : generate_corpus({Family::cubic3ec, n, p, static_cast<std::uint64_t>(n * 100 + p * 10)}, 10)) {
        if (!is_flow_admissible(inst.graph)) continue;
        auto [f, t] = cubic_8_flow(inst.graph, inst.coloring);
        std::string path;
        for (const auto& s : t.path) path += (path.empty() ? "" : ">") + s;
        ++seen[path];
        ASSERT_TRUE(verify_int_flow(inst.graph, f, 8, true));
        ASSERT_LE(f.max_magnitude(), t.terminal() == "2.1" ? 5 : 7) << path;
        ASSERT_EQ(t.recombine(inst.graph.edge_count()), f);
      }
  EXPECT_GT(seen["1.1"] + seen["1.2>1.1"], 0);
  EXPECT_GT(seen["2.1"], 0);
  EXPECT_GT(seen["2.2.1"] + seen["2.2.2"], 0);
}

TEST(CubicEightFlow, TranscriptText) {
  auto g = fixtures::k4("-++++-");
  auto [f, t] = cubic_8_flow(g, {0, 1, 2, 2, 1, 0});
  std::ostringstream out;
  write_transcript(out, t);
  EXPECT_NE(out.str().find("path: "), std::string::npos);
  EXPECT_NE(out.str().find("combination:"), std::string::npos);
}

TEST(CubicEightFlow, Rejections) {
  EXPECT_THROW(cubic_8_flow(fixtures::k4(), {0, 0, 1, 1, 2, 2}), InputError);
  EXPECT_THROW(cubic_8_flow(fixtures::circuit(4, 0), {0, 1, 0, 1}), InputError);
}

TEST(CubicEightFlow, TwoOddCircuitsWithoutDetour) {
  auto inst = generate_instance({Family::cubic3ec, 12, 0.4, instance_seed(1153, 102)});
  ASSERT_TRUE(is_flow_admissible(inst.graph));
  auto [f, t] = cubic_8_flow(inst.graph, inst.coloring);
  EXPECT_EQ(t.path, (std::vector<std::string>{"2.3"}));
  EXPECT_EQ(t.combination.size(), 3u);
  EXPECT_LE(f.max_magnitude(), 7);
  EXPECT_TRUE(verify_int_flow(inst.graph, f, 8, true));
}
