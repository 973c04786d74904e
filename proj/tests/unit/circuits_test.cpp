#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

using namespace sflow;
using fixtures::make;

TEST(UnbalancedCircuit, AllPositiveHasNone) {
  EXPECT_FALSE(find_unbalanced_circuit(fixtures::k4()).has_value());
  EXPECT_FALSE(find_unbalanced_circuit(fixtures::petersen()).has_value());
}

TEST(UnbalancedCircuit, NegativeLoop) {
  auto g = make(2, {{0, 1, '+'}, {1, 1, '-'}});
  auto c = find_unbalanced_circuit(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->edges, (std::vector<EdgeId>{1}));
}

TEST(UnbalancedCircuit, ThetaWithOneNegativeEdge) {
  // Of the three circuits {0,1}, {0,2}, {1,2}, exactly those through edge 1 are unbalanced.
  auto g = fixtures::theta("+-+");
  auto c = find_unbalanced_circuit(g);
  ASSERT_TRUE(c.has_value());
  auto es = c->sorted_edges();
  EXPECT_TRUE(es == (std::vector<EdgeId>{0, 1}) || es == (std::vector<EdgeId>{1, 2}));
  EXPECT_TRUE(detail::is_circuit(g, *c));
}

TEST(UnbalancedCircuit, EnumerationCountsOnK4) {
  // K4 has 7 circuits: 4 triangles and 3 four-cycles.
  auto g = fixtures::k4("-+++++");
  auto all = enumerate_circuits(g, full_mask(g));
  EXPECT_EQ(all.size(), 7u);
  int odd = 0;
  for (const auto& c : all) odd += negative_count(g, c.edges) % 2;
  EXPECT_EQ(odd, 4);  // the circuits through edge 0: 2 triangles, 2 four-cycles
}

TEST(SignedCircuitThrough, TriangleIsBalancedCircuit) {
  auto g = fixtures::circuit(3, 0);
  auto c = signed_circuit_through(g, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, CertKind::balanced_circuit);
  EXPECT_EQ(c->edges(), (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_TRUE(is_valid_certificate(g, *c));
}

TEST(SignedCircuitThrough, BouquetIsShortBarbell) {
  auto g = fixtures::bouquet();
  for (EdgeId e : {0, 1}) {
    auto c = signed_circuit_through(g, e);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->kind, CertKind::short_barbell);
    EXPECT_EQ(c->edges(), (std::vector<EdgeId>{0, 1}));
    EXPECT_TRUE(is_valid_certificate(g, *c));
  }
}

TEST(SignedCircuitThrough, BridgeBetweenNegativeLoopsIsConnector) {
  auto g = fixtures::long_barbell();
  auto c = signed_circuit_through(g, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, CertKind::long_barbell);
  EXPECT_EQ(c->path.edges, (std::vector<EdgeId>{1}));
  EXPECT_TRUE(is_valid_certificate(g, *c));
  std::ostringstream out;
  write_cert(out, *c);
  EXPECT_EQ(out.str(), "cert long-barbell\nc1: 0\nc2: 2\npath: 1\n");
}

TEST(SignedCircuitThrough, LoneUnbalancedCircuitHasNone) {
  auto g = fixtures::circuit(4, 1);
  for (EdgeId e = 0; e < 4; ++e) EXPECT_FALSE(signed_circuit_through(g, e).has_value());
  EXPECT_THROW(signed_circuit_through(g, 9), InputError);
}

TEST(Admissibility, Examples) {
  EXPECT_TRUE(is_flow_admissible(fixtures::k4()));
  EXPECT_TRUE(is_flow_admissible(fixtures::petersen()));
  EXPECT_FALSE(is_flow_admissible(fixtures::circuit(3, 1)));
  EXPECT_TRUE(is_flow_admissible(fixtures::long_barbell()));
  EXPECT_TRUE(is_flow_admissible(fixtures::bouquet()));
  EXPECT_FALSE(is_flow_admissible(make(2, {{0, 1, '+'}})));
  EXPECT_FALSE(is_flow_admissible(fixtures::k4("-+++++")));  // deleting the negative edge leaves it balanced
  EXPECT_TRUE(is_flow_admissible(fixtures::k4("-++++-")));
}

TEST(Admissibility, DisconnectedNeedsEveryComponent) {
  auto g = make(4, {{0, 1, '+'}, {0, 1, '+'}, {2, 3, '+'}});
  EXPECT_FALSE(is_flow_admissible(g));
  auto h = make(3, {{0, 1, '+'}, {0, 1, '-'}, {1, 0, '+'}, {1, 0, '-'}, {2, 2, '-'}, {2, 2, '-'}});
  EXPECT_TRUE(is_flow_admissible(h));
}

TEST(Admissibility, MethodsAgreeOnSmallCorpus) {
  int admissible = 0, total = 0;
  for_each_tiny(4, [&](const SignedGraph& g) {
    ++total;
    const bool a = is_flow_admissible(g, AdmissibilityMethod::circuit_cover);
    ASSERT_EQ(a, is_flow_admissible(g, AdmissibilityMethod::deletion)) << to_sgf(g);
    admissible += a;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (auto c = signed_circuit_through(g, e)) EXPECT_TRUE(is_valid_certificate(g, *c)) << to_sgf(g);
    }
  });
  EXPECT_EQ(total, 1860);
}

TEST(Admissibility, InvariantUnderSwitching) {
  for_each_tiny(4, [&](const SignedGraph& g) {
    const bool a = is_flow_admissible(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(is_flow_admissible(switch_at(g, v)), a);
  });
}

TEST(Barbells, LongBarbellInCubicGraph) {
  // Two disjoint unbalanced triangles joined by three edges (the prism).
  auto g = make(6, {{0, 1, '-'}, {1, 2, '+'}, {2, 0, '+'}, {3, 4, '-'}, {4, 5, '+'}, {5, 3, '+'},
                    {0, 3, '+'}, {1, 4, '+'}, {2, 5, '+'}});
  Walk c1{{0, 1, 2}, {0, 1, 2}};
  detail::BarbellFinder finder(g, full_mask(g), c1);
  auto q = finder.long_barbell();
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(is_valid_certificate(g, {q->kind, q->circuit1, q->circuit2, q->path, q->circuit1.edges[0]}));
  EXPECT_EQ(q->path.edges.size(), 1u);
}
