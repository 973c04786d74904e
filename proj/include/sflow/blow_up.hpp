#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "sflow/contraction.hpp"
#include "sflow/flow.hpp"

namespace sflow {

enum class BlowUpCase { case1_odd, case1_even_zero, case2 };

inline std::string to_string(BlowUpCase c) {
  switch (c) {
    case BlowUpCase::case1_odd:
      return "case1-odd";
    case BlowUpCase::case1_even_zero:
      return "case1-even-zero";
    case BlowUpCase::case2:
      return "case2";
  }
  return "?";
}

// Replacement of one vertex v by an all-positive circuit v_1 ... v_k. Vertex v
// keeps its id as v_1; v_2 ... v_k are appended. Edge ids of the old graph are
// kept and the circuit edges e_i = v_i v_{i+1} are appended (e_k = v_k v_1).
struct BlowUpRecord {
  VertexId vertex = -1;
  std::vector<VertexId> circuit;         // v_1 ... v_k
  std::vector<EdgeId> circuit_edges;     // e_1 ... e_k
  std::vector<HalfEdge> half_edges;      // h_1 ... h_k
  std::vector<int> host;                 // host[j]: index i of the v_i that receives h_j
  BlowUpCase kind = BlowUpCase::case1_odd;
  int a = 0, b = 0, c = 0;               // counts of (0,1), (1,0), (1,1), after relabelling
  std::array<std::uint8_t, 4> relabel{0, 1, 2, 3};  // automorphism applied before the formula
  int old_edge_count = 0;

  int k() const { return static_cast<int>(circuit.size()); }
};

inline void write_blow_up(std::ostream& out, const BlowUpRecord& r) {
  out << "blow-up v=" << r.vertex << " k=" << r.k() << " case=" << to_string(r.kind) << " a=" << r.a
      << " b=" << r.b << " c=" << r.c << '\n';
}

namespace detail {

// Circuit value of e_i (1-based) under blocks (ii), (iii) with c = 0, and (v).
inline std::uint8_t blow_up_value(BlowUpCase kind, int a, int b, int k, int i) {
  using namespace z2z2;
  switch (kind) {
    case BlowUpCase::case1_odd:
      if (i % 2 == 1 && i <= a + b - 1) return e11;
      if (i % 2 == 0 && i <= a - 1) return e10;
      if (i >= a + b + 1 && (i - (a + b + 1)) % 2 == 0) return e10;
      if (i >= a + 1 && i <= k - 1 && (i - (a + 1)) % 2 == 0) return e01;
      break;
    case BlowUpCase::case1_even_zero:
      if (i % 2 == 0) return e11;
      if (b == 0) return e10;
      return i <= a - 1 ? e10 : e01;
    case BlowUpCase::case2:
      if (i % 2 == 1 && i <= a + b - 1) return e11;
      if (i % 2 == 0 && i <= a - 2) return e10;
      if (i >= a + b && (i - (a + b)) % 2 == 0) return e10;
      if (i >= a && i <= a + b - 2 && (i - a) % 2 == 0) return e01;
      if (i >= a + b + 1 && i <= k - 1 && (i - (a + b + 1)) % 2 == 0) return e01;
      break;
  }
  throw InternalError("blow-up formula leaves edge " + std::to_string(i) + " without a value");
}

}  // namespace detail

struct BlowUpResult {
  SignedGraph graph;
  GroupFlow flow;
  BlowUpRecord record;
};

inline BlowUpResult blow_up_vertex(const SignedGraph& g, const GroupFlow& gf, VertexId v) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  if (gf.group != Group::z2z2 || !verify_group_flow(g, gf, true)) {
    throw InputError("blow_up_vertex: flow is not a nowhere-zero Z2xZ2-flow");
  }
  const int k = g.degree(v);
  if (k < 4) throw InputError("blow_up_vertex: vertex " + std::to_string(v) + " has degree below 4");
  BlowUpRecord rec;
  rec.vertex = v;
  rec.old_edge_count = g.edge_count();

  std::array<int, 4> count{};
  for (const auto& h : g.half_edges(v)) {
    if (g.edge(h.edge).is_loop() && g.edge(h.edge).is_positive()) {
      throw InputError("blow_up_vertex: positive loop at the blown vertex");
    }
    ++count[gf.values[h.edge]];
  }
  if (count[1] % 2 != count[2] % 2 || count[2] % 2 != count[3] % 2) {
    throw InternalError("blow_up_vertex: block counts differ in parity");
  }
  const bool odd = count[1] % 2 == 1;
  const bool has_zero = count[1] == 0 || count[2] == 0 || count[3] == 0;
  if (odd) {
    rec.kind = BlowUpCase::case1_odd;
  } else if (has_zero) {
    // Move the missing value to (1,1), and a second missing one to (1,0).
    rec.kind = BlowUpCase::case1_even_zero;
    std::vector<std::uint8_t> zero, present;
    for (std::uint8_t x = 1; x <= 3; ++x) (count[x] == 0 ? zero : present).push_back(x);
    rec.relabel[zero[0]] = z2z2::e11;
    if (zero.size() == 2) {
      rec.relabel[zero[1]] = z2z2::e10;
      rec.relabel[present[0]] = z2z2::e01;
    } else {
      rec.relabel[present[0]] = z2z2::e01;
      rec.relabel[present[1]] = z2z2::e10;
    }
  } else {
    rec.kind = BlowUpCase::case2;
  }
  std::array<std::uint8_t, 4> inverse{};
  for (std::uint8_t x = 0; x < 4; ++x) inverse[rec.relabel[x]] = x;

  std::vector<HalfEdge> hs(g.half_edges(v).begin(), g.half_edges(v).end());
  std::sort(hs.begin(), hs.end(), [&](const HalfEdge& x, const HalfEdge& y) {
    return std::tuple(rec.relabel[gf.values[x.edge]], x.edge, x.end) <
           std::tuple(rec.relabel[gf.values[y.edge]], y.edge, y.end);
  });
  rec.half_edges = hs;
  std::array<int, 4> relabelled{};
  for (const auto& h : hs) ++relabelled[rec.relabel[gf.values[h.edge]]];
  rec.a = relabelled[1];
  rec.b = relabelled[2];
  rec.c = relabelled[3];
  const int a = rec.a, b = rec.b;

  // host[j] (0-based j) is the 0-based circuit position receiving h_{j+1}.
  rec.host.resize(k);
  for (int j = 0; j < k; ++j) rec.host[j] = j;
  if (rec.kind == BlowUpCase::case2) {
    // v_i hosts h_{i+1} for a <= i <= a+b-1, and v_{a+b} hosts h_a.
    for (int i = a; i <= a + b - 1; ++i) rec.host[i + 1 - 1] = i - 1;
    rec.host[a - 1] = a + b - 1;
  }

  SignedGraph out(g.vertex_count());
  rec.circuit.push_back(v);
  for (int i = 1; i < k; ++i) rec.circuit.push_back(out.add_vertex());
  std::vector<VertexId> end_a(g.edge_count()), end_b(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    end_a[e] = g.edge(e).a;
    end_b[e] = g.edge(e).b;
  }
  for (int j = 0; j < k; ++j) {
    const HalfEdge& h = hs[j];
    (h.end == End::a ? end_a : end_b)[h.edge] = rec.circuit[rec.host[j]];
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.add_edge(end_a[e], end_b[e], g.sign(e));
  GroupFlow flow{Group::z2z2, gf.values};
  for (int i = 1; i <= k; ++i) {
    const VertexId x = rec.circuit[i - 1];
    const VertexId y = rec.circuit[i % k];
    rec.circuit_edges.push_back(out.add_edge(x, y, Sign::positive));
    flow.values.push_back(inverse[detail::blow_up_value(rec.kind, a, b, k, i)]);
  }
  ensure(verify_group_flow(out, flow, true), "blown-up flow is not a nowhere-zero Z2xZ2-flow");
  return {std::move(out), std::move(flow), std::move(rec)};
}

struct CubicExpansion {
  SignedGraph graph;
  GroupFlow flow;
  std::vector<BlowUpRecord> records;  // in application order
};

// Blow up a vertex of maximum degree (least id on ties) until every vertex
// has degree 3.
inline CubicExpansion expand_to_cubic(const SignedGraph& g, const GroupFlow& gf) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 3) throw InputError("expand_to_cubic: vertex " + std::to_string(v) + " has degree below 3");
  }
  CubicExpansion x{g, gf, {}};
  while (true) {
    VertexId best = -1;
    for (VertexId v = 0; v < x.graph.vertex_count(); ++v)
      if (x.graph.degree(v) > 3 && (best == -1 || x.graph.degree(v) > x.graph.degree(best))) best = v;
    if (best == -1) break;
    auto r = blow_up_vertex(x.graph, x.flow, best);
    x.graph = std::move(r.graph);
    x.flow = std::move(r.flow);
    x.records.push_back(std::move(r.record));
  }
  return x;
}

// Contract the circuit of a blow-up; returns the graph before the blow-up.
inline std::pair<SignedGraph, ContractionRecord> contract_blow_up(const SignedGraph& blown, const BlowUpRecord& r) {
  return contract(blown, r.circuit_edges);
}

}  // namespace sflow
