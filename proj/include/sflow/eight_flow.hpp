#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sflow/blow_up.hpp"
#include "sflow/circuits.hpp"
#include "sflow/cubic.hpp"
#include "sflow/lemmas.hpp"
#include "sflow/search.hpp"
#include "sflow/suppress.hpp"

namespace sflow {

enum class Route { trivial, bare_circuit, balanced, cubic };

inline std::string to_string(Route r) {
  switch (r) {
    case Route::trivial:
      return "trivial";
    case Route::bare_circuit:
      return "bare-circuit";
    case Route::balanced:
      return "balanced";
    case Route::cubic:
      return "cubic";
  }
  return "?";
}

struct ComponentTranscript {
  std::vector<VertexId> vertices;  // ids in the input graph
  std::vector<EdgeId> edges;
  int merges = 0;
  int removed_loops = 0;
  int reduced_vertices = 0;
  int reduced_edges = 0;
  Route route = Route::trivial;
  std::vector<BlowUpRecord> blow_ups;
  std::optional<CubicCaseTranscript> cubic;
  FlowValue cubic_max = 0;  // max |value| of the flow on the cubic expansion
  FlowValue max_value = 0;  // max |value| of the final flow on this component
};

struct EightFlowTranscript {
  std::vector<ComponentTranscript> components;
};

inline void write_transcript(std::ostream& out, const EightFlowTranscript& t) {
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const auto& c = t.components[i];
    out << "component " << i << ": vertices " << c.vertices.size() << " edges " << c.edges.size() << '\n';
    out << "  suppress: merges " << c.merges << " loops " << c.removed_loops << " -> vertices "
        << c.reduced_vertices << " edges " << c.reduced_edges << '\n';
    out << "  route: " << to_string(c.route) << '\n';
    for (const auto& r : c.blow_ups) {
      out << "  ";
      write_blow_up(out, r);
    }
    if (c.cubic) {
      std::ostringstream ss;
      write_transcript(ss, *c.cubic);
      std::istringstream lines(ss.str());
      std::string line;
      while (std::getline(lines, line)) out << "  " << line << '\n';
      out << "  cubic max: " << c.cubic_max << '\n';
    }
    out << "  max: " << c.max_value << '\n';
  }
}

namespace detail {

// Flow on a connected graph with at least one edge.
inline IntFlow eight_flow_component(const SignedGraph& g, ComponentTranscript& t, const SearchBudget& budget) {
  if (!is_flow_admissible(g, AdmissibilityMethod::deletion)) {
    throw HypothesisError("graph is not flow-admissible");
  }
  auto [reduced, srec] = suppress_preprocess(g);
  for (const auto& s : srec.steps) {
    if (std::holds_alternative<SuppressionRecord::Merge>(s)) {
      ++t.merges;
    } else {
      ++t.removed_loops;
    }
  }
  t.reduced_vertices = reduced.vertex_count();
  t.reduced_edges = reduced.edge_count();

  IntFlow f(reduced.edge_count());
  if (reduced.edge_count() == 0) {
    t.route = Route::trivial;
  } else if (!srec.bare_circuits.empty()) {
    t.route = Route::bare_circuit;
    auto e2f = eulerian_2_flow(reduced);
    ensure(e2f.has_value(), "admissible bare circuit has no 2-flow");
    f = *e2f;
  } else {
    auto z = z2z2_nz_flow_search(reduced, budget);
    if (z.outcome == SearchOutcome::budget) throw BudgetExhausted("Z2xZ2-flow search: budget exhausted");
    if (!z.found()) throw HypothesisError("underlying graph has no nowhere-zero 4-flow");
    const GroupFlow& gf = *z.value;
    if (auto mu = balance_labeling(reduced, full_mask(reduced))) {
      // Switch to all-positive; each bit of the group flow is an even subgraph.
      t.route = Route::balanced;
      std::vector<bool> S(reduced.vertex_count());
      for (VertexId v = 0; v < reduced.vertex_count(); ++v) S[v] = (*mu)[v] == Sign::negative;
      const SignedGraph gs = switch_set(reduced, S);
      EdgeMask bit1(gs.edge_count()), bit2(gs.edge_count());
      for (EdgeId e = 0; e < gs.edge_count(); ++e) {
        bit1[e] = (gf.values[e] & 2) != 0;
        bit2[e] = (gf.values[e] & 1) != 0;
      }
      auto phi1 = eulerian_2_flow(gs, bit1);
      auto phi2 = eulerian_2_flow(gs, bit2);
      ensure(phi1 && phi2, "even subgraph of a balanced graph has no 2-flow");
      const IntFlow phi = combine(*phi1, *phi2, 1, 2);
      for (EdgeId e = 0; e < gs.edge_count(); ++e) f[e] = switch_frame_factor(reduced, S, e) * phi[e];
      ensure(verify_int_flow(reduced, f, 4, true), "balanced 4-flow does not verify");
    } else {
      t.route = Route::cubic;
      auto x = expand_to_cubic(reduced, gf);
      t.blow_ups = x.records;
      EdgeColoring coloring(x.graph.edge_count());
      for (EdgeId e = 0; e < x.graph.edge_count(); ++e) coloring[e] = x.flow.values[e] - 1;
      ensure(is_proper_coloring(x.graph, coloring), "group flow on the cubic expansion is not a coloring");
      ensure(is_flow_admissible(x.graph, AdmissibilityMethod::deletion), "cubic expansion is not flow-admissible");
      auto [fc, ct] = cubic_8_flow(x.graph, coloring);
      t.cubic = std::move(ct);
      t.cubic_max = fc.max_magnitude();
      // Contract the blown circuits in reverse.
      SignedGraph cur = x.graph;
      IntFlow cf = fc;
      for (auto it = x.records.rbegin(); it != x.records.rend(); ++it) {
        auto [prev, rec] = contract_blow_up(cur, *it);
        cf = push_forward(rec, cf);
        cur = std::move(prev);
        ensure(verify_int_flow(cur, cf, 8, true), "contracted flow does not verify");
      }
      ensure(cur == reduced, "contracting the blow-ups does not recover the reduced graph");
      f = cf;
    }
  }
  ensure(verify_int_flow(reduced, f, 8, true), "flow on the reduced graph does not verify");
  IntFlow out = undo_suppress(srec, f);
  ensure(verify_int_flow(g, out, 8, true), "flow after undoing suppression does not verify");
  t.max_value = out.max_magnitude();
  return out;
}

}  // namespace detail

// Nowhere-zero 8-flow of a flow-admissible signed graph whose underlying
// graph has a nowhere-zero 4-flow, component by component.
inline std::pair<IntFlow, EightFlowTranscript> eight_flow(const SignedGraph& g, const SearchBudget& budget = {}) {
  EightFlowTranscript t;
  IntFlow f(g.edge_count());
  for (const auto& comp : split_components(g)) {
    ComponentTranscript ct;
    ct.vertices = comp.to_parent_vertex;
    ct.edges = comp.to_parent_edge;
    if (comp.graph.edge_count() > 0) {
      IntFlow cf = detail::eight_flow_component(comp.graph, ct, budget);
      for (EdgeId e = 0; e < cf.size(); ++e) f[comp.to_parent_edge[e]] = cf[e];
    }
    t.components.push_back(std::move(ct));
  }
  auto check = check_int_flow(g, f, 8, true);
  ensure(check.ok, "8-flow does not verify: " + check.reason);
  return {f, t};
}

}  // namespace sflow
