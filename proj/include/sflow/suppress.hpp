#pragma once

#include <variant>
#include <vector>

#include "sflow/flow.hpp"
#include "sflow/graph_algorithms.hpp"

namespace sflow {

// Surgery transcript of suppress_preprocess. Working edge ids start with the
// original edge ids; every merge appends a new working edge.
struct SuppressionRecord {
  struct RemoveLoop {
    EdgeId edge;  // working id
  };
  struct Merge {
    EdgeId first;   // working id, far end becomes end A of `merged`
    EdgeId second;  // working id, far end becomes end B of `merged`
    VertexId middle;
    EdgeId merged;
  };
  using Step = std::variant<RemoveLoop, Merge>;

  SignedGraph original;
  std::vector<Edge> working;                 // all working edges
  std::vector<Step> steps;                   // in application order
  std::vector<EdgeId> reduced_to_working;    // reduced edge id -> working id
  std::vector<VertexId> reduced_to_original; // reduced vertex id -> original id
  std::vector<std::vector<EdgeId>> bare_circuits;  // reduced edge ids, one per flagged component

  bool empty() const { return steps.empty(); }
};

// Drop positive loops and suppress degree-2 vertices until none remain,
// except inside components that are bare circuits (left intact, flagged).
inline std::pair<SignedGraph, SuppressionRecord> suppress_preprocess(const SignedGraph& g) {
  SuppressionRecord rec;
  rec.original = g;
  rec.working = g.edges();
  const int n = g.vertex_count();
  std::vector<bool> alive(rec.working.size(), true);
  std::vector<bool> vertex_alive(n, true);
  std::vector<std::vector<EdgeId>> inc(n);  // working edge per half-edge at v
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    inc[rec.working[e].a].push_back(e);
    inc[rec.working[e].b].push_back(e);
  }
  auto alive_half_edges = [&](VertexId v) {
    std::vector<EdgeId> hs;
    for (EdgeId e : inc[v])
      if (alive[e]) hs.push_back(e);
    return hs;
  };
  auto remove_loop = [&](EdgeId e) {
    alive[e] = false;
    rec.steps.push_back(SuppressionRecord::RemoveLoop{e});
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (rec.working[e].is_loop() && rec.working[e].is_positive()) remove_loop(e);
  }

  std::vector<bool> frozen(n, false);  // vertices of bare circuit components
  auto freeze_if_bare_circuit = [&](VertexId start) {
    std::vector<VertexId> comp{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    bool circuit = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      auto hs = alive_half_edges(comp[i]);
      if (hs.size() != 2) circuit = false;
      for (EdgeId e : hs) {
        VertexId w = rec.working[e].other(comp[i]);
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    if (circuit)
      for (VertexId v : comp) frozen[v] = true;
    return circuit;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId x = 0; x < n; ++x) {
      if (!vertex_alive[x] || frozen[x]) continue;
      auto hs = alive_half_edges(x);
      if (hs.size() != 2) continue;
      if (freeze_if_bare_circuit(x)) continue;
      const EdgeId e1 = hs[0], e2 = hs[1];
      const Edge& ed1 = rec.working[e1];
      const Edge& ed2 = rec.working[e2];
      const VertexId u = ed1.other(x);
      const VertexId w = ed2.other(x);
      const Sign merged_sign = ed1.sign * ed2.sign;
      const auto merged = static_cast<EdgeId>(rec.working.size());
      rec.working.push_back(Edge{u, w, merged_sign});
      alive.push_back(true);
      alive[e1] = alive[e2] = false;
      vertex_alive[x] = false;
      inc[u].push_back(merged);
      inc[w].push_back(merged);
      rec.steps.push_back(SuppressionRecord::Merge{e1, e2, x, merged});
      if (u == w && rec.working[merged].is_positive()) remove_loop(merged);
      changed = true;
    }
  }

  SignedGraph out;
  std::vector<VertexId> vmap(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (!vertex_alive[v]) continue;
    vmap[v] = out.add_vertex();
    rec.reduced_to_original.push_back(v);
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(rec.working.size()); ++e) {
    if (!alive[e]) continue;
    const Edge& ed = rec.working[e];
    out.add_edge(vmap[ed.a], vmap[ed.b], ed.sign);
    rec.reduced_to_working.push_back(e);
  }
  // Flag bare circuit components in reduced ids.
  std::vector<bool> done(n, false);
  for (EdgeId e2 = 0; e2 < out.edge_count(); ++e2) {
    const VertexId v = rec.reduced_to_original[out.edge(e2).a];
    if (!frozen[v] || done[v]) continue;
    auto comp = components(out);
    std::vector<EdgeId> circuit;
    for (EdgeId f = 0; f < out.edge_count(); ++f)
      if (comp.of[out.edge(f).a] == comp.of[out.edge(e2).a]) circuit.push_back(f);
    for (VertexId r = 0; r < out.vertex_count(); ++r)
      if (comp.of[r] == comp.of[out.edge(e2).a]) done[rec.reduced_to_original[r]] = true;
    rec.bare_circuits.push_back(std::move(circuit));
  }
  return {std::move(out), std::move(rec)};
}

// Lift a flow on the reduced graph back onto the original graph. Merged edges
// hand their value to both pieces so the suppressed vertex conserves;
// removed positive loops get value 1, which conserves under any orientation.
inline IntFlow undo_suppress(const SuppressionRecord& rec, const IntFlow& f) {
  if (f.size() != static_cast<int>(rec.reduced_to_working.size())) {
    throw InputError("undo_suppress: flow does not match the reduced graph");
  }
  const auto& W = rec.working;
  auto tau = [&](EdgeId e, End end) { return end == End::a ? 1 : -to_int(W[e].sign); };
  // Half-edge of working edge e at its end away from `middle`.
  auto far_end = [&](EdgeId e, VertexId middle) { return W[e].a == middle ? End::b : End::a; };

  std::vector<FlowValue> value(W.size(), 0);
  std::vector<bool> known(W.size(), false);
  for (EdgeId e2 = 0; e2 < f.size(); ++e2) {
    value[rec.reduced_to_working[e2]] = f[e2];
    known[rec.reduced_to_working[e2]] = true;
  }
  for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it) {
    if (const auto* rl = std::get_if<SuppressionRecord::RemoveLoop>(&*it)) {
      value[rl->edge] = 1;
      known[rl->edge] = true;
      continue;
    }
    const auto& m = std::get<SuppressionRecord::Merge>(*it);
    if (!known[m.merged]) throw InputError("undo_suppress: record does not match flow");
    const FlowValue v = value[m.merged];
    value[m.first] = v * tau(m.first, far_end(m.first, m.middle));
    value[m.second] = -to_int(W[m.merged].sign) * v * tau(m.second, far_end(m.second, m.middle));
    known[m.first] = known[m.second] = true;
  }
  IntFlow out(rec.original.edge_count());
  for (EdgeId e = 0; e < out.size(); ++e) {
    if (!known[e]) throw InputError("undo_suppress: record does not match flow");
    out[e] = value[e];
  }
  return out;
}

}  // namespace sflow
