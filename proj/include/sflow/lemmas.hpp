#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "sflow/circuits.hpp"
#include "sflow/contraction.hpp"
#include "sflow/flow.hpp"
#include "sflow/search.hpp"

namespace sflow {

namespace detail {

inline HalfEdge out_half(const SignedGraph& g, const Walk& w, std::size_t j) {
  return departure(g, w.edges[j], w.vertices[j]);
}

inline HalfEdge in_half(const SignedGraph& g, const Walk& w, std::size_t j) {
  const HalfEdge h = out_half(g, w, j);
  return {h.edge, opposite(h.end)};
}

// Values along a closed walk so that every junction conserves, except that a
// junction marked in `flip` leaks 2 * tau_in * x instead. The closing
// junction at vertices[0] takes whatever is left.
inline std::vector<FlowValue> propagate_closed(const SignedGraph& g, const Walk& c, const std::vector<bool>& flip,
                                               FlowValue x0) {
  std::vector<FlowValue> x(c.edges.size());
  x[0] = x0;
  for (std::size_t j = 1; j < c.edges.size(); ++j) {
    const int t = g.tau(in_half(g, c, j - 1)) * g.tau(out_half(g, c, j));
    x[j] = (flip[j] ? t : -t) * x[j - 1];
  }
  return x;
}

// Values along an open path with conservation at every interior vertex.
inline std::vector<FlowValue> propagate_path(const SignedGraph& g, const Walk& p, FlowValue x0) {
  std::vector<FlowValue> x(p.edges.size());
  if (x.empty()) return x;
  x[0] = x0;
  for (std::size_t j = 1; j < p.edges.size(); ++j) {
    x[j] = -g.tau(in_half(g, p, j - 1)) * g.tau(out_half(g, p, j)) * x[j - 1];
  }
  return x;
}

// Contribution of the edges of `es` (valued by f) to the conservation sum at v.
inline FlowValue contribution(const SignedGraph& g, const IntFlow& f, const std::vector<EdgeId>& es, VertexId v) {
  FlowValue s = 0;
  for (EdgeId e : es) s += g.coefficient(e, v) * f[e];
  return s;
}

// Euler tour of the masked edges of one component, as (edge, departure end).
inline std::vector<HalfEdge> euler_tour(const SignedGraph& g, const EdgeMask& mask, VertexId start) {
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> next(g.vertex_count(), 0);
  struct Frame {
    VertexId v;
    HalfEdge via;
    bool has_via;
  };
  std::vector<Frame> stack{{start, {}, false}};
  std::vector<HalfEdge> tour;
  while (!stack.empty()) {
    const VertexId v = stack.back().v;
    auto hs = g.half_edges(v);
    while (next[v] < hs.size() && (!mask[hs[next[v]].edge] || used[hs[next[v]].edge])) ++next[v];
    if (next[v] < hs.size()) {
      const EdgeId e = hs[next[v]].edge;
      used[e] = true;
      const HalfEdge out = departure(g, e, v);
      stack.push_back({g.edge(e).other(v), out, true});
    } else {
      if (stack.back().has_via) tour.push_back(stack.back().via);
      stack.pop_back();
    }
  }
  std::reverse(tour.begin(), tour.end());
  return tour;
}

}  // namespace detail

// Nowhere-zero 2-flow supported exactly on the masked edges, or nothing when
// some component of the masked subgraph is not eulerian with an even number
// of negative edges. Values off the mask are 0.
inline std::optional<IntFlow> eulerian_2_flow(const SignedGraph& g, const EdgeMask& mask) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (const auto& h : g.half_edges(v)) d += mask[h.edge];
    if (d % 2 != 0) return std::nullopt;
  }
  auto comp = components(g, mask);
  std::vector<int> negatives(comp.count, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (mask[e] && g.sign(e) == Sign::negative) ++negatives[comp.of[g.edge(e).a]];
  for (int n : negatives)
    if (n % 2 != 0) return std::nullopt;

  IntFlow f(g.edge_count());
  std::vector<bool> done(comp.count, false);
  for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
    if (!mask[e0] || done[comp.of[g.edge(e0).a]]) continue;
    done[comp.of[g.edge(e0).a]] = true;
    auto tour = detail::euler_tour(g, mask, g.edge(e0).a);
    FlowValue x = 1;
    for (std::size_t j = 0; j < tour.size(); ++j) {
      if (j > 0) {
        const HalfEdge in{tour[j - 1].edge, opposite(tour[j - 1].end)};
        x = -g.tau(in) * g.tau(tour[j]) * x;
      }
      f[tour[j].edge] = x;
    }
  }
  ensure(verify_int_flow(g, f, 3, false) && conserves(g, f), "eulerian 2-flow does not conserve");
  for (EdgeId e = 0; e < g.edge_count(); ++e) ensure((f[e] != 0) == mask[e], "eulerian 2-flow has wrong support");
  return f;
}

inline std::optional<IntFlow> eulerian_2_flow(const SignedGraph& g) { return eulerian_2_flow(g, full_mask(g)); }

// Nowhere-zero 3-flow on the edges of a barbell certificate, 0 elsewhere.
// Each circuit carries 1 around and leaks 2 at its attachment; the connector
// carries 2.
inline IntFlow barbell_3_flow(const SignedGraph& g, const SignedCircuitCert& cert) {
  if (cert.kind == CertKind::balanced_circuit || !is_valid_certificate(g, cert)) {
    throw InputError("barbell_3_flow: certificate is not a barbell");
  }
  IntFlow f(g.edge_count());
  auto lay_circuit = [&](const Walk& c, FlowValue sign) {
    auto x = detail::propagate_closed(g, c, std::vector<bool>(c.edges.size(), false), sign);
    for (std::size_t j = 0; j < x.size(); ++j) f[c.edges[j]] = x[j];
    return detail::contribution(g, f, c.edges, c.vertices[0]);
  };
  const FlowValue leak1 = lay_circuit(cert.circuit1, 1);
  if (cert.kind == CertKind::short_barbell) {
    const FlowValue leak2 = lay_circuit(cert.circuit2, 1);
    if (leak1 + leak2 != 0) lay_circuit(cert.circuit2, -1);
  } else {
    const Walk& p = cert.path;
    const FlowValue p0 = -g.tau(detail::out_half(g, p, 0)) * leak1;
    auto x = detail::propagate_path(g, p, p0);
    for (std::size_t j = 0; j < x.size(); ++j) f[p.edges[j]] = x[j];
    const FlowValue arriving = g.tau(detail::in_half(g, p, p.edges.size() - 1)) * x.back();
    const FlowValue leak2 = lay_circuit(cert.circuit2, 1);
    if (arriving + leak2 != 0) lay_circuit(cert.circuit2, -1);
  }
  ensure(verify_int_flow(g, f, 3, false), "barbell flow does not verify");
  for (EdgeId e : cert.edges()) ensure(f[e] != 0, "barbell flow vanishes on a barbell edge");
  return f;
}

// The whole graph must be a barbell.
inline IntFlow barbell_3_flow(const SignedGraph& q) {
  if (q.edge_count() == 0) throw InputError("barbell_3_flow: empty graph");
  auto cert = signed_circuit_through(q, 0);
  if (!cert || cert->kind == CertKind::balanced_circuit ||
      static_cast<int>(cert->edges().size()) != q.edge_count()) {
    throw InputError("barbell_3_flow: graph is not a barbell");
  }
  return barbell_3_flow(q, *cert);
}

namespace detail {

// Lift for a support that is a disjoint union of circuits. The +-2 edges form
// a T-join of the unbalanced circuits in the graph whose nodes are the
// circuits and the vertices off the support, so the lift exists exactly when
// every component of that graph holds an even number of unbalanced circuits.
inline std::optional<IntFlow> lift_over_circuits(const SignedGraph& g, const EdgeMask& s) {
  const int n = g.vertex_count();
  auto circuits = circuits_of_two_regular(g, s);
  const int nc = static_cast<int>(circuits.size());
  std::vector<int> node(n);
  for (VertexId v = 0; v < n; ++v) node[v] = nc + v;
  for (int i = 0; i < nc; ++i)
    for (VertexId v : circuits[i].vertices) node[v] = i;
  const int nodes = nc + n;
  std::vector<bool> odd(nodes, false);
  for (int i = 0; i < nc; ++i) odd[i] = negative_count(g, circuits[i].edges) % 2 == 1;

  std::vector<std::vector<EdgeId>> adj(nodes);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (s[e]) continue;
    const int x = node[g.edge(e).a], y = node[g.edge(e).b];
    if (x == y) continue;
    adj[x].push_back(e);
    adj[y].push_back(e);
  }
  // BFS forest of the node graph, then the parity T-join inside it.
  std::vector<int> parent(nodes, -2);
  std::vector<EdgeId> parent_edge(nodes, -1);
  std::vector<int> order;
  for (int r = 0; r < nodes; ++r) {
    if (parent[r] != -2) continue;
    parent[r] = -1;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (EdgeId e : adj[x]) {
        const int y = node[g.edge(e).a] == x ? node[g.edge(e).b] : node[g.edge(e).a];
        if (parent[y] != -2) continue;
        parent[y] = x;
        parent_edge[y] = e;
        queue.push_back(y);
      }
    }
  }
  std::vector<bool> below(nodes, false), in_join(g.edge_count(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    below[x] = below[x] != odd[x];
    if (parent[x] == -1) {
      if (below[x]) return std::nullopt;  // odd count in this component
    } else {
      if (below[x]) in_join[parent_edge[x]] = true;
      below[parent[x]] = below[parent[x]] != below[x];
    }
  }

  IntFlow f(g.edge_count());
  std::vector<bool> fixed(g.edge_count(), false);
  for (int x : order) {
    // Join edges at this node grouped by the vertex they attach to.
    std::map<VertexId, std::vector<EdgeId>> at;
    for (EdgeId e : adj[x]) {
      if (!in_join[e]) continue;
      const VertexId v = node[g.edge(e).a] == x ? g.edge(e).a : g.edge(e).b;
      at[v].push_back(e);
    }
    std::map<VertexId, FlowValue> leak;
    if (x < nc) {
      const Walk& c = circuits[x];
      std::vector<bool> flip(c.edges.size(), false);
      for (std::size_t j = 1; j < c.edges.size(); ++j) flip[j] = at.count(c.vertices[j]) && at[c.vertices[j]].size() % 2 == 1;
      auto vals = propagate_closed(g, c, flip, 1);
      // Global sign from the parent edge when it meets a leaking vertex.
      FlowValue sgn = 1;
      if (parent[x] >= 0 && in_join[parent_edge[x]]) {
        const EdgeId pe = parent_edge[x];
        const VertexId w = node[g.edge(pe).a] == x ? g.edge(pe).a : g.edge(pe).b;
        IntFlow tmp(g.edge_count());
        for (std::size_t j = 0; j < vals.size(); ++j) tmp[c.edges[j]] = vals[j];
        const FlowValue l = contribution(g, tmp, c.edges, w);
        const FlowValue pc = g.coefficient(pe, w) * f[pe];
        if (l != 0 && l == pc) sgn = -1;
      }
      for (std::size_t j = 0; j < vals.size(); ++j) f[c.edges[j]] = sgn * vals[j];
      for (VertexId v : c.vertices) leak[v] = contribution(g, f, c.edges, v);
    }
    for (auto& [v, es] : at) {
      FlowValue residual = leak.count(v) ? leak[v] : 0;
      std::vector<EdgeId> open;
      for (EdgeId e : es) {
        if (fixed[e]) {
          residual += g.coefficient(e, v) * f[e];
        } else {
          open.push_back(e);
        }
      }
      std::sort(open.begin(), open.end());
      FlowValue target = -residual;  // sum the open edges must contribute
      ensure(target == 0 || target == 2 || target == -2, "lift: unexpected residual at a join vertex");
      FlowValue next = 2;  // the rest pair off as +2, -2
      for (std::size_t i = 0; i < open.size(); ++i) {
        FlowValue c = target;
        if (target != 0) {
          target = 0;
        } else {
          c = next;
          next = -next;
        }
        f[open[i]] = c / g.coefficient(open[i], v);
        fixed[open[i]] = true;
      }
    }
  }
  return f;
}

inline bool is_lift(const SignedGraph& g, const EdgeMask& s, const IntFlow& f) {
  if (!conserves(g, f)) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const FlowValue a = f[e] < 0 ? -f[e] : f[e];
    if (s[e] ? a != 1 : (a != 0 && a != 2)) return false;
  }
  return true;
}

}  // namespace detail

// A 3-flow with |f| = 1 exactly on s and |f| in {0, 2} elsewhere, or nothing.
// s must be the support of a Z2-flow.
inline std::optional<IntFlow> z2_to_3_lift(const SignedGraph& g, const EdgeMask& s, const SearchBudget& budget = {}) {
  if (s.size() != static_cast<std::size_t>(g.edge_count())) throw InputError("z2_to_3_lift: mask does not match graph");
  bool two_regular = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (const auto& h : g.half_edges(v)) d += s[h.edge];
    if (d % 2 != 0) throw InputError("z2_to_3_lift: edge set is not the support of a Z2-flow");
    if (d != 0 && d != 2) two_regular = false;
  }
  if (two_regular) {
    auto f = detail::lift_over_circuits(g, s);
    if (f) ensure(detail::is_lift(g, s, *f), "z2_to_3_lift produced an invalid lift");
    return f;
  }
  FlowConstraints c;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    c.domains.push_back(s[e] ? std::vector<FlowValue>{1, -1} : std::vector<FlowValue>{0, 2, -2});
  }
  auto r = constrained_flow_search(g, std::move(c), budget);
  if (r.outcome == SearchOutcome::budget) throw BudgetExhausted("z2_to_3_lift: search budget exhausted");
  if (!r.found()) return std::nullopt;
  ensure(detail::is_lift(g, s, *r.value), "z2_to_3_lift search returned an invalid lift");
  return r.value;
}

// Extend a flow on G/H over the contracted circuits. Every component of H
// must be a circuit that the contraction made all-positive. Boundary inflow
// is spread along each circuit by prefix sums; the free parameter is the
// first of 1, -1, 2, -2, ... that keeps every circuit value nonzero and
// below k. Circuits without boundary flow get a constant 2-flow. Edges
// removed as positive loops and not on a circuit get 0.
inline IntFlow extend_flow_over_circuits(const ContractionRecord& rec, const std::vector<Walk>& circuits,
                                         const IntFlow& f, FlowValue k) {
  const SignedGraph& g = rec.original;
  if (f.size() != static_cast<int>(rec.surviving.size())) throw InputError("extension: flow does not match G/H");
  const SignedGraph gs = rec.switched_original();
  IntFlow h(g.edge_count());  // in the frame of gs
  for (EdgeId e2 = 0; e2 < f.size(); ++e2) h[rec.surviving[e2]] = f[e2];
  for (const Walk& c : circuits) {
    for (EdgeId e : c.edges) {
      if (!rec.contracted[e] || gs.sign(e) != Sign::positive) {
        throw InputError("extension: circuit edge " + std::to_string(e) + " is not a contracted positive edge");
      }
    }
    // Net inflow d_j at each circuit vertex from the non-circuit edges.
    const std::size_t L = c.edges.size();
    std::vector<bool> on_c(g.edge_count(), false);
    for (EdgeId e : c.edges) on_c[e] = true;
    std::vector<FlowValue> prefix(L);
    FlowValue run = 0;
    for (std::size_t j = 0; j < L; ++j) {
      const VertexId v = c.vertices[j];
      for (const auto& hh : gs.half_edges(v))
        if (!on_c[hh.edge]) run += gs.tau(hh) * h[hh.edge];
      prefix[j] = run;
    }
    ensure(run == 0, "extension: boundary of a contracted circuit does not balance");
    std::optional<FlowValue> t;
    for (FlowValue cand = 1; cand < k && !t; ++cand) {
      for (FlowValue tt : {cand, -cand}) {
        bool ok = true;
        for (FlowValue p : prefix) {
          const FlowValue y = tt - p;
          ok = ok && y != 0 && y < k && y > -k;
        }
        if (ok) {
          t = tt;
          break;
        }
      }
    }
    ensure(t.has_value(), "extension: no admissible free parameter");
    // y_j is the outflow from v_j along circuit edge j.
    for (std::size_t j = 0; j < L; ++j) {
      const HalfEdge out = departure(gs, c.edges[j], c.vertices[j]);
      h[c.edges[j]] = gs.tau(out) * (*t - prefix[j]);
    }
  }
  IntFlow out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = switch_frame_factor(g, rec.switched, e) * h[e];
  ensure(conserves(g, out), "extension does not conserve");
  return out;
}

// Single chordless balanced circuit of degree-<=3 vertices with 2 or 3
// boundary edges; f is a nowhere-zero k-flow of g contracted along c.
inline IntFlow extend_flow_over_circuit(const SignedGraph& g, const Walk& c, const IntFlow& f, FlowValue k) {
  if (k < 4) throw InputError("extension needs k >= 4");
  if (!detail::is_circuit(g, c)) throw InputError("extension: not a circuit");
  if (detail::unbalanced(g, c)) throw InputError("extension: circuit is unbalanced");
  std::vector<bool> on(g.vertex_count(), false), on_e(g.edge_count(), false);
  for (VertexId v : c.vertices) on[v] = true;
  for (EdgeId e : c.edges) on_e[e] = true;
  int boundary_edges = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (on_e[e]) continue;
    const bool ia = on[g.edge(e).a], ib = on[g.edge(e).b];
    if (ia && ib) throw InputError("extension: circuit has a chord");
    boundary_edges += ia != ib;
  }
  if (boundary_edges < 2 || boundary_edges > 3) throw InputError("extension: circuit needs 2 or 3 boundary edges");
  for (VertexId v : c.vertices)
    if (g.degree(v) > 3) throw InputError("extension: circuit vertex of degree above 3");
  auto [gc, rec] = contract(g, c.edges);
  if (!verify_int_flow(gc, f, k, true)) throw InputError("extension: flow is not a nowhere-zero k-flow of g/c");
  auto out = extend_flow_over_circuits(rec, {c}, f, k);
  ensure(verify_int_flow(g, out, k, true), "extension is not a nowhere-zero k-flow");
  return out;
}

namespace detail {

// 4-flow nonzero on `required`, with at most three support edges at every
// vertex marked in `capped`; the caller supplies any switching.
inline std::optional<IntFlow> cover_search(const SignedGraph& g, const std::vector<EdgeId>& required,
                                           const std::vector<bool>& capped, const SearchBudget& budget) {
  FlowConstraints c;
  const std::vector<FlowValue> nonzero{1, -1, 2, -2, 3, -3};
  const std::vector<FlowValue> any{0, 1, -1, 2, -2, 3, -3};
  c.domains.assign(g.edge_count(), any);
  for (EdgeId e : required) c.domains[e] = nonzero;
  c.support_degree_cap.assign(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (capped[v]) c.support_degree_cap[v] = 3;
  auto r = constrained_flow_search(g, std::move(c), budget);
  if (r.outcome == SearchOutcome::budget) throw BudgetExhausted("4-flow cover search: budget exhausted");
  return r.value;
}

}  // namespace detail

// 4-flow nonzero on the unbalanced circuit c whose support has degree at most
// 3 at every vertex off c. g - E(c) must be balanced.
inline IntFlow hc_cover_4_flow(const SignedGraph& g, const Walk& c, const SearchBudget& budget = {}) {
  if (!detail::is_circuit(g, c) || !detail::unbalanced(g, c)) {
    throw InputError("hc_cover_4_flow: not an unbalanced circuit");
  }
  EdgeMask rest = full_mask(g);
  for (EdgeId e : c.edges) rest[e] = false;
  auto mu = balance_labeling(g, rest);
  if (!mu) throw InputError("hc_cover_4_flow: graph minus the circuit is unbalanced");
  if (!is_flow_admissible(g, AdmissibilityMethod::deletion)) {
    throw InputError("hc_cover_4_flow: graph is not flow-admissible");
  }
  // Move every negative edge onto c.
  std::vector<bool> S(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) S[v] = (*mu)[v] == Sign::negative;
  const SignedGraph gs = switch_set(g, S);
  std::vector<bool> capped(g.vertex_count(), true);
  for (VertexId v : c.vertices) capped[v] = false;
  auto fs = detail::cover_search(gs, c.edges, capped, budget);
  ensure(fs.has_value(), "hc_cover_4_flow: no 4-flow cover found");
  IntFlow f(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) f[e] = switch_frame_factor(gs, S, e) * (*fs)[e];
  ensure(verify_int_flow(g, f, 4, false), "hc_cover_4_flow: result does not verify");
  return f;
}

}  // namespace sflow
