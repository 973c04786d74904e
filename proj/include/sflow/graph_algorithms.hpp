#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "sflow/signed_graph.hpp"

namespace sflow {

// Edge subsets are masks indexed by edge id.
using EdgeMask = std::vector<bool>;

inline EdgeMask full_mask(const SignedGraph& g) { return EdgeMask(g.edge_count(), true); }

inline EdgeMask mask_of(const SignedGraph& g, const std::vector<EdgeId>& edges) {
  EdgeMask m(g.edge_count(), false);
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
    m[e] = true;
  }
  return m;
}

inline std::vector<EdgeId> edges_of(const EdgeMask& m) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(m.size()); ++e)
    if (m[e]) out.push_back(e);
  return out;
}

// A circuit or a path given as an alternating vertex/edge sequence. For a
// circuit, edges[i] joins vertices[i] and vertices[(i+1) % size]; for a path
// there is one more vertex than edges.
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::vector<EdgeId> sorted_edges() const {
    auto s = edges;
    std::sort(s.begin(), s.end());
    return s;
  }
  bool operator==(const Walk&) const = default;
};

// The half-edge through which a traversal leaves `v` along `e`.
inline HalfEdge departure(const SignedGraph& g, EdgeId e, VertexId v) {
  const Edge& ed = g.edge(e);
  if (ed.a == v) return {e, End::a};
  if (ed.b == v) return {e, End::b};
  throw InputError("edge " + std::to_string(e) + " is not incident with vertex " + std::to_string(v));
}

struct Components {
  std::vector<int> of;  // component index per vertex
  int count = 0;
};

inline Components components(const SignedGraph& g, const EdgeMask& mask) {
  Components c;
  c.of.assign(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (c.of[s] != -1) continue;
    c.of[s] = c.count;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const auto& h : g.half_edges(v)) {
        if (!mask[h.edge]) continue;
        VertexId w = g.edge(h.edge).other(v);
        if (c.of[w] == -1) {
          c.of[w] = c.count;
          queue.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

inline Components components(const SignedGraph& g) { return components(g, full_mask(g)); }

// A switching function mu with mu(u) mu(v) = sign(e) on every masked non-loop
// edge; std::nullopt when the masked subgraph is unbalanced. Each component is
// rooted at its least vertex with mu = +1.
inline std::optional<std::vector<Sign>> balance_labeling(const SignedGraph& g, const EdgeMask& mask) {
  std::vector<Sign> mu(g.vertex_count(), Sign::positive);
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const auto& h : g.half_edges(v)) {
        if (!mask[h.edge]) continue;
        const Edge& ed = g.edge(h.edge);
        if (ed.is_loop()) {
          if (!ed.is_positive()) return std::nullopt;
          continue;
        }
        VertexId w = ed.other(v);
        Sign want = mu[v] * ed.sign;
        if (!seen[w]) {
          seen[w] = true;
          mu[w] = want;
          queue.push_back(w);
        } else if (mu[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return mu;
}

inline bool is_balanced(const SignedGraph& g, const EdgeMask& mask) {
  return balance_labeling(g, mask).has_value();
}

inline bool is_balanced(const SignedGraph& g) { return is_balanced(g, full_mask(g)); }

// True iff sigma2 is obtainable from the signature of g by switching.
inline bool signatures_equivalent(const SignedGraph& g, std::span<const Sign> sigma2) {
  if (static_cast<int>(sigma2.size()) != g.edge_count()) {
    throw InputError("signature does not cover every edge");
  }
  std::vector<Sign> product(sigma2.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) product[e] = g.sign(e) * sigma2[e];
  return is_balanced(g.with_signature(product));
}

// Bridges of the masked subgraph (loops are never bridges).
inline std::vector<bool> bridges(const SignedGraph& g, const EdgeMask& mask) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> bridge(g.edge_count(), false);
  int timer = 0;
  // Iterative DFS keyed by the entering edge so parallel edges are handled.
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto hs = g.half_edges(f.v);
      if (f.next < hs.size()) {
        const HalfEdge h = hs[f.next++];
        if (!mask[h.edge] || h.edge == f.via) continue;
        const Edge& ed = g.edge(h.edge);
        if (ed.is_loop()) continue;
        VertexId w = ed.other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, h.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) bridge[done.via] = true;
        }
      }
    }
  }
  return bridge;
}

inline bool has_bridge(const SignedGraph& g, const EdgeMask& mask) {
  auto b = bridges(g, mask);
  return std::find(b.begin(), b.end(), true) != b.end();
}

// Shortest path (fewest edges) from any vertex in `sources` to any vertex in
// `targets`, using masked edges and avoiding `blocked` vertices (sources and
// targets are never blocked). Ties broken by vertex id then edge id.
inline std::optional<Walk> shortest_path(const SignedGraph& g, const EdgeMask& mask,
                                         const std::vector<VertexId>& sources,
                                         const std::vector<bool>& is_target,
                                         const std::vector<bool>& blocked = {}) {
  const int n = g.vertex_count();
  std::vector<EdgeId> via(n, -1);
  std::vector<VertexId> prev(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue;
  auto srcs = sources;
  std::sort(srcs.begin(), srcs.end());
  for (VertexId s : srcs) {
    if (seen[s]) continue;
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (is_target[v]) {
      Walk w;
      for (VertexId x = v; x != -1; x = prev[x]) {
        w.vertices.push_back(x);
        if (via[x] != -1) w.edges.push_back(via[x]);
      }
      std::reverse(w.vertices.begin(), w.vertices.end());
      std::reverse(w.edges.begin(), w.edges.end());
      return w;
    }
    std::vector<HalfEdge> hs(g.half_edges(v).begin(), g.half_edges(v).end());
    std::sort(hs.begin(), hs.end());
    for (const auto& h : hs) {
      if (!mask[h.edge]) continue;
      VertexId w = g.edge(h.edge).other(v);
      if (seen[w]) continue;
      if (!blocked.empty() && blocked[w] && !is_target[w]) continue;
      seen[w] = true;
      prev[w] = v;
      via[w] = h.edge;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// A connected component lifted out as its own graph, with id maps back.
struct ComponentGraph {
  SignedGraph graph;
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

inline std::vector<ComponentGraph> split_components(const SignedGraph& g) {
  auto comp = components(g);
  std::vector<ComponentGraph> out(comp.count);
  std::vector<VertexId> local(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& c = out[comp.of[v]];
    local[v] = c.graph.add_vertex();
    c.to_parent_vertex.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto& c = out[comp.of[ed.a]];
    c.graph.add_edge(local[ed.a], local[ed.b], ed.sign);
    c.to_parent_edge.push_back(e);
  }
  return out;
}

// Circuit through a spanning-tree path plus one non-tree edge.
struct SpanningForest {
  std::vector<EdgeId> parent_edge;  // -1 at roots
  std::vector<VertexId> parent;
  std::vector<int> depth;
  std::vector<bool> in_tree;  // per edge
};

// BFS forest of the masked subgraph, rooted at the least vertex of each
// component, neighbours explored in edge-id order.
inline SpanningForest bfs_forest(const SignedGraph& g, const EdgeMask& mask) {
  SpanningForest f;
  const int n = g.vertex_count();
  f.parent_edge.assign(n, -1);
  f.parent.assign(n, -1);
  f.depth.assign(n, -1);
  f.in_tree.assign(g.edge_count(), false);
  for (VertexId s = 0; s < n; ++s) {
    if (f.depth[s] != -1) continue;
    f.depth[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      std::vector<HalfEdge> hs(g.half_edges(v).begin(), g.half_edges(v).end());
      std::sort(hs.begin(), hs.end());
      for (const auto& h : hs) {
        if (!mask[h.edge]) continue;
        VertexId w = g.edge(h.edge).other(v);
        if (f.depth[w] != -1) continue;
        f.depth[w] = f.depth[v] + 1;
        f.parent[w] = v;
        f.parent_edge[w] = h.edge;
        f.in_tree[h.edge] = true;
        queue.push_back(w);
      }
    }
  }
  return f;
}

// Fundamental circuit of non-tree edge `e`, starting at e's A end.
inline Walk fundamental_circuit(const SignedGraph& g, const SpanningForest& f, EdgeId e) {
  const Edge& ed = g.edge(e);
  Walk w;
  if (ed.is_loop()) {
    w.vertices = {ed.a};
    w.edges = {e};
    return w;
  }
  // Tree paths from both ends up to their meeting point.
  std::vector<VertexId> up_a{ed.a}, up_b{ed.b};
  std::vector<EdgeId> ea, eb;
  VertexId x = ed.a, y = ed.b;
  while (x != y) {
    if (f.depth[x] >= f.depth[y]) {
      ea.push_back(f.parent_edge[x]);
      x = f.parent[x];
      up_a.push_back(x);
    } else {
      eb.push_back(f.parent_edge[y]);
      y = f.parent[y];
      up_b.push_back(y);
    }
  }
  // a -> e -> b -> ... -> meet -> ... -> a
  w.vertices.push_back(ed.a);
  w.edges.push_back(e);
  for (std::size_t i = 0; i + 1 < up_b.size(); ++i) {
    w.vertices.push_back(up_b[i]);
    w.edges.push_back(eb[i]);
  }
  for (std::size_t i = up_a.size() - 1; i >= 1; --i) {
    w.vertices.push_back(up_a[i]);
    w.edges.push_back(ea[i - 1]);
  }
  return w;
}

inline int negative_count(const SignedGraph& g, const std::vector<EdgeId>& edges) {
  int n = 0;
  for (EdgeId e : edges) n += g.sign(e) == Sign::negative;
  return n;
}

// Vertex-disjoint union of circuits (every vertex touched has degree 2 in the
// mask) decomposed into circuit walks, ordered by least edge id.
inline std::vector<Walk> circuits_of_two_regular(const SignedGraph& g, const EdgeMask& mask) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (const auto& h : g.half_edges(v)) d += mask[h.edge];
    if (d != 0 && d != 2) throw InputError("edge set is not a disjoint union of circuits");
  }
  std::vector<bool> used(g.edge_count(), false);
  std::vector<Walk> out;
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (!mask[start] || used[start]) continue;
    Walk w;
    const Edge& se = g.edge(start);
    VertexId v = se.a;
    EdgeId e = start;
    if (se.is_loop()) {
      used[start] = true;
      out.push_back(Walk{{v}, {start}});
      continue;
    }
    while (true) {
      used[e] = true;
      w.vertices.push_back(v);
      w.edges.push_back(e);
      v = g.edge(e).other(v);
      EdgeId next = -1;
      for (const auto& h : g.half_edges(v)) {
        if (mask[h.edge] && !used[h.edge]) {
          next = h.edge;
          break;
        }
      }
      if (next == -1) break;
      e = next;
    }
    if (v != w.vertices.front()) throw InputError("edge set is not a disjoint union of circuits");
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace sflow
