#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "sflow/graph_algorithms.hpp"

namespace sflow {

// Transcript of a signed contraction G -> G/H, enough to push flows forward
// and to pull them back over contracted circuits.
struct ContractionRecord {
  SignedGraph original;
  EdgeMask contracted;                               // E(H)
  std::vector<std::vector<VertexId>> component_vertices;  // V of each component of H
  std::vector<VertexId> component_vertex;            // v_H per component, in G/H
  std::vector<VertexId> vertex_map;                  // V(G) -> V(G/H)
  std::vector<EdgeId> surviving;                     // E(G/H) -> E(G)
  std::vector<EdgeId> edge_map;                      // E(G) -> E(G/H) or -1
  std::vector<VertexId> switching_trail;             // vertices switched, ascending
  std::vector<bool> switched;                        // indicator of the trail
  std::vector<EdgeId> removed_positive_loops;        // ids in G

  // Signature of G after the switching trail, the one used at contraction time.
  SignedGraph switched_original() const { return switch_set(original, switched); }
};

// Contract every component of the subgraph spanned by `h_edges`. Each
// component is switched along a BFS tree so its tree edges are positive (all
// of it when balanced), identified to one vertex, and every positive loop
// that results is dropped. Negative loops survive.
inline std::pair<SignedGraph, ContractionRecord> contract(const SignedGraph& g,
                                                          const std::vector<EdgeId>& h_edges) {
  ContractionRecord rec;
  rec.original = g;
  rec.contracted = mask_of(g, h_edges);
  const int n = g.vertex_count();

  // Components of H that contain at least one edge.
  auto comp = components(g, rec.contracted);
  std::vector<int> comp_index(comp.count, -1);
  std::vector<bool> in_h(n, false);
  for (EdgeId e : h_edges) {
    in_h[g.edge(e).a] = in_h[g.edge(e).b] = true;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!in_h[v]) continue;
    int c = comp.of[v];
    if (comp_index[c] == -1) {
      comp_index[c] = static_cast<int>(rec.component_vertices.size());
      rec.component_vertices.emplace_back();
    }
    rec.component_vertices[comp_index[c]].push_back(v);
  }

  // Switch along a BFS tree of each component.
  rec.switched.assign(n, false);
  auto forest = bfs_forest(g, rec.contracted);
  for (const auto& verts : rec.component_vertices) {
    std::vector<VertexId> order = verts;
    std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
      return forest.depth[x] < forest.depth[y] || (forest.depth[x] == forest.depth[y] && x < y);
    });
    for (VertexId v : order) {
      if (forest.parent_edge[v] == -1) continue;
      const VertexId p = forest.parent[v];
      const bool neg = g.sign(forest.parent_edge[v]) == Sign::negative;
      rec.switched[v] = rec.switched[p] != neg;
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (rec.switched[v]) rec.switching_trail.push_back(v);
  const SignedGraph gs = switch_set(g, rec.switched);

  // New vertex ids follow the least original vertex of each class.
  std::vector<VertexId> representative(n);
  for (VertexId v = 0; v < n; ++v) representative[v] = v;
  for (const auto& verts : rec.component_vertices) {
    VertexId r = *std::min_element(verts.begin(), verts.end());
    for (VertexId v : verts) representative[v] = r;
  }
  rec.vertex_map.assign(n, -1);
  SignedGraph out;
  for (VertexId v = 0; v < n; ++v) {
    if (representative[v] == v) rec.vertex_map[v] = out.add_vertex();
  }
  for (VertexId v = 0; v < n; ++v) rec.vertex_map[v] = rec.vertex_map[representative[v]];
  for (const auto& verts : rec.component_vertices) {
    rec.component_vertex.push_back(rec.vertex_map[verts.front()]);
  }

  rec.edge_map.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = gs.edge(e);
    const VertexId a = rec.vertex_map[ed.a];
    const VertexId b = rec.vertex_map[ed.b];
    if (a == b && ed.is_positive()) {
      // H edges made positive by the switching, and any other edge that
      // closes up into a positive loop.
      rec.removed_positive_loops.push_back(e);
      continue;
    }
    rec.edge_map[e] = out.add_edge(a, b, ed.sign);
    rec.surviving.push_back(e);
  }
  return {std::move(out), std::move(rec)};
}

}  // namespace sflow
