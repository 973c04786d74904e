#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "sflow/graph_algorithms.hpp"

namespace sflow {

// Unbalanced circuit of the masked subgraph, or nothing. The candidates are
// the fundamental circuits of the BFS forest; the least by sorted edge ids wins.
inline std::optional<Walk> find_unbalanced_circuit(const SignedGraph& g, const EdgeMask& mask) {
  auto forest = bfs_forest(g, mask);
  std::optional<Walk> best;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mask[e] || forest.in_tree[e]) continue;
    Walk c = fundamental_circuit(g, forest, e);
    if (negative_count(g, c.edges) % 2 == 0) continue;
    if (!best || c.sorted_edges() < best->sorted_edges()) best = std::move(c);
  }
  return best;
}

inline std::optional<Walk> find_unbalanced_circuit(const SignedGraph& g) {
  return find_unbalanced_circuit(g, full_mask(g));
}

namespace detail {

// Depth-first search over simple s-t paths in the masked subgraph whose sign
// product is `want`. Branches whose remaining region forces the wrong parity,
// or cannot reach t, are cut. With `first_only`, a region of forced parity is
// finished by a shortest path instead of being enumerated.
class SignedPathSearch {
 public:
  using Visitor = std::function<bool(const Walk&)>;  // return true to stop

  SignedPathSearch(const SignedGraph& g, const EdgeMask& mask, std::vector<bool> blocked)
      : g_(g), mask_(mask), blocked_(std::move(blocked)) {
    if (blocked_.empty()) blocked_.assign(g.vertex_count(), false);
  }

  bool run(VertexId s, VertexId t, Sign want, bool first_only, const Visitor& visit) {
    target_ = t;
    want_ = want;
    first_only_ = first_only;
    visit_ = &visit;
    visited_.assign(g_.vertex_count(), false);
    path_ = Walk{{s}, {}};
    visited_[s] = true;
    if (s == t) return false;
    return dfs(s, Sign::positive);
  }

 private:
  // Component of `cur` avoiding visited vertices, with a loop-free switching
  // function when one exists (loops never lie on paths).
  struct Region {
    bool reaches_target = false;
    bool forced = false;
    std::vector<Sign> mu;
  };

  bool usable(VertexId w) const { return (!visited_[w] && !blocked_[w]) || w == target_; }

  Region region(VertexId cur) const {
    Region r;
    r.mu.assign(g_.vertex_count(), Sign::positive);
    std::vector<bool> seen(g_.vertex_count(), false);
    seen[cur] = true;
    r.forced = true;
    std::vector<VertexId> stack{cur};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      if (v == target_) {
        r.reaches_target = true;
        continue;  // paths end at the target
      }
      for (const auto& h : g_.half_edges(v)) {
        if (!mask_[h.edge]) continue;
        const Edge& ed = g_.edge(h.edge);
        if (ed.is_loop()) continue;
        VertexId w = ed.other(v);
        if (!usable(w)) continue;
        Sign want = r.mu[v] * ed.sign;
        if (!seen[w]) {
          seen[w] = true;
          r.mu[w] = want;
          stack.push_back(w);
        } else if (r.mu[w] != want) {
          r.forced = false;
        }
      }
    }
    return r;
  }

  bool dfs(VertexId cur, Sign parity) {
    Region r = region(cur);
    if (!r.reaches_target) return false;
    if (r.forced) {
      if (parity * r.mu[cur] * r.mu[target_] != want_) return false;
      if (first_only_) {
        std::vector<bool> block(g_.vertex_count(), false);
        for (VertexId v = 0; v < g_.vertex_count(); ++v) block[v] = !usable(v) && v != cur;
        std::vector<bool> is_t(g_.vertex_count(), false);
        is_t[target_] = true;
        EdgeMask m = mask_;
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
          if (g_.edge(e).is_loop()) m[e] = false;
        auto tail = shortest_path(g_, m, {cur}, is_t, block);
        if (!tail) return false;
        Walk full = path_;
        for (std::size_t i = 0; i < tail->edges.size(); ++i) {
          full.edges.push_back(tail->edges[i]);
          full.vertices.push_back(tail->vertices[i + 1]);
        }
        return (*visit_)(full);
      }
    }
    std::vector<HalfEdge> hs(g_.half_edges(cur).begin(), g_.half_edges(cur).end());
    std::sort(hs.begin(), hs.end());
    for (const auto& h : hs) {
      if (!mask_[h.edge]) continue;
      const Edge& ed = g_.edge(h.edge);
      if (ed.is_loop()) continue;
      VertexId w = ed.other(cur);
      if (!usable(w)) continue;
      path_.edges.push_back(h.edge);
      path_.vertices.push_back(w);
      const Sign p = parity * ed.sign;
      bool stop = false;
      if (w == target_) {
        if (p == want_) stop = (*visit_)(path_);
      } else {
        visited_[w] = true;
        stop = dfs(w, p);
        visited_[w] = false;
      }
      path_.edges.pop_back();
      path_.vertices.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const SignedGraph& g_;
  const EdgeMask& mask_;
  std::vector<bool> blocked_;
  std::vector<bool> visited_;
  Walk path_;
  VertexId target_ = 0;
  Sign want_ = Sign::positive;
  bool first_only_ = true;
  const Visitor* visit_ = nullptr;
};

// Close a b..a path with edge e = (a, b) into a circuit starting at a.
inline Walk close_circuit(const SignedGraph& g, EdgeId e, const Walk& path_b_to_a) {
  Walk c;
  c.vertices.push_back(g.edge(e).a);
  c.edges.push_back(e);
  for (std::size_t i = 0; i + 1 < path_b_to_a.vertices.size(); ++i) {
    c.vertices.push_back(path_b_to_a.vertices[i]);
    c.edges.push_back(path_b_to_a.edges[i]);
  }
  return c;
}

// Circuits through e whose sign is `want`; visit returns true to stop.
inline bool for_each_circuit_through(const SignedGraph& g, const EdgeMask& mask, EdgeId e, Sign want,
                                     bool first_only, const std::function<bool(const Walk&)>& visit) {
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) {
    if (ed.sign != want) return false;
    return visit(Walk{{ed.a}, {e}});
  }
  EdgeMask m = mask;
  m[e] = false;
  SignedPathSearch search(g, m, {});
  return search.run(ed.b, ed.a, want * ed.sign, first_only,
                    [&](const Walk& p) { return visit(close_circuit(g, e, p)); });
}

}  // namespace detail

// Every circuit of the masked subgraph, each once: a loop on its own, or the
// least edge of the circuit followed by a path through larger edge ids.
inline std::vector<Walk> enumerate_circuits(const SignedGraph& g, const EdgeMask& mask) {
  std::vector<Walk> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mask[e]) continue;
    if (g.edge(e).is_loop()) {
      out.push_back(Walk{{g.edge(e).a}, {e}});
      continue;
    }
    EdgeMask m(g.edge_count(), false);
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) m[f] = mask[f];
    for (Sign want : {Sign::positive, Sign::negative}) {
      detail::for_each_circuit_through(g, m, e, want, false, [&](const Walk& c) {
        out.push_back(c);
        return false;
      });
    }
  }
  return out;
}

enum class CertKind { balanced_circuit, short_barbell, long_barbell };

inline std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::balanced_circuit:
      return "balanced-circuit";
    case CertKind::short_barbell:
      return "short-barbell";
    case CertKind::long_barbell:
      return "long-barbell";
  }
  return "?";
}

// Witness that an edge lies in a signed circuit. For a long barbell the
// connector runs from a vertex of circuit1 to a vertex of circuit2; for a
// short barbell circuit1 and circuit2 both start at the shared vertex.
struct SignedCircuitCert {
  CertKind kind = CertKind::balanced_circuit;
  Walk circuit1;
  Walk circuit2;
  Walk path;
  EdgeId covered = -1;

  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> all = circuit1.edges;
    all.insert(all.end(), circuit2.edges.begin(), circuit2.edges.end());
    all.insert(all.end(), path.edges.begin(), path.edges.end());
    std::sort(all.begin(), all.end());
    return all;
  }
};

inline void write_cert(std::ostream& out, const SignedCircuitCert& c) {
  auto list = [&](const char* name, const std::vector<EdgeId>& es) {
    out << name;
    for (EdgeId e : es) out << ' ' << e;
    out << '\n';
  };
  out << "cert " << to_string(c.kind) << '\n';
  list("c1:", c.circuit1.edges);
  list("c2:", c.circuit2.edges);
  list("path:", c.path.edges);
}

namespace detail {

inline bool is_circuit(const SignedGraph& g, const Walk& w) {
  const std::size_t n = w.edges.size();
  if (n == 0 || w.vertices.size() != n) return false;
  std::set<VertexId> vs(w.vertices.begin(), w.vertices.end());
  std::set<EdgeId> es(w.edges.begin(), w.edges.end());
  if (vs.size() != n || es.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& ed = g.edge(w.edges[i]);
    VertexId x = w.vertices[i], y = w.vertices[(i + 1) % n];
    if (!((ed.a == x && ed.b == y) || (ed.a == y && ed.b == x))) return false;
  }
  return true;
}

inline bool is_path(const SignedGraph& g, const Walk& w) {
  if (w.vertices.size() != w.edges.size() + 1) return false;
  std::set<VertexId> vs(w.vertices.begin(), w.vertices.end());
  if (vs.size() != w.vertices.size()) return false;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const Edge& ed = g.edge(w.edges[i]);
    VertexId x = w.vertices[i], y = w.vertices[i + 1];
    if (!((ed.a == x && ed.b == y) || (ed.a == y && ed.b == x))) return false;
  }
  return true;
}

inline bool unbalanced(const SignedGraph& g, const Walk& c) { return negative_count(g, c.edges) % 2 == 1; }

}  // namespace detail

// Structural check of a certificate against the definition of a signed circuit.
inline bool is_valid_certificate(const SignedGraph& g, const SignedCircuitCert& c) {
  using namespace detail;
  auto all = c.edges();
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  if (!std::binary_search(all.begin(), all.end(), c.covered)) return false;
  if (!is_circuit(g, c.circuit1)) return false;
  if (c.kind == CertKind::balanced_circuit) {
    return !unbalanced(g, c.circuit1) && c.circuit2.edges.empty() && c.path.edges.empty();
  }
  if (!is_circuit(g, c.circuit2) || !unbalanced(g, c.circuit1) || !unbalanced(g, c.circuit2)) return false;
  std::set<VertexId> v1(c.circuit1.vertices.begin(), c.circuit1.vertices.end());
  std::set<VertexId> v2(c.circuit2.vertices.begin(), c.circuit2.vertices.end());
  std::vector<VertexId> common;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
  if (c.kind == CertKind::short_barbell) return common.size() == 1 && c.path.edges.empty();
  if (!common.empty() || c.path.edges.empty() || !is_path(g, c.path)) return false;
  for (std::size_t i = 0; i < c.path.vertices.size(); ++i) {
    const VertexId x = c.path.vertices[i];
    const bool first = i == 0, last = i + 1 == c.path.vertices.size();
    if (v1.count(x) != static_cast<std::size_t>(first)) return false;
    if (v2.count(x) != static_cast<std::size_t>(last)) return false;
  }
  return true;
}

namespace detail {

// Rotate a circuit walk so it starts at vertex x.
inline Walk rotate_to(const Walk& c, VertexId x) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), x);
  const auto k = static_cast<std::size_t>(it - c.vertices.begin());
  Walk r;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    r.vertices.push_back(c.vertices[(k + i) % c.vertices.size()]);
    r.edges.push_back(c.edges[(k + i) % c.edges.size()]);
  }
  return r;
}

// Barbells having `c1` as one of their circuits, inside the masked subgraph.
class BarbellFinder {
 public:
  BarbellFinder(const SignedGraph& g, const EdgeMask& mask, const Walk& c1)
      : g_(g), c1_(c1), on_c1_(g.vertex_count(), false), rest_(mask) {
    for (VertexId v : c1.vertices) on_c1_[v] = true;
    for (EdgeId e : c1.edges) rest_[e] = false;
    // W = G - V(C1)
    outside_ = rest_;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!outside_[e]) continue;
      if (on_c1_[g.edge(e).a] || on_c1_[g.edge(e).b]) outside_[e] = false;
    }
    comp_ = components(g, outside_);
  }

  std::optional<SignedCircuitCert> short_barbell() const {
    std::vector<VertexId> xs = c1_.vertices;
    std::sort(xs.begin(), xs.end());
    for (VertexId x : xs) {
      // A negative loop at x.
      for (const auto& h : g_.half_edges(x)) {
        const Edge& ed = g_.edge(h.edge);
        if (rest_[h.edge] && ed.is_loop() && !ed.is_positive() && h.end == End::a) {
          return make_short(x, Walk{{x}, {h.edge}});
        }
      }
      // x -> w1 ... w2 -> x through one component of W, odd overall.
      std::vector<EdgeId> attach;
      for (const auto& h : g_.half_edges(x)) {
        const Edge& ed = g_.edge(h.edge);
        if (!rest_[h.edge] || ed.is_loop() || on_c1_[ed.other(x)]) continue;
        attach.push_back(h.edge);
      }
      std::sort(attach.begin(), attach.end());
      for (std::size_t i = 0; i < attach.size(); ++i) {
        for (std::size_t j = i + 1; j < attach.size(); ++j) {
          const EdgeId e1 = attach[i], e2 = attach[j];
          const VertexId w1 = g_.edge(e1).other(x), w2 = g_.edge(e2).other(x);
          if (comp_.of[w1] != comp_.of[w2]) continue;
          const Sign want = -(g_.sign(e1) * g_.sign(e2));
          std::optional<Walk> found;
          if (w1 == w2) {
            if (want == Sign::positive) found = Walk{{w1}, {}};
          } else {
            std::vector<bool> blocked(g_.vertex_count(), false);
            for (VertexId v = 0; v < g_.vertex_count(); ++v) blocked[v] = comp_.of[v] != comp_.of[w1];
            SignedPathSearch search(g_, outside_, blocked);
            search.run(w1, w2, want, true, [&](const Walk& p) {
              found = p;
              return true;
            });
          }
          if (!found) continue;
          Walk c2{{x}, {e1}};
          for (std::size_t k = 0; k + 1 < found->vertices.size(); ++k) {
            c2.vertices.push_back(found->vertices[k]);
            c2.edges.push_back(found->edges[k]);
          }
          c2.vertices.push_back(w2);
          c2.edges.push_back(e2);
          return make_short(x, c2);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<SignedCircuitCert> long_barbell() const {
    // Unbalanced components of W that receive an edge from C1.
    std::vector<bool> adjacent(comp_.count, false);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!rest_[e]) continue;
      const Edge& ed = g_.edge(e);
      if (on_c1_[ed.a] != on_c1_[ed.b]) adjacent[comp_.of[on_c1_[ed.a] ? ed.b : ed.a]] = true;
    }
    for (int k = 0; k < comp_.count; ++k) {
      if (!adjacent[k]) continue;
      EdgeMask inside(g_.edge_count(), false);
      for (EdgeId e = 0; e < g_.edge_count(); ++e)
        inside[e] = outside_[e] && comp_.of[g_.edge(e).a] == k;
      auto c2 = find_unbalanced_circuit(g_, inside);
      if (!c2) continue;
      EdgeMask reach = inside;
      for (EdgeId e = 0; e < g_.edge_count(); ++e) {
        const Edge& ed = g_.edge(e);
        if (rest_[e] && on_c1_[ed.a] != on_c1_[ed.b] && comp_.of[on_c1_[ed.a] ? ed.b : ed.a] == k) {
          reach[e] = true;
        }
      }
      std::vector<bool> is_t(g_.vertex_count(), false);
      for (VertexId v : c2->vertices) is_t[v] = true;
      auto p = shortest_path(g_, reach, c1_.vertices, is_t);
      if (!p) continue;
      SignedCircuitCert cert;
      cert.kind = CertKind::long_barbell;
      cert.circuit1 = rotate_to(c1_, p->vertices.front());
      cert.circuit2 = rotate_to(*c2, p->vertices.back());
      cert.path = *p;
      return cert;
    }
    return std::nullopt;
  }

 private:
  SignedCircuitCert make_short(VertexId x, const Walk& c2) const {
    SignedCircuitCert cert;
    cert.kind = CertKind::short_barbell;
    cert.circuit1 = rotate_to(c1_, x);
    cert.circuit2 = c2;
    return cert;
  }

  const SignedGraph& g_;
  Walk c1_;
  std::vector<bool> on_c1_;
  EdgeMask rest_;     // masked edges minus E(C1)
  EdgeMask outside_;  // edges of W = G - V(C1)
  Components comp_;
};

// Long barbell whose connector uses the non-loop edge e, exhaustively.
inline std::optional<SignedCircuitCert> barbell_via_connector(const SignedGraph& g, const EdgeMask& mask,
                                                              EdgeId e) {
  const Edge& ed = g.edge(e);
  EdgeMask without = mask;
  without[e] = false;
  if (bridges(g, mask)[e]) {
    auto comp = components(g, without);
    auto side = [&](VertexId root) {
      EdgeMask m(g.edge_count(), false);
      for (EdgeId f = 0; f < g.edge_count(); ++f) m[f] = without[f] && comp.of[g.edge(f).a] == comp.of[root];
      return m;
    };
    EdgeMask su = side(ed.a), sv = side(ed.b);
    auto c1 = find_unbalanced_circuit(g, su);
    auto c2 = find_unbalanced_circuit(g, sv);
    if (!c1 || !c2) return std::nullopt;
    std::vector<bool> is_u(g.vertex_count(), false), is_v(g.vertex_count(), false);
    is_u[ed.a] = true;
    is_v[ed.b] = true;
    auto p1 = shortest_path(g, su, c1->vertices, is_u);
    std::vector<bool> on_c2(g.vertex_count(), false);
    for (VertexId v : c2->vertices) on_c2[v] = true;
    auto p2 = shortest_path(g, sv, {ed.b}, on_c2);
    if (!p1 || !p2) return std::nullopt;
    SignedCircuitCert cert;
    cert.kind = CertKind::long_barbell;
    cert.path = *p1;
    cert.path.edges.push_back(e);
    for (std::size_t i = 0; i < p2->edges.size(); ++i) {
      cert.path.vertices.push_back(p2->vertices[i]);
      cert.path.edges.push_back(p2->edges[i]);
    }
    cert.path.vertices.push_back(p2->vertices.back());
    cert.circuit1 = rotate_to(*c1, cert.path.vertices.front());
    cert.circuit2 = rotate_to(*c2, cert.path.vertices.back());
    return cert;
  }
  // Non-bridge: both circuits avoid e. Exhaustive over pairs of unbalanced
  // circuits of G - e, at desk scale only.
  if (is_balanced(g, without)) return std::nullopt;
  std::vector<Walk> unbalanced_circuits;
  for (auto& c : enumerate_circuits(g, without))
    if (unbalanced(g, c)) unbalanced_circuits.push_back(std::move(c));
  for (std::size_t i = 0; i < unbalanced_circuits.size(); ++i) {
    for (std::size_t j = 0; j < unbalanced_circuits.size(); ++j) {
      if (i == j) continue;
      const Walk& c1 = unbalanced_circuits[i];
      const Walk& c2 = unbalanced_circuits[j];
      std::vector<bool> on1(g.vertex_count(), false), on2(g.vertex_count(), false);
      for (VertexId v : c1.vertices) on1[v] = true;
      bool disjoint = true;
      for (VertexId v : c2.vertices) {
        on2[v] = true;
        disjoint = disjoint && !on1[v];
      }
      if (!disjoint || on2[ed.a] || on1[ed.b]) continue;
      // Paths ed.a -> C1 (simple, avoiding C2 and ed.b); then ed.b -> C2.
      std::optional<SignedCircuitCert> found;
      std::vector<VertexId> trail{ed.a};
      std::vector<EdgeId> trail_edges;
      std::vector<bool> used(g.vertex_count(), false);
      used[ed.a] = true;
      std::function<bool(VertexId)> dfs = [&](VertexId x) -> bool {
        if (on1[x]) {
          std::vector<bool> blocked(g.vertex_count(), false);
          for (VertexId v = 0; v < g.vertex_count(); ++v) blocked[v] = used[v] || on1[v];
          auto p2 = shortest_path(g, without, {ed.b}, on2, blocked);
          if (!p2) return false;
          SignedCircuitCert cert;
          cert.kind = CertKind::long_barbell;
          for (std::size_t k = trail.size(); k-- > 0;) cert.path.vertices.push_back(trail[k]);
          for (std::size_t k = trail_edges.size(); k-- > 0;) cert.path.edges.push_back(trail_edges[k]);
          cert.path.edges.push_back(e);
          for (std::size_t k = 0; k < p2->edges.size(); ++k) {
            cert.path.vertices.push_back(p2->vertices[k]);
            cert.path.edges.push_back(p2->edges[k]);
          }
          cert.path.vertices.push_back(p2->vertices.back());
          cert.circuit1 = rotate_to(c1, cert.path.vertices.front());
          cert.circuit2 = rotate_to(c2, cert.path.vertices.back());
          found = cert;
          return true;
        }
        for (const auto& h : g.half_edges(x)) {
          if (!without[h.edge] || g.edge(h.edge).is_loop()) continue;
          VertexId y = g.edge(h.edge).other(x);
          if (used[y] || on2[y] || y == ed.b) continue;
          used[y] = true;
          trail.push_back(y);
          trail_edges.push_back(h.edge);
          if (dfs(y)) return true;
          trail.pop_back();
          trail_edges.pop_back();
          used[y] = false;
        }
        return false;
      };
      if (dfs(ed.a) && found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// A signed circuit containing e, or nothing. Balanced circuits are tried
// first, then short barbells, then long barbells.
inline std::optional<SignedCircuitCert> signed_circuit_through(const SignedGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  const EdgeMask all = full_mask(g);
  std::optional<SignedCircuitCert> out;

  detail::for_each_circuit_through(g, all, e, Sign::positive, true, [&](const Walk& c) {
    out = SignedCircuitCert{CertKind::balanced_circuit, c, {}, {}, e};
    return true;
  });
  if (out) return out;

  // Barbells with e on one of the circuits. Every such circuit is unbalanced
  // and the other circuit avoids e, so G - e must be unbalanced.
  EdgeMask without = all;
  without[e] = false;
  const bool rest_unbalanced = !is_balanced(g, without);
  if (rest_unbalanced) {
    for (bool want_short : {true, false}) {
      detail::for_each_circuit_through(g, all, e, Sign::negative, false, [&](const Walk& c1) {
        detail::BarbellFinder finder(g, all, c1);
        auto cert = want_short ? finder.short_barbell() : finder.long_barbell();
        if (cert) out = std::move(cert);
        return out.has_value();
      });
      if (out) break;
    }
  }
  if (!out && !g.edge(e).is_loop()) out = detail::barbell_via_connector(g, all, e);
  if (out) out->covered = e;
  return out;
}

enum class AdmissibilityMethod { circuit_cover, deletion, cross_check };

namespace detail {

inline bool admissible_by_circuit_cover(const SignedGraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!signed_circuit_through(g, e)) return false;
  return true;
}

// Per component: a balanced component must be bridgeless; an unbalanced one
// must leave no balanced component behind when any single edge is deleted.
inline bool admissible_by_deletion(const SignedGraph& g) {
  const EdgeMask all = full_mask(g);
  auto comp = components(g);
  auto bridge = bridges(g, all);
  std::vector<bool> comp_balanced(comp.count, true);
  for (int k = 0; k < comp.count; ++k) {
    EdgeMask m(g.edge_count(), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) m[e] = comp.of[g.edge(e).a] == k;
    comp_balanced[k] = is_balanced(g, m);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int k = comp.of[g.edge(e).a];
    if (comp_balanced[k]) {
      if (bridge[e]) return false;
      continue;
    }
    EdgeMask m(g.edge_count(), false);
    for (EdgeId f = 0; f < g.edge_count(); ++f) m[f] = f != e && comp.of[g.edge(f).a] == k;
    auto sub = components(g, m);
    std::vector<bool> touched(sub.count, false);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (comp.of[v] == k) touched[sub.of[v]] = true;
    for (int s = 0; s < sub.count; ++s) {
      if (!touched[s]) continue;
      EdgeMask ms(g.edge_count(), false);
      for (EdgeId f = 0; f < g.edge_count(); ++f) ms[f] = m[f] && sub.of[g.edge(f).a] == s;
      if (is_balanced(g, ms)) return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool is_flow_admissible(const SignedGraph& g,
                               AdmissibilityMethod method = AdmissibilityMethod::cross_check) {
  switch (method) {
    case AdmissibilityMethod::circuit_cover:
      return detail::admissible_by_circuit_cover(g);
    case AdmissibilityMethod::deletion:
      return detail::admissible_by_deletion(g);
    case AdmissibilityMethod::cross_check: {
      const bool a = detail::admissible_by_circuit_cover(g);
      const bool b = detail::admissible_by_deletion(g);
      if (a != b) {
        throw InternalError("admissibility methods disagree (circuit cover " + std::to_string(a) +
                            ", deletion " + std::to_string(b) + ")");
      }
      return a;
    }
  }
  return false;
}

}  // namespace sflow
