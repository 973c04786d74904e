#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sflow/flow.hpp"
#include "sflow/graph_algorithms.hpp"

namespace sflow {

struct SearchBudget {
  std::uint64_t node_limit = 200'000'000;
  double time_limit_seconds = 120.0;
  bool deterministic = true;  // branch order never depends on timing or entropy
};

enum class SearchOutcome { found, absent, budget };

inline std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found:
      return "found";
    case SearchOutcome::absent:
      return "absent";
    case SearchOutcome::budget:
      return "budget";
  }
  return "?";
}

template <class T>
struct SearchResult {
  SearchOutcome outcome = SearchOutcome::absent;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const { return outcome == SearchOutcome::found; }
};

// Allowed values per edge plus optional side conditions.
struct FlowConstraints {
  std::vector<std::vector<FlowValue>> domains;  // per edge, in branch order
  std::vector<int> support_degree_cap;          // per vertex, -1 for none; empty for none
  std::vector<EdgeId> edge_order;               // empty: branch at the touched vertex with fewest open edges
};

// Values +-1..+-(k-1) by ascending magnitude, positive first.
inline std::vector<FlowValue> nowhere_zero_domain(FlowValue k) {
  std::vector<FlowValue> d;
  for (FlowValue x = 1; x < k; ++x) {
    d.push_back(x);
    d.push_back(-x);
  }
  return d;
}

namespace detail {

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // False once the node or time limit is exceeded.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) exhausted_ = true;
    if ((nodes_ & 1023) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.time_limit_seconds) exhausted_ = true;
    }
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class FlowSearch {
 public:
  FlowSearch(const SignedGraph& g, const FlowConstraints& c, const SearchBudget& budget)
      : g_(g), c_(c), clock_(budget) {
    const int n = g.vertex_count(), m = g.edge_count();
    value_.assign(m, 0);
    assigned_.assign(m, false);
    sum_.assign(n, 0);
    lo_.assign(n, 0);
    hi_.assign(n, 0);
    open_.assign(n, 0);
    supdeg_.assign(n, 0);
    terms_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      const int ca = g.coefficient(e, ed.a);
      if (ca != 0) terms_[e].push_back({ed.a, ca});
      if (!ed.is_loop()) {
        const int cb = g.coefficient(e, ed.b);
        if (cb != 0) terms_[e].push_back({ed.b, cb});
      }
      for (auto [v, coef] : terms_[e]) {
        auto [mn, mx] = span(e, coef);
        lo_[v] += mn;
        hi_[v] += mx;
        ++open_[v];
      }
    }
    order_ = c.edge_order;
    touched_.assign(n, 0);
    stamp_.assign(n, 0);
    symmetric_ = true;
    for (const auto& d : c.domains) {
      for (FlowValue x : d)
        if (std::find(d.begin(), d.end(), -x) == d.end()) symmetric_ = false;
    }
  }

  SearchResult<IntFlow> run() {
    SearchResult<IntFlow> r;
    bool ok = true;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) ok = ok && feasible(v);
    const bool found = ok && dfs(0, true);
    r.nodes = clock_.nodes();
    if (found) {
      r.outcome = SearchOutcome::found;
      r.value = IntFlow(value_);
    } else {
      r.outcome = clock_.exhausted() ? SearchOutcome::budget : SearchOutcome::absent;
    }
    return r;
  }

 private:
  struct Term {
    VertexId v;
    int coef;
  };

  std::pair<FlowValue, FlowValue> span(EdgeId e, int coef) const {
    FlowValue mn = 0, mx = 0;
    bool first = true;
    for (FlowValue x : c_.domains[e]) {
      const FlowValue t = coef * x;
      if (first || t < mn) mn = t;
      if (first || t > mx) mx = t;
      first = false;
    }
    return {mn, mx};
  }

  bool feasible(VertexId v) const {
    if (sum_[v] + lo_[v] > 0 || sum_[v] + hi_[v] < 0) return false;
    if (open_[v] == 0 && sum_[v] != 0) return false;
    return true;
  }

  bool capped(VertexId v) const {
    return !c_.support_degree_cap.empty() && c_.support_degree_cap[v] >= 0 &&
           supdeg_[v] > c_.support_degree_cap[v];
  }

  bool assign(EdgeId e, FlowValue x) {
    assigned_[e] = true;
    value_[e] = x;
    bool ok = true;
    for (auto [v, coef] : terms_[e]) {
      auto [mn, mx] = span(e, coef);
      lo_[v] -= mn;
      hi_[v] -= mx;
      --open_[v];
      sum_[v] += coef * x;
    }
    if (x != 0) {
      ++supdeg_[g_.edge(e).a];
      ++supdeg_[g_.edge(e).b];
    }
    for (VertexId v : {g_.edge(e).a, g_.edge(e).b})
      if (touched_[v]++ == 0) stamp_[v] = ++clock_stamp_;
    for (auto [v, coef] : terms_[e]) ok = ok && feasible(v);
    ok = ok && !capped(g_.edge(e).a) && !capped(g_.edge(e).b);
    return ok;
  }

  void unassign(EdgeId e) {
    const FlowValue x = value_[e];
    for (auto [v, coef] : terms_[e]) {
      auto [mn, mx] = span(e, coef);
      lo_[v] += mn;
      hi_[v] += mx;
      ++open_[v];
      sum_[v] -= coef * x;
    }
    if (x != 0) {
      --supdeg_[g_.edge(e).a];
      --supdeg_[g_.edge(e).b];
    }
    --touched_[g_.edge(e).a];
    --touched_[g_.edge(e).b];
    assigned_[e] = false;
    value_[e] = 0;
  }

  struct Forced {
    EdgeId edge;
    FlowValue value;
    bool possible;
  };

  // An unassigned edge that is the last open term at some vertex, with the
  // value conservation forces on it.
  std::optional<Forced> forced() const {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (open_[v] != 1) continue;
      for (const auto& h : g_.half_edges(v)) {
        const EdgeId e = h.edge;
        if (assigned_[e]) continue;
        int coef = 0;
        for (auto t : terms_[e])
          if (t.v == v) coef = t.coef;
        if (coef == 0) continue;
        const FlowValue need = -sum_[v];
        if (need % coef != 0) return Forced{e, 0, false};
        return Forced{e, need / coef, true};
      }
    }
    return std::nullopt;
  }

  EdgeId next_edge(std::size_t& pos) const {
    if (!order_.empty()) {
      while (pos < order_.size() && assigned_[order_[pos]]) ++pos;
      return pos == order_.size() ? -1 : order_[pos];
    }
    VertexId best = -1;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (touched_[v] == 0 || open_[v] == 0) continue;
      if (best < 0 || std::pair(open_[v], stamp_[v]) < std::pair(open_[best], stamp_[best])) best = v;
    }
    if (best >= 0) {
      for (const auto& h : g_.half_edges(best))
        if (!assigned_[h.edge]) return h.edge;
    }
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (!assigned_[e]) return e;
    return -1;
  }

  // Summing conservation over a connected region of unassigned edges cancels
  // every positive edge inside it; each negative edge adds 2f(e).
  bool regions_feasible() const {
    const int n = g_.vertex_count();
    parent_.resize(n);
    for (VertexId v = 0; v < n; ++v) parent_[v] = v;
    auto find = [&](VertexId v) {
      while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
      return v;
    };
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (!assigned_[e]) parent_[find(g_.edge(e).a)] = find(g_.edge(e).b);
    region_sum_.assign(n, 0);
    region_lo_.assign(n, 0);
    region_hi_.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) region_sum_[find(v)] += sum_[v];
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (assigned_[e]) continue;
      int t = 0;
      for (auto term : terms_[e]) t += term.coef;
      if (t == 0) continue;
      auto [mn, mx] = span(e, t);
      const VertexId r = find(g_.edge(e).a);
      region_lo_[r] += mn;
      region_hi_[r] += mx;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (find(v) != v) continue;
      const FlowValue s = region_sum_[v];
      if (s % 2 != 0 || s + region_lo_[v] > 0 || s + region_hi_[v] < 0) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos, bool first_branch) {
    if (!clock_.tick()) return false;
    if (!regions_feasible()) return false;
    if (auto f = forced()) {
      auto [e, x, possible] = *f;
      const auto& d = c_.domains[e];
      if (!possible || std::find(d.begin(), d.end(), x) == d.end()) return false;
      bool ok = assign(e, x) && dfs(pos, first_branch);
      if (!ok) unassign(e);
      return ok;
    }
    const EdgeId e = next_edge(pos);
    if (e < 0) return true;  // every vertex has been checked on assignment
    for (FlowValue x : c_.domains[e]) {
      if (first_branch && symmetric_ && x < 0) continue;
      const bool ok = assign(e, x) && dfs(pos + 1, false);
      if (ok) return true;
      unassign(e);
      if (clock_.exhausted()) return false;
    }
    return false;
  }

  const SignedGraph& g_;
  const FlowConstraints& c_;
  BudgetClock clock_;
  std::vector<std::vector<Term>> terms_;
  std::vector<FlowValue> value_;
  std::vector<bool> assigned_;
  std::vector<FlowValue> sum_, lo_, hi_;
  std::vector<int> open_, supdeg_, touched_;
  std::vector<std::uint64_t> stamp_;  // when each touched vertex was first touched
  std::uint64_t clock_stamp_ = 0;
  std::vector<EdgeId> order_;
  bool symmetric_ = true;
  mutable std::vector<VertexId> parent_;
  mutable std::vector<FlowValue> region_sum_, region_lo_, region_hi_;
};

}  // namespace detail

// Exhaustive search for a flow whose value on each edge is drawn from its
// domain. With no domains given, every edge gets +-1..+-(k-1).
inline SearchResult<IntFlow> constrained_flow_search(const SignedGraph& g, FlowConstraints c,
                                                     const SearchBudget& budget = {}) {
  if (c.domains.size() != static_cast<std::size_t>(g.edge_count())) {
    throw InputError("constraints must give a domain for every edge");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c.domains[e].empty()) throw InputError("empty allowed-value set on edge " + std::to_string(e));
  }
  if (!c.support_degree_cap.empty() && c.support_degree_cap.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InputError("support degree caps must cover every vertex");
  }
  detail::FlowSearch s(g, c, budget);
  auto r = s.run();
  if (r.found() && !conserves(g, *r.value)) throw InternalError("flow search returned a non-conserving flow");
  return r;
}

inline SearchResult<IntFlow> nz_k_flow_search(const SignedGraph& g, FlowValue k,
                                              std::optional<std::vector<std::vector<FlowValue>>> allowed = {},
                                              const SearchBudget& budget = {}) {
  if (k < 2) throw InputError("k must be at least 2");
  FlowConstraints c;
  if (allowed) {
    c.domains = *allowed;
  } else {
    c.domains.assign(g.edge_count(), nowhere_zero_domain(k));
  }
  for (auto& d : c.domains)
    for (FlowValue x : d)
      if (x == 0 || x >= k || x <= -k) throw InputError("allowed value " + std::to_string(x) + " outside 1..k-1");
  auto r = constrained_flow_search(g, std::move(c), budget);
  if (r.found() && !verify_int_flow(g, *r.value, k, true)) {
    throw InternalError("flow search returned an invalid flow");
  }
  return r;
}

// Least k <= kmax with a nowhere-zero k-flow.
inline SearchResult<int> flow_number(const SignedGraph& g, int kmax, const SearchBudget& budget = {}) {
  if (kmax < 2) throw InputError("kmax must be at least 2");
  SearchResult<int> out;
  for (int k = 2; k <= kmax; ++k) {
    auto r = nz_k_flow_search(g, k, std::nullopt, budget);
    out.nodes += r.nodes;
    if (r.outcome == SearchOutcome::budget) {
      out.outcome = SearchOutcome::budget;
      return out;
    }
    if (r.found()) {
      out.outcome = SearchOutcome::found;
      out.value = k;
      return out;
    }
  }
  out.outcome = SearchOutcome::absent;
  return out;
}

// Nowhere-zero Z2 x Z2 flow of the underlying graph (signs ignored).
inline SearchResult<GroupFlow> z2z2_nz_flow_search(const SignedGraph& g, const SearchBudget& budget = {}) {
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<std::uint8_t> value(m, 0);
  std::vector<std::uint8_t> acc(n, 0);
  std::vector<int> open(n, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (g.edge(e).is_loop()) {
      value[e] = z2z2::e01;  // a loop adds its value twice
    } else {
      ++open[g.edge(e).a];
      ++open[g.edge(e).b];
    }
  }
  // Edges in BFS order so that forcing kicks in early.
  std::vector<EdgeId> order;
  {
    std::vector<bool> seen(m, false);
    auto forest = bfs_forest(g, full_mask(g));
    std::vector<VertexId> vs(n);
    for (VertexId v = 0; v < n; ++v) vs[v] = v;
    std::stable_sort(vs.begin(), vs.end(), [&](VertexId x, VertexId y) { return forest.depth[x] < forest.depth[y]; });
    for (VertexId v : vs) {
      std::vector<HalfEdge> hs(g.half_edges(v).begin(), g.half_edges(v).end());
      std::sort(hs.begin(), hs.end());
      for (const auto& h : hs) {
        if (seen[h.edge] || g.edge(h.edge).is_loop()) continue;
        seen[h.edge] = true;
        order.push_back(h.edge);
      }
    }
  }
  detail::BudgetClock clock(budget);
  std::vector<bool> assigned(m, false);
  auto set = [&](EdgeId e, std::uint8_t x) {
    const Edge& ed = g.edge(e);
    value[e] = x;
    assigned[e] = true;
    acc[ed.a] ^= x;
    acc[ed.b] ^= x;
    --open[ed.a];
    --open[ed.b];
    return (open[ed.a] > 0 || acc[ed.a] == 0) && (open[ed.b] > 0 || acc[ed.b] == 0);
  };
  auto unset = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    acc[ed.a] ^= value[e];
    acc[ed.b] ^= value[e];
    ++open[ed.a];
    ++open[ed.b];
    value[e] = 0;
    assigned[e] = false;
  };
  std::function<bool(std::size_t, bool)> dfs = [&](std::size_t pos, bool first) -> bool {
    if (!clock.tick()) return false;
    for (VertexId v = 0; v < n; ++v) {
      if (open[v] != 1) continue;
      for (const auto& h : g.half_edges(v)) {
        const EdgeId e = h.edge;
        if (assigned[e] || g.edge(e).is_loop()) continue;
        const std::uint8_t x = acc[v];
        if (x == 0) return false;
        if (set(e, x) && dfs(pos, first)) return true;
        unset(e);
        return false;
      }
    }
    while (pos < order.size() && assigned[order[pos]]) ++pos;
    if (pos == order.size()) return true;
    const EdgeId e = order[pos];
    for (std::uint8_t x = 1; x <= 3; ++x) {
      if (first && x != z2z2::e01) break;  // GL(2,2) acts transitively on nonzero elements
      if (set(e, x) && dfs(pos + 1, false)) return true;
      unset(e);
      if (clock.exhausted()) return false;
    }
    return false;
  };
  SearchResult<GroupFlow> r;
  bool ok = true;
  for (VertexId v = 0; v < n; ++v) ok = ok && (open[v] > 0 || acc[v] == 0);
  const bool found = ok && dfs(0, true);
  r.nodes = clock.nodes();
  if (found) {
    r.outcome = SearchOutcome::found;
    r.value = GroupFlow{Group::z2z2, value};
    if (!verify_group_flow(g, *r.value, true)) throw InternalError("group flow search returned an invalid flow");
  } else {
    r.outcome = clock.exhausted() ? SearchOutcome::budget : SearchOutcome::absent;
  }
  return r;
}

// Colors 0, 1, 2 per edge (R, B, Y).
using EdgeColoring = std::vector<int>;

inline void require_cubic(const SignedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw InputError("graph is not cubic: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)));
    }
  }
}

inline bool is_proper_coloring(const SignedGraph& g, const EdgeColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.edge_count())) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int seen = 0;
    for (const auto& h : g.half_edges(v)) {
      const int col = c[h.edge];
      if (col < 0 || col > 2 || (seen & (1 << col))) return false;
      seen |= 1 << col;
    }
  }
  return true;
}

inline SearchResult<EdgeColoring> three_edge_coloring(const SignedGraph& g, const SearchBudget& budget = {}) {
  require_cubic(g);
  SearchResult<EdgeColoring> r;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) return r;  // absent
  }
  const int n = g.vertex_count(), m = g.edge_count();
  EdgeColoring color(m, -1);
  std::vector<int> used(n, 0);  // bitmask of colors at v
  detail::BudgetClock clock(budget);
  auto set = [&](EdgeId e, int c) {
    const Edge& ed = g.edge(e);
    if ((used[ed.a] | used[ed.b]) & (1 << c)) return false;
    color[e] = c;
    used[ed.a] |= 1 << c;
    used[ed.b] |= 1 << c;
    return true;
  };
  auto unset = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    used[ed.a] &= ~(1 << color[e]);
    used[ed.b] &= ~(1 << color[e]);
    color[e] = -1;
  };
  std::function<bool(EdgeId, bool)> dfs = [&](EdgeId e, bool first) -> bool {
    if (!clock.tick()) return false;
    // Forcing: a vertex with two colored edges fixes the third.
    for (VertexId v = 0; v < n; ++v) {
      if (std::popcount(static_cast<unsigned>(used[v])) != 2) continue;
      for (const auto& h : g.half_edges(v)) {
        if (color[h.edge] != -1) continue;
        const int c = std::countr_zero(static_cast<unsigned>(~used[v] & 7));
        if (set(h.edge, c) && dfs(e, first)) return true;
        if (color[h.edge] == c) unset(h.edge);
        return false;
      }
    }
    while (e < m && color[e] != -1) ++e;
    if (e == m) return true;
    for (int c = 0; c < 3; ++c) {
      if (first && c > 0) break;  // colors are interchangeable
      if (set(e, c)) {
        if (dfs(e + 1, false)) return true;
        unset(e);
      }
      if (clock.exhausted()) return false;
    }
    return false;
  };
  const bool found = dfs(0, true);
  r.nodes = clock.nodes();
  if (found) {
    r.outcome = SearchOutcome::found;
    r.value = color;
    if (!is_proper_coloring(g, color)) throw InternalError("coloring search returned an improper coloring");
  } else {
    r.outcome = clock.exhausted() ? SearchOutcome::budget : SearchOutcome::absent;
  }
  return r;
}

}  // namespace sflow
