#pragma once

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sflow/circuits.hpp"
#include "sflow/contraction.hpp"
#include "sflow/flow.hpp"
#include "sflow/lemmas.hpp"
#include "sflow/search.hpp"

namespace sflow {

// Color indices 0, 1, 2 are printed as R, B, Y.
inline char color_name(int c) { return "RBY"[c]; }

struct ParityChoice {
  int r = 0, b = 1, y = 2;       // input colors playing R, B, Y
  std::array<int, 3> parity{};   // negative-edge count mod 2 per input color
};

// Pick two color classes whose negative-edge counts have the same parity:
// the first such pair among (0,1), (0,2), (1,2).
inline ParityChoice classify_parity(const SignedGraph& g, const EdgeColoring& coloring) {
  if (!is_proper_coloring(g, coloring)) throw InputError("classify_parity: coloring is not proper");
  ParityChoice p;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.sign(e) == Sign::negative) p.parity[coloring[e]] ^= 1;
  for (auto [x, y] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    if (p.parity[x] == p.parity[y]) {
      p.r = x;
      p.b = y;
      p.y = 3 - x - y;
      return p;
    }
  }
  throw InternalError("classify_parity: no pair of equal parity");
}

struct CubicCaseTranscript {
  ParityChoice choice;
  std::vector<std::string> path;  // e.g. {"2.3", "1.2", "1.1"}
  std::vector<std::pair<std::string, std::vector<EdgeId>>> circuits;  // named auxiliary circuits
  std::vector<std::pair<std::string, IntFlow>> flows;                 // f1 ... f7 as produced
  std::vector<std::pair<std::string, FlowValue>> combination;         // name, coefficient

  const std::string& terminal() const { return path.back(); }

  const IntFlow& flow(const std::string& name) const {
    for (const auto& [n, f] : flows)
      if (n == name) return f;
    throw InputError("transcript has no flow named " + name);
  }

  IntFlow recombine(int edge_count) const {
    IntFlow out(edge_count);
    for (const auto& [name, c] : combination) out = combine(out, flow(name), 1, c);
    return out;
  }

  // Largest |value| the terminal case may produce.
  FlowValue bound() const { return terminal() == "2.1" ? 5 : 7; }
};

inline void write_transcript(std::ostream& out, const CubicCaseTranscript& t) {
  auto par = [](int p) { return p ? "odd" : "even"; };
  out << "roles: R=" << color_name(t.choice.r) << " B=" << color_name(t.choice.b)
      << " Y=" << color_name(t.choice.y) << '\n';
  out << "parity:";
  for (int c = 0; c < 3; ++c) out << ' ' << color_name(c) << '=' << par(t.choice.parity[c]);
  out << '\n';
  out << "path:";
  for (const auto& s : t.path) out << ' ' << s;
  out << '\n';
  for (const auto& [name, es] : t.circuits) {
    out << "circuit " << name << ':';
    for (EdgeId e : es) out << ' ' << e;
    out << '\n';
  }
  for (const auto& [name, f] : t.flows) {
    out << "flow " << name << ':';
    for (FlowValue v : f.values()) out << ' ' << v;
    out << '\n';
  }
  out << "combination:";
  for (const auto& [name, c] : t.combination) out << ' ' << c << '*' << name;
  out << '\n';
}

namespace detail {

class CubicEightFlow {
 public:
  CubicEightFlow(const SignedGraph& g, EdgeColoring col, CubicCaseTranscript& t)
      : g_(g), col_(std::move(col)), t_(t) {}

  IntFlow run() {
    const bool rb_unbalanced = unbalanced_circuits(0, 1).size() > 0;
    return rb_unbalanced ? case1() : case2();
  }

 private:
  EdgeMask pair_mask(int x, int y) const {
    EdgeMask m(g_.edge_count(), false);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) m[e] = col_[e] == x || col_[e] == y;
    return m;
  }

  int parity(int c) const {
    int p = 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) p ^= col_[e] == c && g_.sign(e) == Sign::negative;
    return p;
  }

  std::vector<Walk> circuits(int x, int y) const { return circuits_of_two_regular(g_, pair_mask(x, y)); }

  // Unbalanced circuits of the 2-factor xy, least sorted edge sequence first.
  std::vector<Walk> unbalanced_circuits(int x, int y) const {
    std::vector<Walk> out;
    for (auto& c : circuits(x, y))
      if (negative_count(g_, c.edges) % 2 == 1) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) { return a.sorted_edges() < b.sorted_edges(); });
    return out;
  }

  void swap_on(const Walk& c, int x, int y) {
    for (EdgeId e : c.edges) col_[e] = col_[e] == x ? y : x;
  }

  IntFlow lift(int x, int y) const {
    auto f = z2_to_3_lift(g_, pair_mask(x, y));
    ensure(f.has_value(), "lift of a 2-factor with evenly many unbalanced circuits failed");
    return *f;
  }

  IntFlow two_flow(int x, int y) const {
    auto f = eulerian_2_flow(g_, pair_mask(x, y));
    ensure(f.has_value(), "2-flow on a balanced 2-factor failed");
    return *f;
  }

  IntFlow finish(std::vector<std::pair<std::string, FlowValue>> comb) {
    t_.combination = std::move(comb);
    return t_.recombine(g_.edge_count());
  }

  // Colors 0, 1 have the same parity and 01 has an unbalanced circuit.
  IntFlow case1() {
    IntFlow f1 = lift(0, 1);
    if (parity(2) != parity(0)) {
      t_.path.push_back("1.2");
      auto c = unbalanced_circuits(0, 1).front();
      t_.circuits.push_back({"C", c.edges});
      swap_on(c, 0, 1);
    }
    t_.path.push_back("1.1");
    IntFlow f2 = lift(0, 2);
    t_.flows.push_back({"f1", f1});
    t_.flows.push_back({"f2", f2});
    return finish({{"f1", 1}, {"f2", 3}});
  }

  IntFlow case2() {
    IntFlow f3 = two_flow(0, 1);
    auto odd = unbalanced_circuits(0, 2);
    if (odd.size() % 2 == 0) {
      t_.path.push_back("2.1");
      IntFlow f2 = lift(0, 2);
      t_.flows.push_back({"f3", f3});
      t_.flows.push_back({"f2", f2});
      return finish({{"f3", 3}, {"f2", 1}});
    }
    if (odd.size() == 1) return case22(f3, odd.front());
    return case23(f3, odd[0], odd[1]);
  }

  IntFlow case22(const IntFlow& f3, const Walk& c1) {
    t_.circuits.push_back({"C1", c1.edges});
    std::vector<Walk> balanced;
    std::vector<EdgeId> contracted;
    for (auto& c : circuits(0, 2)) {
      if (negative_count(g_, c.edges) % 2 == 1) continue;
      contracted.insert(contracted.end(), c.edges.begin(), c.edges.end());
      balanced.push_back(std::move(c));
    }
    auto [h, rec] = contract(g_, contracted);
    Walk c1h;
    for (VertexId v : c1.vertices) c1h.vertices.push_back(rec.vertex_map[v]);
    for (EdgeId e : c1.edges) c1h.edges.push_back(rec.edge_map[e]);
    EdgeMask rest = full_mask(h);
    for (EdgeId e : c1h.edges) rest[e] = false;

    IntFlow fh;
    std::string name;
    if (!is_balanced(h, rest)) {
      t_.path.push_back("2.2.1");
      BarbellFinder finder(h, full_mask(h), c1h);
      auto q = finder.long_barbell();
      ensure(q.has_value(), "no long barbell through C1 in the contracted graph");
      q->covered = c1h.edges.front();
      std::vector<EdgeId> qe;
      for (EdgeId e : q->circuit2.edges) qe.push_back(rec.surviving[e]);
      t_.circuits.push_back({"C'", qe});
      fh = barbell_3_flow(h, *q);
      name = "f4";
    } else {
      t_.path.push_back("2.2.2");
      fh = hc_cover_4_flow(h, c1h);
      name = "f5";
    }
    IntFlow f = extend_flow_over_circuits(rec, balanced, fh, 4);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      ensure(col_[e] == 1 || f[e] != 0, "extended flow misses an edge of RY");
      ensure(f[e] < 4 && f[e] > -4, "extended flow exceeds 3");
    }
    t_.flows.push_back({"f3", f3});
    t_.flows.push_back({name, f});
    return finish({{"f3", 1}, {name, 2}});
  }

  IntFlow case23(const IntFlow& f3, const Walk& c1, const Walk& c2) {
    t_.path.push_back("2.3");
    t_.circuits.push_back({"C1", c1.edges});
    t_.circuits.push_back({"C2", c2.edges});
    const EdgeColoring base = col_;
    std::vector<std::pair<std::string, IntFlow>> found;
    for (const Walk* c : {&c1, &c2}) {
      col_ = base;
      swap_on(*c, 0, 2);  // R' = R + C, Y' = Y + C
      if (!unbalanced_circuits(1, 2).empty()) {
        // Back to Case 1 with R := B, B := Y', Y := R'.
        EdgeColoring re(col_.size());
        for (EdgeId e = 0; e < g_.edge_count(); ++e) re[e] = col_[e] == 1 ? 0 : col_[e] == 2 ? 1 : 2;
        col_ = std::move(re);
        return case1();
      }
      found.push_back({c == &c1 ? "f6" : "f7", two_flow(1, 2)});
    }
    col_ = base;
    t_.flows.push_back({"f3", f3});
    t_.flows.insert(t_.flows.end(), found.begin(), found.end());
    return finish({{"f3", 1}, {"f6", 2}, {"f7", 4}});
  }

  const SignedGraph& g_;
  EdgeColoring col_;  // already renamed so that 0, 1, 2 play R, B, Y
  CubicCaseTranscript& t_;
};

}  // namespace detail

// Nowhere-zero 8-flow of a flow-admissible cubic signed graph from a proper
// 3-edge-coloring, following the case analysis on the color classes.
inline std::pair<IntFlow, CubicCaseTranscript> cubic_8_flow(const SignedGraph& g, const EdgeColoring& coloring) {
  require_cubic(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).is_loop()) throw InputError("cubic_8_flow: graph has a loop");
  if (!is_proper_coloring(g, coloring)) throw InputError("cubic_8_flow: coloring is not proper");
  if (!is_flow_admissible(g, AdmissibilityMethod::deletion)) throw HypothesisError("graph is not flow-admissible");

  CubicCaseTranscript t;
  t.choice = classify_parity(g, coloring);
  EdgeColoring renamed(coloring.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int c = coloring[e];
    renamed[e] = c == t.choice.r ? 0 : c == t.choice.b ? 1 : 2;
  }
  detail::CubicEightFlow run(g, std::move(renamed), t);
  IntFlow f = run.run();
  ensure(f == t.recombine(g.edge_count()), "transcript does not reproduce the flow");
  auto check = check_int_flow(g, f, 8, true);
  ensure(check.ok, "cubic 8-flow does not verify: " + check.reason);
  ensure(f.max_magnitude() <= t.bound(), "cubic 8-flow exceeds the bound of case " + t.terminal());
  return {f, t};
}

}  // namespace sflow
