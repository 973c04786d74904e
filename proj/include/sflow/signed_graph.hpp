#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sflow/errors.hpp"

namespace sflow {

using VertexId = int;
using EdgeId = int;

enum class Sign : int { negative = -1, positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign x, Sign y) {
  return to_int(x) == to_int(y) ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

enum class End : std::uint8_t { a = 0, b = 1 };

constexpr End opposite(End e) { return e == End::a ? End::b : End::a; }

// One end of an edge. Every edge, loops included, has exactly two.
struct HalfEdge {
  EdgeId edge = 0;
  End end = End::a;

  auto operator<=>(const HalfEdge&) const = default;
};

struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  Sign sign = Sign::positive;

  bool is_loop() const { return a == b; }
  bool is_positive() const { return sign == Sign::positive; }
  VertexId at(End e) const { return e == End::a ? a : b; }
  // The endpoint opposite to `v`; for a loop this is `v` itself.
  VertexId other(VertexId v) const { return v == a ? b : a; }

  bool operator==(const Edge&) const = default;
};

// Signed multigraph. Loops and parallel edges are allowed. Vertex and edge
// ids are dense and assigned in insertion order; they never change once
// assigned, so records can refer to them across derived graphs.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int vertex_count) : incidence_(vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count");
  }

  VertexId add_vertex() {
    incidence_.emplace_back();
    return static_cast<VertexId>(incidence_.size()) - 1;
  }

  EdgeId add_edge(VertexId u, VertexId v, Sign s) {
    check_vertex(u);
    check_vertex(v);
    if (s != Sign::positive && s != Sign::negative) throw InputError("edge sign must be +1 or -1");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, s});
    incidence_[u].push_back(HalfEdge{id, End::a});
    incidence_[v].push_back(HalfEdge{id, End::b});
    return id;
  }

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  const Edge& edge(EdgeId e) const {
    check_edge(e);
    return edges_[e];
  }
  const std::vector<Edge>& edges() const { return edges_; }
  Sign sign(EdgeId e) const { return edge(e).sign; }

  // H(v): a loop at v contributes both of its half-edges.
  std::span<const HalfEdge> half_edges(VertexId v) const {
    check_vertex(v);
    return incidence_[v];
  }
  int degree(VertexId v) const { return static_cast<int>(half_edges(v).size()); }

  VertexId vertex_of(HalfEdge h) const { return edge(h.edge).at(h.end); }

  // Canonical orientation: end A is +1, end B is -sign(e), so that
  // tau(A) * tau(B) = -sign(e).
  int tau(HalfEdge h) const {
    return h.end == End::a ? 1 : -to_int(edge(h.edge).sign);
  }

  // Sum of tau over the half-edges of `e` that sit at `v`. This is the
  // coefficient of the value of `e` in the conservation sum at `v`.
  int coefficient(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    int c = 0;
    if (ed.a == v) c += tau({e, End::a});
    if (ed.b == v) c += tau({e, End::b});
    return c;
  }

  std::vector<Sign> signature() const {
    std::vector<Sign> s;
    s.reserve(edges_.size());
    for (const auto& e : edges_) s.push_back(e.sign);
    return s;
  }

  SignedGraph with_signature(std::span<const Sign> sigma) const {
    if (static_cast<int>(sigma.size()) != edge_count()) {
      throw InputError("signature does not cover every edge");
    }
    SignedGraph g = *this;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] != Sign::positive && sigma[i] != Sign::negative) {
        throw InputError("edge sign must be +1 or -1");
      }
      g.edges_[i].sign = sigma[i];
    }
    return g;
  }

  SignedGraph all_positive() const {
    std::vector<Sign> s(edges_.size(), Sign::positive);
    return with_signature(s);
  }

  int negative_count() const {
    int n = 0;
    for (const auto& e : edges_) n += e.sign == Sign::negative;
    return n;
  }

  bool operator==(const SignedGraph& o) const {
    return edges_ == o.edges_ && vertex_count() == o.vertex_count();
  }

 private:
  void check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  }
  void check_edge(EdgeId e) const {
    if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> incidence_;
};

// Negate the sign of every non-loop edge at v.
inline SignedGraph switch_at(const SignedGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  auto sigma = g.signature();
  for (const auto& h : g.half_edges(v)) {
    if (!g.edge(h.edge).is_loop()) sigma[h.edge] = -sigma[h.edge];
  }
  return g.with_signature(sigma);
}

// Switch at every vertex in `switched` (each switched once).
inline SignedGraph switch_set(const SignedGraph& g, const std::vector<bool>& switched) {
  auto sigma = g.signature();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    if (switched[ed.a] != switched[ed.b]) sigma[e] = -sigma[e];
  }
  return g.with_signature(sigma);
}

// Factor relating canonical flow values across a switch: a flow on `g` with
// value x on e is the flow on switch_set(g, S) with value factor * x.
inline int switch_frame_factor(const SignedGraph& g, const std::vector<bool>& switched, EdgeId e) {
  return switched[g.edge(e).a] ? -1 : 1;
}

// ---------------------------------------------------------------------------
// SGF text format
//
//   v <n>            declare vertices 0..n-1
//   e <u> <v> <+|->  one edge, in id order
//   # ...            comment
// ---------------------------------------------------------------------------

inline SignedGraph read_sgf(std::istream& in) {
  SignedGraph g;
  bool declared = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("sgf line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      long long n = -1;
      if (!(ls >> n) || n < 0) fail("expected a non-negative vertex count");
      if (declared) fail("duplicate vertex declaration");
      if (n > 10'000'000) fail("vertex count too large");
      g = SignedGraph(static_cast<int>(n));
      declared = true;
    } else if (tag == "e") {
      if (!declared) fail("edge before vertex declaration");
      long long u = -1, v = -1;
      std::string s;
      if (!(ls >> u >> v >> s)) fail("expected 'e <u> <v> <+|->'");
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
        fail("vertex out of range");
      }
      if (s != "+" && s != "-") fail("malformed sign '" + s + "'");
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v),
                 s == "+" ? Sign::positive : Sign::negative);
    } else {
      fail("unknown directive '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!declared) throw InputError("sgf: missing vertex declaration");
  return g;
}

inline SignedGraph parse_sgf(const std::string& text) {
  std::istringstream in(text);
  return read_sgf(in);
}

inline void write_sgf(std::ostream& out, const SignedGraph& g) {
  out << "v " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.a << ' ' << e.b << ' ' << (e.is_positive() ? '+' : '-') << '\n';
  }
}

inline std::string to_sgf(const SignedGraph& g) {
  std::ostringstream out;
  write_sgf(out, g);
  return out.str();
}

}  // namespace sflow
