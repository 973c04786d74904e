#pragma once

#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sflow/contraction.hpp"
#include "sflow/signed_graph.hpp"

namespace sflow {

using FlowValue = std::int64_t;

// Integer edge labelling relative to the canonical orientation of its graph.
// Reversing both half-edges of an edge and negating its value describes the
// same flow, so a single frame loses nothing.
class IntFlow {
 public:
  IntFlow() = default;
  explicit IntFlow(int edge_count) : values_(edge_count, 0) {}
  explicit IntFlow(std::vector<FlowValue> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  FlowValue operator[](EdgeId e) const { return values_.at(e); }
  FlowValue& operator[](EdgeId e) { return values_.at(e); }
  const std::vector<FlowValue>& values() const { return values_; }

  FlowValue max_magnitude() const {
    FlowValue m = 0;
    for (FlowValue v : values_) m = std::max<FlowValue>(m, v < 0 ? -v : v);
    return m;
  }

  bool operator==(const IntFlow&) const = default;

 private:
  std::vector<FlowValue> values_;
};

struct FlowCheck {
  bool ok = true;
  std::string reason;
  EdgeId edge = -1;
  VertexId vertex = -1;
};

inline void require_matching(const SignedGraph& g, const IntFlow& f) {
  if (f.size() != g.edge_count()) {
    throw InputError("flow has " + std::to_string(f.size()) + " values for " +
                     std::to_string(g.edge_count()) + " edges");
  }
}

// Conservation sum at v: sum over H(v) of tau(h) * f(e_h).
inline FlowValue boundary(const SignedGraph& g, const IntFlow& f, VertexId v) {
  FlowValue s = 0;
  for (const auto& h : g.half_edges(v)) s += g.tau(h) * f[h.edge];
  return s;
}

inline FlowCheck check_int_flow(const SignedGraph& g, const IntFlow& f, FlowValue k,
                                bool require_nowhere_zero) {
  require_matching(g, f);
  if (k < 2) throw InputError("flow bound k must be at least 2");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const FlowValue v = f[e];
    if (require_nowhere_zero && v == 0) {
      return {false, "zero value on edge " + std::to_string(e), e, -1};
    }
    if (v >= k || v <= -k) {
      return {false, "value " + std::to_string(v) + " on edge " + std::to_string(e) +
                         " exceeds bound " + std::to_string(k),
              e, -1};
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (auto s = boundary(g, f, v); s != 0) {
      return {false, "conservation fails at vertex " + std::to_string(v) + " (sum " +
                         std::to_string(s) + ")",
              -1, v};
    }
  }
  return {};
}

inline bool verify_int_flow(const SignedGraph& g, const IntFlow& f, FlowValue k,
                            bool require_nowhere_zero) {
  return check_int_flow(g, f, k, require_nowhere_zero).ok;
}

inline bool conserves(const SignedGraph& g, const IntFlow& f) {
  require_matching(g, f);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (boundary(g, f, v) != 0) return false;
  return true;
}

// c1 * f + c2 * h, edge by edge.
inline IntFlow combine(const IntFlow& f, const IntFlow& h, FlowValue c1, FlowValue c2) {
  if (f.size() != h.size()) throw InputError("combine: flows live on different graphs");
  IntFlow out(f.size());
  for (EdgeId e = 0; e < f.size(); ++e) out[e] = c1 * f[e] + c2 * h[e];
  return out;
}

inline std::vector<EdgeId> support(const IntFlow& f) {
  std::vector<EdgeId> s;
  for (EdgeId e = 0; e < f.size(); ++e)
    if (f[e] != 0) s.push_back(e);
  return s;
}

// Edges with |f(e)| = i.
inline std::vector<EdgeId> level_set(const IntFlow& f, FlowValue i) {
  std::vector<EdgeId> s;
  for (EdgeId e = 0; e < f.size(); ++e)
    if (f[e] == i || f[e] == -i) s.push_back(e);
  return s;
}

// Restriction of a flow on G to G/H, re-expressed in the frame of G/H.
inline IntFlow push_forward(const ContractionRecord& rec, const IntFlow& f) {
  require_matching(rec.original, f);
  IntFlow out(static_cast<int>(rec.surviving.size()));
  for (EdgeId e2 = 0; e2 < out.size(); ++e2) {
    const EdgeId e = rec.surviving[e2];
    out[e2] = switch_frame_factor(rec.original, rec.switched, e) * f[e];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group-valued flows over Z2 and Z2 x Z2. Elements are bit pairs: (x, y) is
// stored as 2x + y, so (0,1) = 1, (1,0) = 2, (1,1) = 3 and addition is xor.
// ---------------------------------------------------------------------------

enum class Group : std::uint8_t { z2, z2z2 };

namespace z2z2 {
constexpr std::uint8_t zero = 0;
constexpr std::uint8_t e01 = 1;
constexpr std::uint8_t e10 = 2;
constexpr std::uint8_t e11 = 3;

inline std::string name(std::uint8_t x) {
  static const char* names[] = {"(0,0)", "(0,1)", "(1,0)", "(1,1)"};
  return names[x & 3];
}
}  // namespace z2z2

struct GroupFlow {
  Group group = Group::z2z2;
  std::vector<std::uint8_t> values;

  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const GroupFlow&) const = default;
};

// Orientation is immaterial in 2-torsion groups; a loop adds its value twice.
inline bool verify_group_flow(const SignedGraph& g, const GroupFlow& gf, bool require_nowhere_zero) {
  if (gf.size() != g.edge_count()) throw InputError("group flow does not match graph");
  const std::uint8_t limit = gf.group == Group::z2 ? 1 : 3;
  for (auto x : gf.values) {
    if (x > limit) return false;
    if (require_nowhere_zero && x == 0) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::uint8_t s = 0;
    for (const auto& h : g.half_edges(v)) s ^= gf.values[h.edge];
    if (s != 0) return false;
  }
  return true;
}

inline GroupFlow push_forward(const ContractionRecord& rec, const GroupFlow& gf) {
  if (gf.size() != rec.original.edge_count()) throw InputError("group flow does not match record");
  GroupFlow out{gf.group, {}};
  for (EdgeId e : rec.surviving) out.values.push_back(gf.values[e]);
  return out;
}

// Integer value -> bit pair (|x| mod 2, floor(|x|/2) mod 2).
inline std::uint8_t parity_pair(FlowValue x) {
  const FlowValue m = x < 0 ? -x : x;
  return static_cast<std::uint8_t>(((m & 1) << 1) | ((m >> 1) & 1));
}

// Diagnostic: every edge's parity pair equals the group value.
inline bool group_to_int_projection_check(const GroupFlow& gf, const IntFlow& f) {
  if (gf.group != Group::z2z2 || gf.size() != f.size()) {
    throw InputError("projection check: flows live on different graphs");
  }
  for (EdgeId e = 0; e < f.size(); ++e)
    if (parity_pair(f[e]) != gf.values[e]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Flow file format
//
//   flow k=<k>
//   f <edge-id> <value>
//   o <edge-id> <tauA> <tauB>      optional orientation of that edge
// ---------------------------------------------------------------------------

struct FlowFile {
  FlowValue k = 0;
  IntFlow flow;
};

inline void write_flow(std::ostream& out, const SignedGraph& g, const IntFlow& f, FlowValue k,
                       bool with_orientation = true) {
  require_matching(g, f);
  out << "flow k=" << k << '\n';
  for (EdgeId e = 0; e < f.size(); ++e) out << "f " << e << ' ' << f[e] << '\n';
  if (with_orientation) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      out << "o " << e << ' ' << g.tau({e, End::a}) << ' ' << g.tau({e, End::b}) << '\n';
    }
  }
}

// Values given under a mirrored orientation of an edge are negated into the
// canonical frame.
inline FlowFile read_flow(std::istream& in, const SignedGraph& g) {
  FlowFile ff;
  ff.flow = IntFlow(g.edge_count());
  std::vector<bool> seen(g.edge_count(), false);
  std::vector<int> mirror(g.edge_count(), 1);
  bool header = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("flow line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "flow") {
      std::string kv;
      if (header) fail("duplicate header");
      if (!(ls >> kv) || kv.rfind("k=", 0) != 0) fail("expected 'flow k=<k>'");
      try {
        ff.k = std::stoll(kv.substr(2));
      } catch (const std::exception&) {
        fail("malformed k");
      }
      header = true;
    } else if (tag == "f") {
      long long e = -1, v = 0;
      if (!(ls >> e >> v)) fail("expected 'f <edge-id> <value>'");
      if (e < 0 || e >= g.edge_count()) fail("edge id out of range");
      if (seen[e]) fail("duplicate value for edge " + std::to_string(e));
      seen[e] = true;
      ff.flow[static_cast<EdgeId>(e)] = v;
    } else if (tag == "o") {
      long long e = -1;
      int ta = 0, tb = 0;
      if (!(ls >> e >> ta >> tb)) fail("expected 'o <edge-id> <tauA> <tauB>'");
      if (e < 0 || e >= g.edge_count()) fail("edge id out of range");
      if ((ta != 1 && ta != -1) || (tb != 1 && tb != -1)) fail("orientation entries must be +1 or -1");
      if (ta * tb != -to_int(g.sign(static_cast<EdgeId>(e)))) fail("orientation violates tauA*tauB = -sign");
      mirror[e] = ta == g.tau({static_cast<EdgeId>(e), End::a}) ? 1 : -1;
    } else {
      fail("unknown directive '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!header) throw InputError("flow: missing 'flow k=<k>' header");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!seen[e]) throw InputError("flow: no value for edge " + std::to_string(e));
    ff.flow[e] *= mirror[e];
  }
  return ff;
}

}  // namespace sflow
