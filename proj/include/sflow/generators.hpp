#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sflow/circuits.hpp"
#include "sflow/errors.hpp"
#include "sflow/graph_algorithms.hpp"
#include "sflow/search.hpp"
#include "sflow/signed_graph.hpp"

namespace sflow {

enum class Family { cubic3ec, hamiltonian, planar_bridgeless, exhaustive_tiny };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::cubic3ec:
      return "cubic3ec";
    case Family::hamiltonian:
      return "hamiltonian";
    case Family::planar_bridgeless:
      return "planar-bridgeless";
    case Family::exhaustive_tiny:
      return "exhaustive-tiny";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  for (Family f : {Family::cubic3ec, Family::hamiltonian, Family::planar_bridgeless, Family::exhaustive_tiny})
    if (to_string(f) == s) return f;
  throw InputError("unknown family '" + s + "'");
}

// For exhaustive-tiny, n is the edge bound and the seed picks one instance
// of the raw enumeration.
struct FamilySpec {
  Family family = Family::cubic3ec;
  int n = 4;
  double p = 0.0;
  std::uint64_t seed = 0;
};

inline void validate(const FamilySpec& s) {
  if (!(s.p >= 0.0 && s.p <= 1.0)) throw InputError("negative-edge probability must lie in [0,1]");
  const std::string n = std::to_string(s.n);
  switch (s.family) {
    case Family::cubic3ec:
      if (s.n % 2 != 0 || s.n < 4 || s.n > 24) throw InputError("cubic3ec needs even n in [4,24], got " + n);
      break;
    case Family::hamiltonian:
      if (s.n < 3 || s.n > 14) throw InputError("hamiltonian needs n in [3,14], got " + n);
      break;
    case Family::planar_bridgeless:
      if (s.n < 4 || s.n > 14) throw InputError("planar-bridgeless needs n in [4,14], got " + n);
      break;
    case Family::exhaustive_tiny:
      if (s.n < 1 || s.n > 6) throw InputError("exhaustive-tiny needs an edge bound in [1,6], got " + n);
      break;
  }
}

// Per-instance seed of element i of a corpus.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

// mt19937_64 has a fixed output sequence; the draws on top of it are ours so
// results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(instance_seed(seed, 0)) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kMaxAttempts = 10000;

}  // namespace detail

struct GeneratedInstance {
  SignedGraph graph;
  FamilySpec spec;
  EdgeColoring coloring;                  // cubic3ec
  std::vector<EdgeId> hamiltonian_cycle;  // hamiltonian, in cycle order
};

namespace detail {

inline void sign_edges(SignedGraph& g, double p, Rng& rng) {
  std::vector<Sign> sigma(g.edge_count());
  for (auto& s : sigma) s = rng.chance(p) ? Sign::negative : Sign::positive;
  g = g.with_signature(sigma);
}

inline bool is_connected(const SignedGraph& g) { return components(g).count <= 1; }

inline GeneratedInstance cubic3ec(const FamilySpec& s, Rng& rng) {
  const int n = s.n;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> pairs;
    EdgeColoring colors;
    bool ok = true;
    for (int c = 0; c < 3 && ok; ++c) {
      ok = false;
      for (int tries = 0; tries < 100 && !ok; ++tries) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        rng.shuffle(perm);
        ok = true;
        for (int i = 0; i < n && ok; i += 2) ok = !used[perm[i]][perm[i + 1]];
        if (!ok) continue;
        for (int i = 0; i < n; i += 2) {
          const int u = std::min(perm[i], perm[i + 1]), v = std::max(perm[i], perm[i + 1]);
          used[u][v] = used[v][u] = true;
          pairs.push_back({u, v});
          colors.push_back(c);
        }
      }
    }
    if (!ok) continue;
    SignedGraph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v, Sign::positive);
    if (!is_connected(g)) continue;
    ensure(is_proper_coloring(g, colors), "generated matchings do not form a proper coloring");
    return {g, s, colors, {}};
  }
  throw InternalError("cubic3ec: rejection sampling exceeded the attempt cap");
}

inline GeneratedInstance hamiltonian(const FamilySpec& s, Rng& rng) {
  const int n = s.n;
  SignedGraph g(n);
  GeneratedInstance out;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    out.hamiltonian_cycle.push_back(g.add_edge(std::min(i, j), std::max(i, j), Sign::positive));
  }
  std::vector<std::pair<int, int>> chords;
  for (int u = 0; u < n; ++u)
    for (int v = u + 2; v < n; ++v)
      if (!(u == 0 && v == n - 1)) chords.push_back({u, v});
  rng.shuffle(chords);
  const std::size_t count = std::min<std::size_t>(rng.below(n + 1), chords.size());
  for (std::size_t i = 0; i < count; ++i) g.add_edge(chords[i].first, chords[i].second, Sign::positive);
  out.graph = std::move(g);
  out.spec = s;
  return out;
}

// Random stacked triangulation thinned by deletions that keep it bridgeless.
inline GeneratedInstance planar_bridgeless(const FamilySpec& s, Rng& rng) {
  const int n = s.n;
  SignedGraph tri(n);
  tri.add_edge(0, 1, Sign::positive);
  tri.add_edge(0, 2, Sign::positive);
  tri.add_edge(1, 2, Sign::positive);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    const std::size_t f = rng.below(faces.size());
    const auto [x, y, z] = faces[f];
    tri.add_edge(x, v, Sign::positive);
    tri.add_edge(y, v, Sign::positive);
    tri.add_edge(z, v, Sign::positive);
    faces[f] = {x, y, v};
    faces.push_back({y, z, v});
    faces.push_back({x, z, v});
  }
  EdgeMask keep = full_mask(tri);
  std::vector<EdgeId> order(tri.edge_count());
  for (EdgeId e = 0; e < tri.edge_count(); ++e) order[e] = e;
  rng.shuffle(order);
  for (EdgeId e : order) {
    if (!rng.chance(0.35)) continue;
    keep[e] = false;
    if (has_bridge(tri, keep)) keep[e] = true;
  }
  SignedGraph g(n);
  for (EdgeId e = 0; e < tri.edge_count(); ++e)
    if (keep[e]) g.add_edge(tri.edge(e).a, tri.edge(e).b, Sign::positive);
  ensure(is_connected(g) && !has_bridge(g, full_mask(g)), "planar generator produced a bridge");
  return {g, s, {}, {}};
}

}  // namespace detail

// Every connected signed multigraph (loops allowed) with 1..max_edges edges,
// with every signature. Vertices are numbered in order of first appearance in
// the edge list, edges are non-decreasing pairs (u <= v), and signature bit i
// makes edge i negative.
inline void for_each_tiny(int max_edges, const std::function<void(const SignedGraph&)>& visit) {
  if (max_edges < 0 || max_edges > 6) throw InputError("enumerate_tiny: edge bound must lie in [0,6]");
  for (int m = 1; m <= max_edges; ++m) {
    for (int n = 1; n <= m + 1; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) pairs.push_back({u, v});
      std::vector<int> pick;
      std::function<void(std::size_t, int)> rec = [&](std::size_t from, int next) {
        if (static_cast<int>(pick.size()) == m) {
          if (next != n) return;
          SignedGraph g(n);
          for (int i : pick) g.add_edge(pairs[i].first, pairs[i].second, Sign::positive);
          if (!detail::is_connected(g)) return;
          std::vector<Sign> sigma(m);
          for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
            for (int i = 0; i < m; ++i) sigma[i] = (bits >> i) & 1 ? Sign::negative : Sign::positive;
            visit(g.with_signature(sigma));
          }
          return;
        }
        for (std::size_t i = from; i < pairs.size(); ++i) {
          auto [u, v] = pairs[i];
          if (u > next) break;
          int nx = next;
          if (u == nx) ++nx;
          if (v > nx) continue;
          if (v == nx) ++nx;
          pick.push_back(static_cast<int>(i));
          rec(i, nx);
          pick.pop_back();
        }
      };
      rec(0, 0);
    }
  }
}

inline std::vector<SignedGraph> enumerate_tiny(int max_edges) {
  std::vector<SignedGraph> out;
  for_each_tiny(max_edges, [&](const SignedGraph& g) { out.push_back(g); });
  return out;
}

inline GeneratedInstance generate_instance(const FamilySpec& s) {
  validate(s);
  detail::Rng rng(s.seed);
  GeneratedInstance out;
  switch (s.family) {
    case Family::cubic3ec:
      out = detail::cubic3ec(s, rng);
      break;
    case Family::hamiltonian:
      out = detail::hamiltonian(s, rng);
      break;
    case Family::planar_bridgeless:
      out = detail::planar_bridgeless(s, rng);
      break;
    case Family::exhaustive_tiny: {
      auto all = enumerate_tiny(s.n);
      out.graph = all[rng.below(all.size())];
      out.spec = s;
      return out;
    }
  }
  out.spec = s;
  detail::sign_edges(out.graph, s.p, rng);
  return out;
}

inline SignedGraph generate(const FamilySpec& s) { return generate_instance(s).graph; }

// Element i of the corpus uses the seed instance_seed(s.seed, i).
inline std::vector<GeneratedInstance> generate_corpus(const FamilySpec& s, int count) {
  std::vector<GeneratedInstance> out;
  for (int i = 0; i < count; ++i) {
    FamilySpec si = s;
    si.seed = instance_seed(s.seed, i);
    out.push_back(generate_instance(si));
  }
  return out;
}

inline std::vector<SignedGraph> filter_admissible(const std::vector<SignedGraph>& gs) {
  std::vector<SignedGraph> out;
  for (const auto& g : gs)
    if (is_flow_admissible(g, AdmissibilityMethod::cross_check)) out.push_back(g);
  return out;
}

}  // namespace sflow
