#pragma once

#include <string>
#include <vector>

#include "sflow/sflow.hpp"

namespace fixtures {

using namespace sflow;

inline SignedGraph make(int n, const std::vector<std::tuple<int, int, char>>& es) {
  SignedGraph g(n);
  for (auto [u, v, s] : es) g.add_edge(u, v, s == '-' ? Sign::negative : Sign::positive);
  return g;
}

inline SignedGraph circuit(int n, int negatives) {
  SignedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, i < negatives ? Sign::negative : Sign::positive);
  return g;
}

inline SignedGraph k4(const std::string& signs = "++++++") {
  return make(4, {{0, 1, signs[0]}, {0, 2, signs[1]}, {0, 3, signs[2]},
                  {1, 2, signs[3]}, {1, 3, signs[4]}, {2, 3, signs[5]}});
}

inline SignedGraph petersen(const std::vector<int>& negative = {}) {
  SignedGraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, Sign::positive);
  for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5, Sign::positive);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5, Sign::positive);
  auto sigma = g.signature();
  for (int e : negative) sigma[e] = Sign::negative;
  return g.with_signature(sigma);
}

inline SignedGraph bouquet() { return make(1, {{0, 0, '-'}, {0, 0, '-'}}); }

inline SignedGraph long_barbell() { return make(2, {{0, 0, '-'}, {0, 1, '+'}, {1, 1, '-'}}); }

// Two vertices joined by three parallel edges.
inline SignedGraph theta(const std::string& signs) {
  return make(2, {{0, 1, signs[0]}, {0, 1, signs[1]}, {0, 1, signs[2]}});
}

}  // namespace fixtures
