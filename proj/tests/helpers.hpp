#pragma once

#include <initializer_list>
#include <tuple>

#include "signedflow/graph.hpp"

namespace signedflow::testing {

inline SignedGraph from_edges(int n,
                              std::initializer_list<std::tuple<int, int, int>> edges) {
  SignedGraph g(n);
  for (auto [u, v, s] : edges) g.add_edge(u, v, s);
  return g;
}

inline SignedGraph triangle() {
  return from_edges(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

inline SignedGraph negative_loop() { return from_edges(1, {{0, 0, -1}}); }

inline SignedGraph unbalanced_digon() { return from_edges(2, {{0, 1, 1}, {0, 1, -1}}); }

}  // namespace signedflow::testing
