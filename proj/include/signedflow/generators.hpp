#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "signedflow/graph.hpp"

namespace signedflow {

/// Tree with all degrees in {1,3} (given as an edge list), a negative loop
/// added at every leaf; tree edges positive. Rejects other degree sequences.
SignedGraph fig1_family(const std::vector<std::pair<Vertex, Vertex>>& tree_edges);

/// Canonical caterpillar shape for the family: `internal` path vertices of
/// degree 3 (0 = a single edge, 1 = the 3-star).
SignedGraph fig1_caterpillar(int internal);

/// Streams every labeled connected multigraph with <= max_vertices vertices
/// and <= max_edges edges (parallel edges capped at 3 per pair, loops at 2
/// per vertex), under all 2^m signatures, in a fixed deterministic order.
/// Return false from the callback to stop early.
void corpus_enumerate(int max_vertices, int max_edges,
                      const std::function<bool(const SignedGraph&)>& visit);

/// Convenience: the corpus as a vector (small bounds only).
std::vector<SignedGraph> corpus_collect(int max_vertices, int max_edges);

/// Reproducible random multigraph under the same parallel/loop caps.
SignedGraph random_signed(int n, int m, double p_negative, std::uint64_t seed);

// Named catalog.
SignedGraph theta_unbalanced();  // 2 vertices, 3 parallel edges, one negative
SignedGraph barbell();           // positive edge, negative loop at each end
SignedGraph k4();
SignedGraph k33();
SignedGraph prism();
SignedGraph petersen();
SignedGraph moebius_kantor();

}  // namespace signedflow
