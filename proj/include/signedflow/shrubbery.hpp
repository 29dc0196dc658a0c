#pragma once

#include <optional>
#include <string>

#include "signedflow/flows.hpp"
#include "signedflow/graph.hpp"
#include "signedflow/search.hpp"

namespace signedflow {

// Chords of a connected subgraph H, split by whether H + e is unbalanced.
struct ChordPartition {
  EdgeSet chords;
  EdgeSet unbalanced_chords;  // U(H)
  EdgeSet balanced_chords;    // B(H)
};

ChordPartition chord_partition(const SignedGraph& g, const SubgraphHandle& h);

/// Unbalanced, or balanced with |U(C)| + |V2(g) on C| >= 2.
bool is_removable_circuit(const SignedGraph& g, const Circuit& c);

struct ShrubberyVerdict {
  bool ok = true;
  std::string violated;  // "S1".."S4" when !ok
  VertexSet witness_vertices;
  EdgeSet witness_edges;
};

/// Checks the four shrubbery axioms: max degree 3; every cubic subgraph
/// flow-admissible; the S3 inequality over connected balanced subgraphs on
/// >= 2 vertices; no balanced 4-circuit. Exponential quantifiers, guarded
/// by a step budget.
ShrubberyVerdict is_shrubbery(const SignedGraph& g, long long max_steps = 1 << 22);

/// Watering check: values in Z2xZ3 - {0}, boundary (0,0) at 3-vertices and
/// (0,+-1) at 1- and 2-vertices. A degree above 3 is an input error.
bool verify_nzw(const SignedGraph& g, const Orientation& tau, const FlowAssignment& w);

/// On an unbalanced circuit: eta with boundary 1 at u and 0 at the other
/// circuit vertices, found by chasing values around the circuit (the wrap
/// coefficient +-2 is invertible mod 3; balanced circuits make it 0).
FlowAssignment unbalanced_eta(const SignedGraph& g, const Orientation& tau,
                              const Circuit& c, Vertex u);

/// Extends an NZW of g - V(C) over a removable circuit C: bit support grows
/// by exactly E(C), outside values are kept. Case split on the sign of C
/// follows the underlying construction (eta corrections / circuit boundary
/// solve after choosing chord and 2-vertex targets).
FlowAssignment extend_nzw_over_circuit(const SignedGraph& g, const Circuit& c,
                                       const FlowAssignment& w_rest);

/// Two 3-vertices joined by three internally disjoint paths, not all of one
/// sign product.
bool has_unbalanced_theta(const SignedGraph& g);

bool has_negative_loop(const SignedGraph& g);

}  // namespace signedflow
