#pragma once

#include <optional>
#include <string>
#include <utility>

#include "signedflow/flows.hpp"
#include "signedflow/graph.hpp"
#include "signedflow/search.hpp"

namespace signedflow {

struct SplitResult {
  SignedGraph graph;
  Vertex new_vertex;
  EdgeSet moved_edges;
};

/// G_[v;F]: detaches the edges of F from v onto a fresh vertex v*. Edge ids,
/// sides and signs are stable; only the v-side endpoints move. Loops at v
/// are not splittable.
SplitResult split_away(const SignedGraph& g, Vertex v, const EdgeSet& F);

/// Splitting lemma step on a bridgeless graph with d(v) >= 4: returns
/// whichever of the {e0,e1} / {e0,e2} splits is bridgeless, preferring
/// {e0,e2} when v is a cut-vertex (then e0 and e2 must sit in different
/// blocks). Both candidates bridged is an InvariantViolation.
SplitResult fleischner_split(const SignedGraph& g, Vertex v, EdgeId e0, EdgeId e1,
                             EdgeId e2);

/// Two perfect matchings of a bridgeless cubic graph with e0 in the first
/// and not in the second (signs are irrelevant).
std::pair<EdgeSet, EdgeSet> perfect_matchings_pair(const SignedGraph& g, EdgeId e0);

/// Reorients every edge carrying value 2 so the given Z3-NZF becomes
/// all-ones; the result satisfies boundary(tau)(v) = 0 (mod 3) everywhere.
Orientation mod3_orientation(const SignedGraph& g, const Orientation& tau,
                             const FlowAssignment& z3_nzf);

/// Bridgeless g with a Z3-NZF: builds an integer 3-NZF whose value on e0
/// has absolute value i (splitting to max degree 3, suppressing to cubic,
/// reversing a perfect matching, lifting back). Output expressed under
/// default_orientation(g).
FlowAssignment three_nzf_prescribed(const SignedGraph& g, EdgeId e0, int i,
                                    const std::optional<FlowAssignment>& z3_hint = {},
                                    long long max_nodes = kDefaultSearchBudget);

/// Connected g with a Z3-NZF: 5-NZF with no value of absolute value 3 and
/// every absolute value 4 on a cut-edge. Induction on the bridge count via
/// negative-loop attachment at a minimal bridge side.
FlowAssignment z3_to_5nzf(const SignedGraph& g,
                          long long max_nodes = kDefaultSearchBudget);

/// Z2-flow with an even number of negative support edges -> integer 3-flow
/// f2 with supp(f1) inside supp(f2) and |f2(e)| = 2 exactly on the bridges
/// of the support subgraph. Search over candidate supports, smallest first.
FlowAssignment z2_to_3flow(const SignedGraph& g, const FlowAssignment& f1,
                           long long max_nodes = kDefaultSearchBudget);

struct AuditItem {
  std::string name;
  bool pass;
};

struct PipelineTrace {
  Orientation orientation;
  FlowAssignment g1g2;  // balanced Z2xZ3-NZF
  FlowAssignment f1;    // 3-flow
  FlowAssignment f2;    // 5-flow supported on supp(g2)
  FlowAssignment f;     // 3*f1 + f2, the 11-NZF
  std::vector<AuditItem> audit;

  bool all_passed() const;
};

/// Full pipeline on a connected flow-admissible graph; every flow in the
/// trace is expressed under one shared default orientation. The audit
/// records: nowhere-zero, |f| <= 10, |f| != 9, and |f| = 10 only on common
/// bridges of the two supports.
PipelineTrace build_11flow(const SignedGraph& g,
                           long long max_nodes = kDefaultSearchBudget);

/// Bridges of the spanning subgraph induced by the edge set, as parent ids.
EdgeSet support_bridges(const SignedGraph& g, const EdgeSet& edges);

}  // namespace signedflow
