#pragma once

#include <map>
#include <optional>
#include <set>

#include "signedflow/flows.hpp"
#include "signedflow/graph.hpp"

namespace signedflow {

inline constexpr long long kDefaultSearchBudget = 200'000'000;

struct SearchConstraints {
  // Exact values on an edge subset (relative to the search orientation).
  std::map<EdgeId, GroupValue> prescribed;
  // Integer groups: per-edge forbidden |f(e)| values.
  std::map<EdgeId, std::set<std::int64_t>> forbidden_abs;
  // Z2xZ3: require supp(f1) to carry an even number of negative edges.
  bool balanced = false;
  // Edges that must be nonzero while the rest may vanish. Without either
  // support field the search wants a nowhere-zero flow.
  std::optional<EdgeSet> support_superset;
  // Nonzero exactly on these edges, zero elsewhere.
  std::optional<EdgeSet> support_exact;
};

struct SearchOptions {
  std::optional<Orientation> tau;             // default: default_orientation
  std::optional<std::vector<EdgeId>> order;   // default: BFS order from vertex 0
  long long max_nodes = kDefaultSearchBudget;
};

/// Deterministic edge elimination order: vertices in BFS order from vertex 0
/// (then lowest unvisited), incident edges appended by ascending id.
std::vector<EdgeId> bfs_edge_order(const SignedGraph& g);

/// Exhaustive backtracking search for a flow meeting the constraints,
/// pruning on partial boundaries at saturated vertices. Returns a witness
/// under the search orientation, or nullopt after a complete exhaust.
/// Throws BudgetExceeded past options.max_nodes.
std::optional<FlowAssignment> find_nzf(const SignedGraph& g, const GroupSpec& group,
                                       const SearchConstraints& constraints = {},
                                       const SearchOptions& options = {});

/// Least k <= k_max admitting a k-NZF.
std::optional<int> min_flow_number(const SignedGraph& g, int k_max,
                                   long long max_nodes = kDefaultSearchBudget);

/// Bouchet's criterion, per component: negativeness != 1 and no cut-edge
/// whose removal leaves a balanced component.
bool is_flow_admissible(const SignedGraph& g);

/// Number of A-NZFs agreeing with gamma on T, by deletion-contraction on
/// the edges outside T (cut-edge: 0; loop: |A|-1 times; else G/e minus G-e).
/// Ordinary graphs only.
long long count_prescribed_nzf(const SignedGraph& g, const Orientation& tau,
                               const GroupSpec& group, const EdgeSet& T,
                               const std::map<EdgeId, GroupValue>& gamma);

/// gamma1 ~ gamma2: for every X, sum alpha_X*gamma1 vanishes iff the gamma2
/// sum does. Exhaustive over all 2^n vertex subsets.
bool are_similar(const SignedGraph& g, const Orientation& tau, const GroupSpec& group,
                 const EdgeSet& T, const std::map<EdgeId, GroupValue>& gamma1,
                 const std::map<EdgeId, GroupValue>& gamma2,
                 int max_vertices = 20);

/// Given d(v) <= 3, a nowhere-zero gamma on delta(v) with zero boundary at
/// v, and some A-NZF of g, produces an A-NZF extending gamma. A failed
/// search past valid preconditions is an InvariantViolation.
FlowAssignment extend_nzf_at_vertex(const SignedGraph& g, const Orientation& tau,
                                    const GroupSpec& group, Vertex v,
                                    const std::map<EdgeId, GroupValue>& gamma);

/// Solves boundary(phi) = beta on a connected ordinary graph: phi vanishes
/// off a spanning tree whose leaves are peeled to absorb their residual.
/// phi may be zero on edges. Requires sum(beta) = 0.
FlowAssignment solve_boundary(const SignedGraph& g, const Orientation& tau,
                              const GroupSpec& group,
                              const std::vector<GroupValue>& beta);

struct NzwConstraints {
  // Require sigma(supp(f1)) to equal this sign.
  std::optional<int> support_sign;
};

/// Backtracking search for a nowhere-zero watering: values over
/// Z2xZ3 - {(0,0)}, boundary (0,0) at 3-vertices and (0,+-1) at 1- and
/// 2-vertices. Requires max degree <= 3.
std::optional<FlowAssignment> find_nzw(const SignedGraph& g,
                                       const NzwConstraints& constraints = {},
                                       const SearchOptions& options = {});

}  // namespace signedflow
