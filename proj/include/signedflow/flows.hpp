#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signedflow/graph.hpp"

namespace signedflow {

enum class GroupKind { integer, modulo, z2z3 };

// Value domain of a flow: integers with |f| < k, integers mod k, or Z2 x Z3.
struct GroupSpec {
  GroupKind kind = GroupKind::integer;
  int k = 0;

  static GroupSpec integer(int k);
  static GroupSpec modulo(int k);
  static GroupSpec z2z3();

  // |A| for the genuine groups; rejects the integer kind.
  int order() const;
  std::string str() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Integer/modulo values live in `a`; z2z3 uses (a, b) = (bit, trit).
struct GroupValue {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const GroupValue&, const GroupValue&) = default;
};

GroupValue gv_normalize(const GroupSpec& g, GroupValue x);
GroupValue gv_add(const GroupSpec& g, GroupValue x, GroupValue y);
GroupValue gv_neg(const GroupSpec& g, GroupValue x);
bool gv_is_zero(GroupValue x);
std::string gv_str(const GroupSpec& g, GroupValue x);
/// Nonzero elements in deterministic search order.
std::vector<GroupValue> gv_nonzero_elements(const GroupSpec& g);

// Half-edge direction assignment with tau(h) * tau(h^) = -sign(e):
// positive edges get opposite signs at their two halves, negative edges
// equal signs (both-out = extroverted, both-in = introverted).
struct Orientation {
  std::vector<std::int8_t> tau;  // index = half-edge id

  int at(int half) const { return tau.at(half); }
};

bool orientation_valid(const SignedGraph& g, const Orientation& t);

/// Deterministic choice: positive edge directed out of its lower-indexed
/// endpoint (ties: side 0), negative edge extroverted.
Orientation default_orientation(const SignedGraph& g);

// Edge-indexed values over one group; the orientation is passed alongside.
struct FlowAssignment {
  GroupSpec group;
  std::vector<GroupValue> values;

  FlowAssignment() = default;
  FlowAssignment(GroupSpec group, int edge_count)
      : group(group), values(edge_count) {}

  GroupValue value(EdgeId e) const { return values.at(e); }
  void set(EdgeId e, GroupValue v) { values.at(e) = gv_normalize(group, v); }
};

/// Signed sum over the half-edges at v (a loop contributes both halves).
GroupValue boundary(const SignedGraph& g, const Orientation& tau,
                    const FlowAssignment& f, Vertex v);

bool is_flow(const SignedGraph& g, const Orientation& tau, const FlowAssignment& f);
bool is_nzf(const SignedGraph& g, const Orientation& tau, const FlowAssignment& f);
/// Integer group only: flow with 0 < |f(e)| <= k-1 on every edge.
bool is_k_nzf(const SignedGraph& g, const Orientation& tau, const FlowAssignment& f,
              int k);

/// Z2xZ3 flow (f1, f2): true iff supp(f1) carries an even number of
/// negative edges.
bool is_balanced_z2z3(const SignedGraph& g, const FlowAssignment& f);

/// Flips tau on both halves of e and negates f(e); boundaries unchanged.
std::pair<Orientation, FlowAssignment> reorient_edge(const SignedGraph& g,
                                                     const Orientation& tau,
                                                     const FlowAssignment& f,
                                                     EdgeId e);

EdgeSet support(const FlowAssignment& f);
/// Integer group: { e : |f(e)| = t }.
EdgeSet edges_with_abs(const FlowAssignment& f, std::int64_t t);

/// Re-expresses f, given under `from`, as the equal flow under `to`
/// (negates exactly the edges whose orientation differs).
FlowAssignment express_under(const SignedGraph& g, const Orientation& from,
                             const FlowAssignment& f, const Orientation& to);

/// Copies a flow found on sub.graph (under sub.graph's default orientation)
/// into `out` under parent_tau, negating edges whose orientations disagree.
/// Edges of sub.graph without a parent image are skipped.
void merge_subflow(const Orientation& parent_tau, const Subgraph& sub,
                   const FlowAssignment& f_local, FlowAssignment& out);

/// Lifts a flow on a suppressed graph back to the original: each replaced
/// path carries its edge's value, with the orientation chained through the
/// interior 2-vertices (opposite half-signs there keep every interior
/// boundary zero). Returns the induced orientation with the lifted flow.
std::pair<Orientation, FlowAssignment> lift_through_suppression(
    const SignedGraph& original, const SuppressResult& sup,
    const Orientation& tau_suppressed, const FlowAssignment& f_suppressed);

}  // namespace signedflow
