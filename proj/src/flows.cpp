#include "signedflow/flows.hpp"

#include <cmath>
#include <cstdlib>

namespace signedflow {

GroupSpec GroupSpec::integer(int k) {
  if (k < 2) throw std::invalid_argument("integer flow needs k >= 2");
  return {GroupKind::integer, k};
}

GroupSpec GroupSpec::modulo(int k) {
  if (k < 2) throw std::invalid_argument("modulo flow needs k >= 2");
  return {GroupKind::modulo, k};
}

GroupSpec GroupSpec::z2z3() { return {GroupKind::z2z3, 0}; }

int GroupSpec::order() const {
  switch (kind) {
    case GroupKind::modulo:
      return k;
    case GroupKind::z2z3:
      return 6;
    case GroupKind::integer:
      break;
  }
  throw std::invalid_argument("integer values do not form a finite group");
}

std::string GroupSpec::str() const {
  switch (kind) {
    case GroupKind::integer:
      return "int " + std::to_string(k);
    case GroupKind::modulo:
      return "mod " + std::to_string(k);
    case GroupKind::z2z3:
      return "z2z3";
  }
  return "?";
}

GroupValue gv_normalize(const GroupSpec& g, GroupValue x) {
  switch (g.kind) {
    case GroupKind::integer:
      return {x.a, 0};
    case GroupKind::modulo: {
      std::int64_t a = x.a % g.k;
      if (a < 0) a += g.k;
      return {a, 0};
    }
    case GroupKind::z2z3: {
      std::int64_t a = ((x.a % 2) + 2) % 2;
      std::int64_t b = ((x.b % 3) + 3) % 3;
      return {a, b};
    }
  }
  return x;
}

GroupValue gv_add(const GroupSpec& g, GroupValue x, GroupValue y) {
  return gv_normalize(g, {x.a + y.a, x.b + y.b});
}

GroupValue gv_neg(const GroupSpec& g, GroupValue x) {
  return gv_normalize(g, {-x.a, -x.b});
}

bool gv_is_zero(GroupValue x) { return x.a == 0 && x.b == 0; }

std::string gv_str(const GroupSpec& g, GroupValue x) {
  if (g.kind == GroupKind::z2z3)
    return std::to_string(x.a) + "," + std::to_string(x.b);
  return std::to_string(x.a);
}

std::vector<GroupValue> gv_nonzero_elements(const GroupSpec& g) {
  std::vector<GroupValue> out;
  switch (g.kind) {
    case GroupKind::integer:
      for (int t = 1; t <= g.k - 1; ++t) {
        out.push_back({t, 0});
        out.push_back({-t, 0});
      }
      break;
    case GroupKind::modulo:
      for (int t = 1; t < g.k; ++t) out.push_back({t, 0});
      break;
    case GroupKind::z2z3:
      out = {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
      break;
  }
  return out;
}

bool orientation_valid(const SignedGraph& g, const Orientation& t) {
  if (static_cast<int>(t.tau.size()) != 2 * g.edge_count()) return false;
  for (const EdgeRec& e : g.edges()) {
    int a = t.tau[2 * e.id], b = t.tau[2 * e.id + 1];
    if (std::abs(a) != 1 || std::abs(b) != 1) return false;
    if (a * b != -e.sign) return false;
  }
  return true;
}

Orientation default_orientation(const SignedGraph& g) {
  Orientation t;
  t.tau.resize(2 * g.edge_count());
  for (const EdgeRec& e : g.edges()) {
    if (e.sign < 0) {
      t.tau[2 * e.id] = 1;
      t.tau[2 * e.id + 1] = 1;  // extroverted
    } else if (e.u <= e.v) {
      t.tau[2 * e.id] = 1;
      t.tau[2 * e.id + 1] = -1;
    } else {
      t.tau[2 * e.id] = -1;
      t.tau[2 * e.id + 1] = 1;
    }
  }
  return t;
}

GroupValue boundary(const SignedGraph& g, const Orientation& tau,
                    const FlowAssignment& f, Vertex v) {
  g.check_vertex(v);
  GroupValue acc{0, 0};
  for (int h : g.half_edges_at(v)) {
    GroupValue x = f.value(g.edge_of_half(h));
    if (tau.at(h) < 0) x = gv_neg(f.group, x);
    acc = gv_add(f.group, acc, x);
  }
  return acc;
}

bool is_flow(const SignedGraph& g, const Orientation& tau, const FlowAssignment& f) {
  if (static_cast<int>(f.values.size()) != g.edge_count())
    throw std::invalid_argument("flow not defined on every edge");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gv_is_zero(boundary(g, tau, f, v))) return false;
  return true;
}

bool is_nzf(const SignedGraph& g, const Orientation& tau, const FlowAssignment& f) {
  for (const GroupValue& x : f.values)
    if (gv_is_zero(x)) return false;
  return is_flow(g, tau, f);
}

bool is_k_nzf(const SignedGraph& g, const Orientation& tau, const FlowAssignment& f,
              int k) {
  if (f.group.kind != GroupKind::integer)
    throw std::invalid_argument("is_k_nzf needs an integer-valued flow");
  for (const GroupValue& x : f.values)
    if (x.a == 0 || std::abs(x.a) > k - 1) return false;
  return is_flow(g, tau, f);
}

bool is_balanced_z2z3(const SignedGraph& g, const FlowAssignment& f) {
  if (f.group.kind != GroupKind::z2z3)
    throw std::invalid_argument("balancedness is a Z2xZ3 notion");
  int cnt = 0;
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0 && f.value(e.id).a == 1) ++cnt;
  return cnt % 2 == 0;
}

std::pair<Orientation, FlowAssignment> reorient_edge(const SignedGraph& g,
                                                     const Orientation& tau,
                                                     const FlowAssignment& f,
                                                     EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("edge out of range");
  Orientation t2 = tau;
  t2.tau[2 * e] = -t2.tau[2 * e];
  t2.tau[2 * e + 1] = -t2.tau[2 * e + 1];
  FlowAssignment f2 = f;
  f2.set(e, gv_neg(f.group, f.value(e)));
  return {std::move(t2), std::move(f2)};
}

EdgeSet support(const FlowAssignment& f) {
  EdgeSet s;
  for (int e = 0; e < static_cast<int>(f.values.size()); ++e)
    if (!gv_is_zero(f.values[e])) s.add(e);
  return s;
}

EdgeSet edges_with_abs(const FlowAssignment& f, std::int64_t t) {
  if (f.group.kind != GroupKind::integer)
    throw std::invalid_argument("edges_with_abs needs integer values");
  EdgeSet s;
  for (int e = 0; e < static_cast<int>(f.values.size()); ++e)
    if (std::abs(f.values[e].a) == t) s.add(e);
  return s;
}

FlowAssignment express_under(const SignedGraph& g, const Orientation& from,
                             const FlowAssignment& f, const Orientation& to) {
  FlowAssignment out = f;
  for (const EdgeRec& e : g.edges()) {
    if (from.at(2 * e.id) != to.at(2 * e.id))
      out.set(e.id, gv_neg(f.group, f.value(e.id)));
  }
  return out;
}

void merge_subflow(const Orientation& parent_tau, const Subgraph& sub,
                   const FlowAssignment& f_local, FlowAssignment& out) {
  Orientation local_tau = default_orientation(sub.graph);
  for (int le = 0; le < static_cast<int>(sub.edge_to_parent.size()); ++le) {
    EdgeId pe = sub.edge_to_parent[le];
    GroupValue v = f_local.value(le);
    if (local_tau.at(2 * le) != parent_tau.at(2 * pe)) v = gv_neg(f_local.group, v);
    out.set(pe, v);
  }
}

std::pair<Orientation, FlowAssignment> lift_through_suppression(
    const SignedGraph& original, const SuppressResult& sup,
    const Orientation& tau_suppressed, const FlowAssignment& f_suppressed) {
  if (!orientation_valid(sup.graph, tau_suppressed))
    throw std::invalid_argument("invalid orientation for the suppressed graph");
  Orientation tau;
  tau.tau.assign(2 * original.edge_count(), 0);
  FlowAssignment f(f_suppressed.group, original.edge_count());
  for (EdgeId e = 0; e < sup.graph.edge_count(); ++e) {
    GroupValue x = f_suppressed.value(e);
    int lead = tau_suppressed.at(2 * e);
    for (const PathStep& st : sup.provenance[e]) {
      tau.tau[2 * st.edge + st.tail_side] = static_cast<std::int8_t>(lead);
      int far = -original.edge(st.edge).sign * lead;
      tau.tau[2 * st.edge + (1 - st.tail_side)] = static_cast<std::int8_t>(far);
      lead = -far;
      f.set(st.edge, x);
    }
    const PathStep& last = sup.provenance[e].back();
    if (tau.tau[2 * last.edge + (1 - last.tail_side)] != tau_suppressed.at(2 * e + 1))
      throw InvariantViolation("suppression lift disagrees with the given orientation");
  }
  if (!orientation_valid(original, tau))
    throw InvariantViolation("suppression lift produced an invalid orientation");
  return {std::move(tau), std::move(f)};
}

}  // namespace signedflow
