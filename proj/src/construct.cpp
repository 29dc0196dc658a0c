#include "signedflow/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace signedflow {

SplitResult split_away(const SignedGraph& g, Vertex v, const EdgeSet& F) {
  g.check_vertex(v);
  for (EdgeId e : F) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("split: edge out of range");
    const EdgeRec& r = g.edge(e);
    if (r.u == r.v)
      throw std::invalid_argument("split: loops cannot be moved off their vertex");
    if (r.u != v && r.v != v)
      throw std::invalid_argument("split: edge not incident with the split vertex");
  }
  SplitResult out;
  Vertex vstar = g.vertex_count();
  out.new_vertex = vstar;
  out.moved_edges = F;
  out.graph = SignedGraph(g.vertex_count() + 1);
  for (const EdgeRec& r : g.edges()) {
    Vertex u = r.u, w = r.v;
    if (F.contains(r.id)) {
      if (u == v)
        u = vstar;
      else
        w = vstar;
    }
    out.graph.add_edge(u, w, r.sign);
  }
  return out;
}

SplitResult fleischner_split(const SignedGraph& g, Vertex v, EdgeId e0, EdgeId e1,
                             EdgeId e2) {
  if (!bridges(g).empty())
    throw std::invalid_argument("fleischner_split: graph must be bridgeless");
  g.check_vertex(v);
  if (g.degree(v) < 4)
    throw std::invalid_argument("fleischner_split: vertex degree must be >= 4");
  if (e0 == e1 || e0 == e2 || e1 == e2)
    throw std::invalid_argument("fleischner_split: edges must be distinct");
  for (EdgeId e : {e0, e1, e2}) {
    const EdgeRec& r = g.edge(e);
    if (r.u == r.v || (r.u != v && r.v != v))
      throw std::invalid_argument("fleischner_split: edges must lie in delta(v)");
  }
  BlockDecomposition bd = block_decomposition(g);
  bool cut = bd.cut_vertex[v];
  if (cut && bd.edge_block[e0] == bd.edge_block[e2])
    throw std::invalid_argument(
        "fleischner_split: e0 and e2 must lie in different blocks at a cut-vertex");

  auto attempt = [&](EdgeId a, EdgeId b) -> std::optional<SplitResult> {
    EdgeSet F;
    F.add(a);
    F.add(b);
    SplitResult sr = split_away(g, v, F);
    if (bridges(sr.graph).empty()) return sr;
    return std::nullopt;
  };

  if (cut) {
    if (auto sr = attempt(e0, e2)) return *sr;
    if (auto sr = attempt(e0, e1)) return *sr;
    throw InvariantViolation("fleischner_split: cut-vertex split left a bridge");
  }
  if (auto sr = attempt(e0, e1)) return *sr;
  if (auto sr = attempt(e0, e2)) return *sr;
  throw InvariantViolation("fleischner_split: both candidate splits left a bridge");
}

namespace {

bool find_matching(const SignedGraph& g, EdgeSet& matching, std::vector<char>& covered,
                   EdgeId forced_out) {
  Vertex v = -1;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (!covered[x]) {
      v = x;
      break;
    }
  if (v < 0) return true;
  std::vector<EdgeId> inc;
  for (int h : g.half_edges_at(v)) inc.push_back(g.edge_of_half(h));
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  for (EdgeId e : inc) {
    if (e == forced_out || g.is_loop(e)) continue;
    Vertex w = g.other_end(e, v);
    if (covered[w]) continue;
    covered[v] = covered[w] = 1;
    matching.add(e);
    if (find_matching(g, matching, covered, forced_out)) return true;
    covered[v] = covered[w] = 0;
    matching = matching.set_minus(EdgeSet({e}));
  }
  return false;
}

}  // namespace

std::pair<EdgeSet, EdgeSet> perfect_matchings_pair(const SignedGraph& g, EdgeId e0) {
  if (e0 < 0 || e0 >= g.edge_count())
    throw std::invalid_argument("perfect_matchings_pair: edge out of range");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3)
      throw std::invalid_argument("perfect_matchings_pair: graph must be cubic");
  if (!bridges(g).empty())
    throw std::invalid_argument("perfect_matchings_pair: graph must be bridgeless");
  if (g.is_loop(e0))
    throw std::invalid_argument("perfect_matchings_pair: e0 is a loop");

  EdgeSet m1;
  std::vector<char> covered(g.vertex_count(), 0);
  m1.add(e0);
  covered[g.edge(e0).u] = covered[g.edge(e0).v] = 1;
  if (!find_matching(g, m1, covered, -1))
    throw InvariantViolation("perfect matching containing e0 must exist");

  EdgeSet m2;
  covered.assign(g.vertex_count(), 0);
  if (!find_matching(g, m2, covered, e0))
    throw InvariantViolation("perfect matching avoiding e0 must exist");
  return {m1, m2};
}

Orientation mod3_orientation(const SignedGraph& g, const Orientation& tau,
                             const FlowAssignment& z3_nzf) {
  if (z3_nzf.group.kind != GroupKind::modulo || z3_nzf.group.k != 3)
    throw std::invalid_argument("mod3_orientation: flow must be over Z3");
  if (!is_nzf(g, tau, z3_nzf))
    throw std::invalid_argument("mod3_orientation: input is not a Z3-NZF");
  Orientation out = tau;
  for (const EdgeRec& e : g.edges()) {
    if (z3_nzf.value(e.id).a == 2) {
      out.tau[2 * e.id] = -out.tau[2 * e.id];
      out.tau[2 * e.id + 1] = -out.tau[2 * e.id + 1];
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int s = 0;
    for (int h : g.half_edges_at(v)) s += out.at(h);
    if (s % 3 != 0)
      throw InvariantViolation("mod3_orientation: boundary not divisible by 3");
  }
  return out;
}

namespace {

// three_nzf_prescribed working state: loops of g are subdivided into
// (redirected original edge, positive partner edge) so the splitting phase
// only ever sees loopless graphs.
struct LoopSubdivision {
  SignedGraph graph;
  std::vector<EdgeId> partner;  // loop id -> partner edge id, -1 otherwise
};

LoopSubdivision subdivide_loops(const SignedGraph& g) {
  int loops = 0;
  for (const EdgeRec& e : g.edges())
    if (e.u == e.v) ++loops;
  LoopSubdivision out;
  out.graph = SignedGraph(g.vertex_count() + loops);
  out.partner.assign(g.edge_count(), -1);
  int next = g.vertex_count();
  std::vector<Vertex> mid(g.edge_count(), -1);
  for (const EdgeRec& e : g.edges()) {
    if (e.u == e.v) {
      mid[e.id] = next++;
      out.graph.add_edge(e.u, mid[e.id], e.sign);
    } else {
      out.graph.add_edge(e.u, e.v, e.sign);
    }
  }
  for (const EdgeRec& e : g.edges())
    if (mid[e.id] >= 0) out.partner[e.id] = out.graph.add_edge(mid[e.id], e.u, 1);
  return out;
}

int tau_sum_at(const SignedGraph& g, const std::vector<std::int8_t>& tau, Vertex v) {
  int s = 0;
  for (int h : g.half_edges_at(v)) s += tau[h];
  return s;
}

}  // namespace

FlowAssignment three_nzf_prescribed(const SignedGraph& g, EdgeId e0, int i,
                                    const std::optional<FlowAssignment>& z3_hint,
                                    long long max_nodes) {
  if (e0 < 0 || e0 >= g.edge_count())
    throw std::invalid_argument("three_nzf_prescribed: edge out of range");
  if (i != 1 && i != 2)
    throw std::invalid_argument("three_nzf_prescribed: prescribed value must be 1 or 2");
  if (!bridges(g).empty())
    throw std::invalid_argument("three_nzf_prescribed: graph must be bridgeless");
  Orientation tau0 = default_orientation(g);
  if (z3_hint && !is_nzf(g, tau0, *z3_hint))
    throw std::invalid_argument("three_nzf_prescribed: supplied Z3-NZF is invalid");

  SearchOptions opts;
  opts.max_nodes = max_nodes;

  LoopSubdivision sub = subdivide_loops(g);
  const SignedGraph& gs = sub.graph;
  auto z3s = find_nzf(gs, GroupSpec::modulo(3), {}, opts);
  if (!z3s) {
    if (z3_hint)
      throw InvariantViolation("subdivision lost the Z3-NZF");
    throw std::invalid_argument("three_nzf_prescribed: graph admits no Z3-NZF");
  }

  Orientation tau_gs = mod3_orientation(gs, default_orientation(gs), *z3s);

  // Split every vertex of degree >= 4 down to degree <= 3, keeping the
  // orientation boundary divisible by 3: a lopsided split vertex gets a
  // positive balancing edge back to its origin.
  SignedGraph cur = gs;
  std::vector<std::int8_t> tau = tau_gs.tau;
  int base_edge_count = gs.edge_count();
  while (true) {
    Vertex v = -1;
    for (Vertex x = 0; x < cur.vertex_count(); ++x)
      if (cur.degree(x) >= 4) {
        v = x;
        break;
      }
    if (v < 0) break;
    std::vector<EdgeId> inc;
    for (int h : cur.half_edges_at(v)) inc.push_back(cur.edge_of_half(h));
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    if (inc.size() < 3) throw InvariantViolation("splittable vertex lacks a triple");
    BlockDecomposition bd = block_decomposition(cur);
    EdgeId a = inc[0], b = -1, c = -1;
    if (bd.cut_vertex[v]) {
      for (EdgeId e : inc)
        if (bd.edge_block[e] != bd.edge_block[a]) {
          c = e;
          break;
        }
      if (c < 0) throw InvariantViolation("cut-vertex with a single incident block");
      for (EdgeId e : inc)
        if (e != a && e != c) {
          b = e;
          break;
        }
    } else {
      b = inc[1];
      c = inc[2];
    }
    SplitResult sr = fleischner_split(cur, v, a, b, c);
    cur = std::move(sr.graph);
    int s = tau_sum_at(cur, tau, sr.new_vertex);
    if (s % 3 != 0) {
      int t = s > 0 ? 1 : -1;
      cur.add_edge(v, sr.new_vertex, 1);
      tau.push_back(static_cast<std::int8_t>(-t));
      tau.push_back(static_cast<std::int8_t>(t));
    }
    if (tau_sum_at(cur, tau, sr.new_vertex) % 3 != 0 ||
        tau_sum_at(cur, tau, v) % 3 != 0)
      throw InvariantViolation("split broke the mod-3 orientation boundary");
  }

  // Suppress to cubic (or degenerate circuit) components; end-half values of
  // each suppressed path carry the orientation through.
  SuppressResult sup = suppress(cur);
  Orientation tauS;
  tauS.tau.resize(2 * sup.graph.edge_count());
  for (EdgeId e = 0; e < sup.graph.edge_count(); ++e) {
    const auto& path = sup.provenance[e];
    tauS.tau[2 * e] = tau[2 * path.front().edge + path.front().tail_side];
    tauS.tau[2 * e + 1] = tau[2 * path.back().edge + (1 - path.back().tail_side)];
  }
  if (!orientation_valid(sup.graph, tauS))
    throw InvariantViolation("suppression end-halves form no orientation");

  EdgeId target = -1;
  for (EdgeId e = 0; e < sup.graph.edge_count(); ++e)
    for (const PathStep& st : sup.provenance[e])
      if (st.edge == e0) target = e;
  if (target < 0) throw InvariantViolation("prescribed edge lost in suppression");

  // Per component: value 2 on a reversed perfect matching, 1 elsewhere.
  FlowAssignment fS(GroupSpec::integer(3), sup.graph.edge_count());
  std::vector<std::int8_t> tauS2 = tauS.tau;
  std::vector<int> comp = component_ids(sup.graph);
  int ncomp = component_count(sup.graph);
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    VertexSet verts;
    for (Vertex v = 0; v < sup.graph.vertex_count(); ++v)
      if (comp[v] == cidx) verts.add(v);
    Subgraph sc = induced_by_vertices(sup.graph, verts);
    if (sc.graph.edge_count() == 0) continue;
    bool target_here = false;
    int local_target = -1;
    for (int le = 0; le < sc.graph.edge_count(); ++le)
      if (sc.edge_to_parent[le] == target) {
        target_here = true;
        local_target = le;
      }
    if (sc.graph.vertex_count() == 1 && sc.graph.edge_count() == 1) {
      // pure circuit collapsed to one loop; always balanced here
      EdgeId pe = sc.edge_to_parent[0];
      if (sup.graph.edge(pe).sign != 1)
        throw InvariantViolation("degenerate circuit came out unbalanced");
      fS.set(pe, {target_here ? i : 1, 0});
      continue;
    }
    for (Vertex lv = 0; lv < sc.graph.vertex_count(); ++lv)
      if (sc.graph.degree(lv) != 3)
        throw InvariantViolation("suppressed component is neither cubic nor a loop");
    EdgeId anchor = target_here ? local_target : 0;
    auto [m1, m2] = perfect_matchings_pair(sc.graph, anchor);
    const EdgeSet& m = (target_here && i == 1) ? m2 : m1;
    for (int le = 0; le < sc.graph.edge_count(); ++le) {
      EdgeId pe = sc.edge_to_parent[le];
      bool matched = m.contains(le);
      fS.set(pe, {matched ? 2 : 1, 0});
      if (matched) {
        tauS2[2 * pe] = -tauS2[2 * pe];
        tauS2[2 * pe + 1] = -tauS2[2 * pe + 1];
      }
    }
  }
  if (!is_flow(sup.graph, Orientation{tauS2}, fS))
    throw InvariantViolation("matching reversal did not produce a flow");

  // Lift along each suppressed path: constant magnitude, orientation chained
  // through the interior 2-vertices.
  auto [tauCurO, fCur] = lift_through_suppression(cur, sup, Orientation{tauS2}, fS);
  const std::vector<std::int8_t>& tauCur = tauCurO.tau;

  // Balancing edges vanish when the split vertices merge back (their two
  // halves land on the same vertex of a positive edge); the remaining edge
  // ids are exactly those of the subdivided graph.
  FlowAssignment fGs(GroupSpec::integer(3), base_edge_count);
  std::vector<std::int8_t> tauGsLift(2 * base_edge_count);
  for (EdgeId e = 0; e < base_edge_count; ++e) {
    fGs.set(e, fCur.value(e));
    tauGsLift[2 * e] = tauCur[2 * e];
    tauGsLift[2 * e + 1] = tauCur[2 * e + 1];
  }
  if (!is_flow(gs, Orientation{tauGsLift}, fGs))
    throw InvariantViolation("merging split vertices did not preserve the flow");

  // Undo the loop subdivision.
  FlowAssignment fG(GroupSpec::integer(3), g.edge_count());
  std::vector<std::int8_t> tauG(2 * g.edge_count());
  for (const EdgeRec& e : g.edges()) {
    if (sub.partner[e.id] < 0) {
      fG.set(e.id, fGs.value(e.id));
      tauG[2 * e.id] = tauGsLift[2 * e.id];
      tauG[2 * e.id + 1] = tauGsLift[2 * e.id + 1];
      continue;
    }
    EdgeId p = sub.partner[e.id];
    std::int64_t x = fGs.value(e.id).a;
    std::int64_t xp = fGs.value(p).a;
    if (std::abs(x) != std::abs(xp) || x == 0)
      throw InvariantViolation("loop pieces carry mismatched values");
    tauG[2 * e.id] = tauGsLift[2 * e.id];
    tauG[2 * e.id + 1] =
        static_cast<std::int8_t>(tauGsLift[2 * p + 1] * (xp == x ? 1 : -1));
    fG.set(e.id, {x, 0});
  }
  Orientation tg{tauG};
  if (!orientation_valid(g, tg))
    throw InvariantViolation("loop merge produced an invalid orientation");

  FlowAssignment out = express_under(g, tg, fG, tau0);
  if (!is_k_nzf(g, tau0, out, 3) || std::abs(out.value(e0).a) != i)
    throw InvariantViolation("three_nzf_prescribed postcondition failed");
  return out;
}

namespace {

FlowAssignment z3_to_5nzf_impl(const SignedGraph& g, long long max_nodes, bool root) {
  SearchOptions opts;
  opts.max_nodes = max_nodes;
  if (!find_nzf(g, GroupSpec::modulo(3), {}, opts)) {
    if (root) throw std::invalid_argument("z3_to_5nzf: graph admits no Z3-NZF");
    throw InvariantViolation("loop-closed bridge side lost the Z3-NZF");
  }
  if (g.edge_count() == 0) return FlowAssignment(GroupSpec::integer(5), 0);

  EdgeSet cut = bridges(g);
  if (cut.empty()) {
    FlowAssignment f3 = three_nzf_prescribed(g, 0, 1, {}, max_nodes);
    FlowAssignment out(GroupSpec::integer(5), g.edge_count());
    out.values = f3.values;
    return out;
  }

  // Bridge whose smaller side has the fewest vertices; ties by edge id.
  EdgeId pick = -1;
  int pick_side = 0, best_size = -1;
  for (EdgeId b : cut) {
    EdgeSet rest;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (e != b) rest.add(e);
    Subgraph without = spanning_by_edges(g, rest);
    std::vector<int> comp = component_ids(without.graph);
    int cu = comp[g.edge(b).u], cv = comp[g.edge(b).v];
    int nu = 0, nv = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (comp[v] == cu) ++nu;
      if (comp[v] == cv) ++nv;
    }
    int side = nu <= nv ? 0 : 1;
    int size = std::min(nu, nv);
    if (best_size < 0 || size < best_size) {
      best_size = size;
      pick = b;
      pick_side = side;
    }
  }

  const EdgeRec& br = g.edge(pick);
  Vertex v1 = pick_side == 0 ? br.u : br.v;
  Vertex v2 = pick_side == 0 ? br.v : br.u;
  EdgeSet rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != pick) rest.add(e);
  std::vector<int> comp = component_ids(spanning_by_edges(g, rest).graph);

  auto side_graph = [&](Vertex anchor) {
    VertexSet keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == comp[anchor]) keep.add(v);
    Subgraph sub = induced_by_vertices(g, keep);
    Vertex local_anchor = -1;
    for (int lv = 0; lv < sub.graph.vertex_count(); ++lv)
      if (sub.vertex_to_parent[lv] == anchor) local_anchor = lv;
    EdgeId loop = sub.graph.add_edge(local_anchor, local_anchor, -1);
    return std::tuple<Subgraph, Vertex, EdgeId>(std::move(sub), local_anchor, loop);
  };

  auto [sub1, l1, loop1] = side_graph(v1);
  auto [sub2, l2, loop2] = side_graph(v2);
  if (!bridges(sub1.graph).empty())
    throw InvariantViolation("minimal bridge side is not bridgeless");

  FlowAssignment g2 = z3_to_5nzf_impl(sub2.graph, max_nodes, false);
  std::int64_t a = std::abs(g2.value(loop2).a);
  if (a != 1 && a != 2)
    throw InvariantViolation("negative loop value escaped {1,2}");
  FlowAssignment g1 = three_nzf_prescribed(sub1.graph, loop1, static_cast<int>(a), {},
                                           max_nodes);

  Orientation tau0 = default_orientation(g);
  FlowAssignment out(GroupSpec::integer(5), g.edge_count());
  merge_subflow(tau0, sub1, g1, out);
  merge_subflow(tau0, sub2, g2, out);
  // The loop values never map back (the loops exist only in the side
  // graphs); the bridge absorbs them as 2a.
  auto partial_at = [&](Vertex v) {
    std::int64_t acc = 0;
    for (int h : g.half_edges_at(v))
      if (g.edge_of_half(h) != pick) acc += tau0.at(h) * out.value(g.edge_of_half(h)).a;
    return acc;
  };
  int h2 = g.edge(pick).u == v2 ? 2 * pick : 2 * pick + 1;
  std::int64_t c2 = partial_at(v2);
  std::int64_t bridge_val = -tau0.at(h2) * c2;
  if (std::abs(bridge_val) != 2 * a)
    throw InvariantViolation("bridge value is not twice the loop value");
  out.set(pick, {bridge_val, 0});
  int h1 = h2 ^ 1;
  if (partial_at(v1) + tau0.at(h1) * bridge_val != 0) {
    // the appended side loop has no parent image
    for (std::size_t le = 0; le < sub1.edge_to_parent.size(); ++le) {
      EdgeId pe = sub1.edge_to_parent[le];
      out.set(pe, gv_neg(out.group, out.value(pe)));
    }
    if (partial_at(v1) + tau0.at(h1) * bridge_val != 0)
      throw InvariantViolation("bridge join fails on both signs");
  }

  if (!is_k_nzf(g, tau0, out, 5) || !edges_with_abs(out, 3).empty())
    throw InvariantViolation("z3_to_5nzf postcondition failed");
  for (EdgeId e : edges_with_abs(out, 4))
    if (!cut.contains(e))
      throw InvariantViolation("value 4 off the cut edges");
  return out;
}

}  // namespace

FlowAssignment z3_to_5nzf(const SignedGraph& g, long long max_nodes) {
  if (!is_connected(g)) throw std::invalid_argument("z3_to_5nzf: graph must be connected");
  return z3_to_5nzf_impl(g, max_nodes, true);
}

EdgeSet support_bridges(const SignedGraph& g, const EdgeSet& edges) {
  Subgraph sub = spanning_by_edges(g, edges);
  EdgeSet out;
  for (EdgeId lb : bridges(sub.graph)) out.add(sub.edge_to_parent[lb]);
  return out;
}

FlowAssignment z2_to_3flow(const SignedGraph& g, const FlowAssignment& f1,
                           long long max_nodes) {
  if (!is_connected(g)) throw std::invalid_argument("z2_to_3flow: graph must be connected");
  if (f1.group.kind != GroupKind::modulo || f1.group.k != 2)
    throw std::invalid_argument("z2_to_3flow: f1 must be a Z2-flow");
  Orientation tau0 = default_orientation(g);
  if (!is_flow(g, tau0, f1))
    throw std::invalid_argument("z2_to_3flow: f1 is not a flow");
  int neg_in_supp = 0;
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0 && f1.value(e.id).a != 0) ++neg_in_supp;
  if (neg_in_supp % 2 != 0)
    throw std::invalid_argument("z2_to_3flow: supp(f1) holds an odd number of negative edges");

  std::vector<EdgeId> fixed, free;
  for (const EdgeRec& e : g.edges())
    (f1.value(e.id).a != 0 ? fixed : free).push_back(e.id);
  if (free.size() > 24)
    throw BudgetExceeded("z2_to_3flow: candidate support family too large");

  SearchOptions opts;
  opts.max_nodes = max_nodes;
  for (std::size_t extra = 0; extra <= free.size(); ++extra) {
    // lexicographic combinations of `extra` free edges
    std::vector<std::size_t> idx(extra);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      EdgeSet S(std::vector<int>(fixed.begin(), fixed.end()));
      for (std::size_t j : idx) S.add(free[j]);
      EdgeSet sb = support_bridges(g, S);
      SearchConstraints cons;
      cons.support_exact = S;
      for (EdgeId e : S)
        cons.forbidden_abs[e] = sb.contains(e) ? std::set<std::int64_t>{1}
                                               : std::set<std::int64_t>{2};
      if (auto f2 = find_nzf(g, GroupSpec::integer(3), cons, opts)) {
        if (support(*f2) != S || !(edges_with_abs(*f2, 2) == sb) ||
            !is_flow(g, tau0, *f2))
          throw InvariantViolation("z2_to_3flow witness fails its own constraints");
        return *f2;
      }
      // advance combination
      if (extra == 0) break;
      std::size_t k = extra;
      while (k > 0 && idx[k - 1] == free.size() - extra + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InvariantViolation("z2_to_3flow: no support admits the prescribed 3-flow");
}

bool PipelineTrace::all_passed() const {
  for (const AuditItem& item : audit)
    if (!item.pass) return false;
  return true;
}

PipelineTrace build_11flow(const SignedGraph& g, long long max_nodes) {
  if (!is_connected(g)) throw std::invalid_argument("build_11flow: graph must be connected");
  if (!is_flow_admissible(g))
    throw std::invalid_argument("build_11flow: graph is not flow-admissible");

  PipelineTrace trace;
  trace.orientation = default_orientation(g);
  const Orientation& tau0 = trace.orientation;

  SearchOptions opts;
  opts.max_nodes = max_nodes;
  SearchConstraints balanced;
  balanced.balanced = true;
  auto g1g2 = find_nzf(g, GroupSpec::z2z3(), balanced, opts);
  if (!g1g2)
    throw InvariantViolation("flow-admissible graph lacks a balanced Z2xZ3-NZF");
  trace.g1g2 = *g1g2;

  FlowAssignment f1z2(GroupSpec::modulo(2), g.edge_count());
  for (const EdgeRec& e : g.edges()) f1z2.set(e.id, {g1g2->value(e.id).a, 0});
  trace.f1 = z2_to_3flow(g, f1z2, max_nodes);

  // 5-flow on the spanning subgraph carried by the trit support, built per
  // component, zero elsewhere.
  EdgeSet supp2;
  for (const EdgeRec& e : g.edges())
    if (g1g2->value(e.id).b != 0) supp2.add(e.id);
  trace.f2 = FlowAssignment(GroupSpec::integer(5), g.edge_count());
  Subgraph span = spanning_by_edges(g, supp2);
  std::vector<int> comp = component_ids(span.graph);
  int ncomp = component_count(span.graph);
  for (int c = 0; c < ncomp; ++c) {
    VertexSet verts;
    for (Vertex v = 0; v < span.graph.vertex_count(); ++v)
      if (comp[v] == c) verts.add(v);
    Subgraph piece = induced_by_vertices(span.graph, verts);
    if (piece.graph.edge_count() == 0) continue;
    FlowAssignment f5 = z3_to_5nzf(piece.graph, max_nodes);
    // compose the two mappings back to g
    Orientation piece_tau = default_orientation(piece.graph);
    for (int le = 0; le < piece.graph.edge_count(); ++le) {
      EdgeId span_e = piece.edge_to_parent[le];
      EdgeId pe = span.edge_to_parent[span_e];
      GroupValue val = f5.value(le);
      if (piece_tau.at(2 * le) != tau0.at(2 * pe)) val = gv_neg(f5.group, val);
      trace.f2.set(pe, val);
    }
  }
  if (!(support(trace.f2) == supp2) || !is_flow(g, tau0, trace.f2))
    throw InvariantViolation("5-flow support does not match the trit support");

  trace.f = FlowAssignment(GroupSpec::integer(11), g.edge_count());
  for (const EdgeRec& e : g.edges())
    trace.f.set(e.id, {3 * trace.f1.value(e.id).a + trace.f2.value(e.id).a, 0});

  bool nz = true, le10 = true, ne9 = true, b10 = true;
  EdgeSet b1 = support_bridges(g, support(trace.f1));
  EdgeSet b2 = support_bridges(g, support(trace.f2));
  for (const EdgeRec& e : g.edges()) {
    std::int64_t x = std::abs(trace.f.value(e.id).a);
    if (x == 0) nz = false;
    if (x > 10) le10 = false;
    if (x == 9) ne9 = false;
    if (x == 10 && !(b1.contains(e.id) && b2.contains(e.id))) b10 = false;
  }
  if (!is_flow(g, tau0, trace.f)) nz = false;
  trace.audit = {
      {"nowhere-zero", nz},
      {"abs-le-10", le10},
      {"abs-ne-9", ne9},
      {"abs-10-on-shared-support-bridges", b10},
  };
  return trace;
}

}  // namespace signedflow
