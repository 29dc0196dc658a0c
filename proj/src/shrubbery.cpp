#include "signedflow/shrubbery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace signedflow {

namespace {

bool handle_connected(const SignedGraph& g, const SubgraphHandle& h) {
  if (h.vertices.empty()) return false;
  std::vector<char> edge_in(g.edge_count(), 0);
  for (EdgeId e : h.edges) edge_in[e] = 1;
  VertexSet seen;
  std::vector<Vertex> stack{*h.vertices.begin()};
  seen.add(stack[0]);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (int hh : g.half_edges_at(x)) {
      if (!edge_in[g.edge_of_half(hh)]) continue;
      Vertex y = g.vertex_of_half(hh ^ 1);
      if (!seen.contains(y)) {
        seen.add(y);
        stack.push_back(y);
      }
    }
  }
  return seen == h.vertices;
}

}  // namespace

ChordPartition chord_partition(const SignedGraph& g, const SubgraphHandle& h) {
  if (h.parent != &g) throw std::invalid_argument("subgraph handle of another graph");
  if (!handle_connected(g, h))
    throw std::invalid_argument("chord partition needs a connected subgraph");
  ChordPartition out;
  for (const EdgeRec& e : g.edges()) {
    if (h.edges.contains(e.id)) continue;
    if (!h.vertices.contains(e.u) || !h.vertices.contains(e.v)) continue;
    out.chords.add(e.id);
    EdgeSet with = h.edges;
    with.add(e.id);
    if (is_balanced_subset(g, with))
      out.balanced_chords.add(e.id);
    else
      out.unbalanced_chords.add(e.id);
  }
  return out;
}

bool is_removable_circuit(const SignedGraph& g, const Circuit& c) {
  if (circuit_sign(g, c) < 0) return true;
  SubgraphHandle h = SubgraphHandle::of_edges(g, c.edge_set());
  ChordPartition cp = chord_partition(g, h);
  int two_verts = 0;
  for (Vertex v : c.vertex_set())
    if (g.delta_degree(v) == 2) ++two_verts;  // V2 per the |delta| degree
  return static_cast<int>(cp.unbalanced_chords.size()) + two_verts >= 2;
}

namespace {

struct StepBudget {
  long long left;
  void spend(long long n = 1) {
    left -= n;
    if (left < 0) throw BudgetExceeded("is_shrubbery: step budget exhausted");
  }
};

bool vertex_subset_connected(const SignedGraph& g, const std::vector<Vertex>& verts) {
  if (verts.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : verts) in[v] = 1;
  std::vector<Vertex> stack{verts[0]};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[verts[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (int h : g.half_edges_at(x)) {
      Vertex y = g.vertex_of_half(h ^ 1);
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == verts.size();
}

}  // namespace

ShrubberyVerdict is_shrubbery(const SignedGraph& g, long long max_steps) {
  StepBudget budget{max_steps};
  ShrubberyVerdict out;

  // S1
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3) {
      out.ok = false;
      out.violated = "S1";
      out.witness_vertices.add(v);
      return out;
    }

  int m = g.edge_count();
  int n = g.vertex_count();

  // S2: subgraphs with every touched vertex of degree exactly 3.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    budget.spend();
    std::vector<int> deg(n, 0);
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) {
        deg[g.edge(e).u] += 1;
        deg[g.edge(e).v] += 1;
      }
    bool cubic = true;
    for (Vertex v = 0; v < n && cubic; ++v)
      if (deg[v] != 0 && deg[v] != 3) cubic = false;
    if (!cubic) continue;
    EdgeSet sub;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) sub.add(e);
    if (!is_flow_admissible(spanning_by_edges(g, sub).graph)) {
      out.ok = false;
      out.violated = "S2";
      out.witness_edges = sub;
      return out;
    }
  }

  // S3: connected balanced subgraphs H on >= 2 vertices.
  for (std::uint64_t vmask = 1; vmask < (std::uint64_t{1} << n); ++vmask) {
    budget.spend();
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < n; ++v)
      if ((vmask >> v) & 1) verts.push_back(v);
    if (verts.size() < 2) continue;
    if (!vertex_subset_connected(g, verts)) continue;
    std::vector<char> in(n, 0);
    for (Vertex v : verts) in[v] = 1;
    int fixed = 0;  // |delta(W)| + sum (3 - d(x))
    for (Vertex v : verts) fixed += 3 - g.degree(v);
    std::vector<EdgeId> inner;
    for (const EdgeRec& e : g.edges()) {
      bool ui = in[e.u], vi = in[e.v];
      if (ui && vi)
        inner.push_back(e.id);
      else if (ui || vi)
        ++fixed;
    }
    if (fixed >= 4) continue;
    // every connected balanced spanning H = (W, F); violation needs few
    // unbalanced chords
    for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << inner.size()); ++emask) {
      budget.spend();
      SubgraphHandle h;
      h.parent = &g;
      for (Vertex v : verts) h.vertices.add(v);
      for (std::size_t j = 0; j < inner.size(); ++j)
        if ((emask >> j) & 1) h.edges.add(inner[j]);
      if (!handle_connected(g, h)) continue;
      if (!is_balanced_subset(g, h.edges)) continue;
      ChordPartition cp = chord_partition(g, h);
      if (fixed + 2 * static_cast<int>(cp.unbalanced_chords.size()) < 4) {
        out.ok = false;
        out.violated = "S3";
        out.witness_vertices = h.vertices;
        out.witness_edges = h.edges;
        return out;
      }
    }
  }

  // S4
  for (const Circuit& c : all_circuits(g)) {
    budget.spend();
    if (c.length() == 4 && circuit_sign(g, c) > 0) {
      out.ok = false;
      out.violated = "S4";
      out.witness_edges = c.edge_set();
      return out;
    }
  }
  return out;
}

bool verify_nzw(const SignedGraph& g, const Orientation& tau, const FlowAssignment& w) {
  if (w.group.kind != GroupKind::z2z3)
    throw std::invalid_argument("watering values live in Z2xZ3");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3)
      throw std::invalid_argument("watering undefined at degree > 3");
  if (static_cast<int>(w.values.size()) != g.edge_count())
    throw std::invalid_argument("watering not defined on every edge");
  for (const GroupValue& x : w.values) {
    if (x.a < 0 || x.a > 1 || x.b < 0 || x.b > 2) return false;
    if (gv_is_zero(x)) return false;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    GroupValue b = boundary(g, tau, w, v);
    // the rule is keyed by |delta(v)|; loops fall outside it, so a
    // loops-only vertex carries no condition
    int d = g.delta_degree(v);
    if (d == 3) {
      if (!gv_is_zero(b)) return false;
    } else if (d == 1 || d == 2) {
      if (b.a != 0 || b.b == 0) return false;
    }
  }
  return true;
}

FlowAssignment unbalanced_eta(const SignedGraph& g, const Orientation& tau,
                              const Circuit& c, Vertex u) {
  std::size_t k = c.length();
  std::size_t r = k;
  for (std::size_t j = 0; j < k; ++j)
    if (c.verts[j] == u) r = j;
  if (r == k) throw std::invalid_argument("vertex not on the circuit");

  auto tail_half = [&](std::size_t j) {
    std::size_t jj = (j + r) % k;
    return 2 * c.edges[jj] + c.tail_side[jj];
  };
  auto head_half = [&](std::size_t j) {
    std::size_t jj = (j + r) % k;
    return 2 * c.edges[jj] + (1 - c.tail_side[jj]);
  };

  // x_j = lambda_j * x_0 by zeroing each interior vertex; the equation at u
  // determines x_0 unless the wrap coefficient degenerates.
  std::vector<int> lambda(k, 1);
  for (std::size_t j = 1; j < k; ++j)
    lambda[j] = -tau.at(head_half(j - 1)) * tau.at(tail_half(j)) * lambda[j - 1];
  int wrap = tau.at(tail_half(0)) + tau.at(head_half(k - 1)) * lambda[k - 1];
  if (wrap % 3 == 0)
    throw std::invalid_argument("balanced circuit: the eta chase is singular");
  std::int64_t x0 = ((wrap % 3) + 3) % 3 == 2 ? 2 : 1;

  GroupSpec z3 = GroupSpec::modulo(3);
  FlowAssignment eta(z3, g.edge_count());
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t jj = (j + r) % k;
    eta.set(c.edges[jj], gv_normalize(z3, {lambda[j] * x0, 0}));
  }
  for (std::size_t j = 0; j < k; ++j) {
    GroupValue b = boundary(g, tau, eta, c.verts[j]);
    // only circuit edges carry eta, so stray incident chords contribute 0
    std::int64_t want = c.verts[j] == u ? 1 : 0;
    if (b.a != want)
      throw InvariantViolation("eta chase failed its boundary contract");
  }
  return eta;
}

bool has_negative_loop(const SignedGraph& g) {
  for (const EdgeRec& e : g.edges())
    if (e.u == e.v && e.sign < 0) return true;
  return false;
}

namespace {

void collect_paths(const SignedGraph& g, Vertex at, Vertex target,
                   std::vector<EdgeId>& epath, std::vector<char>& used_vertex,
                   std::vector<std::vector<EdgeId>>& out) {
  for (int h : g.half_edges_at(at)) {
    EdgeId e = g.edge_of_half(h);
    if (g.is_loop(e)) continue;
    if (std::find(epath.begin(), epath.end(), e) != epath.end()) continue;
    Vertex nxt = g.vertex_of_half(h ^ 1);
    if (nxt == target) {
      epath.push_back(e);
      out.push_back(epath);
      epath.pop_back();
      continue;
    }
    if (used_vertex[nxt]) continue;
    used_vertex[nxt] = 1;
    epath.push_back(e);
    collect_paths(g, nxt, target, epath, used_vertex, out);
    epath.pop_back();
    used_vertex[nxt] = 0;
  }
}

}  // namespace

bool has_unbalanced_theta(const SignedGraph& g) {
  int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      std::vector<std::vector<EdgeId>> paths;
      std::vector<EdgeId> epath;
      std::vector<char> used(n, 0);
      used[a] = used[b] = 1;
      collect_paths(g, a, b, epath, used, paths);
      if (paths.size() < 3) continue;
      // internal vertex sets per path
      std::vector<VertexSet> internals;
      for (const auto& p : paths) {
        VertexSet s;
        for (EdgeId e : p) {
          if (g.edge(e).u != a && g.edge(e).u != b) s.add(g.edge(e).u);
          if (g.edge(e).v != a && g.edge(e).v != b) s.add(g.edge(e).v);
        }
        internals.push_back(s);
      }
      auto sign_of = [&](const std::vector<EdgeId>& p) {
        int s = 1;
        for (EdgeId e : p) s *= g.edge(e).sign;
        return s;
      };
      for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          if (!internals[i].set_intersect(internals[j]).empty()) continue;
          for (std::size_t l = j + 1; l < paths.size(); ++l) {
            if (!internals[i].set_intersect(internals[l]).empty()) continue;
            if (!internals[j].set_intersect(internals[l]).empty()) continue;
            int si = sign_of(paths[i]), sj = sign_of(paths[j]), sl = sign_of(paths[l]);
            if (si != sj || sj != sl) return true;
          }
        }
    }
  }
  return false;
}

namespace {

struct ExtendContext {
  const SignedGraph& g;
  VertexSet on_c;
  EdgeSet circuit_edges;
  std::vector<char> vertex_on_c;
  std::vector<char> edge_role;  // 0 rest, 1 circuit, 2 chord, 3 delta

  explicit ExtendContext(const SignedGraph& g) : g(g) {}
};

constexpr char kRest = 0, kCircuit = 1, kChord = 2, kDelta = 3;

// Seeds (0, x) values on the edges leaving the circuit so every outside
// vertex meets its watering boundary target; each delta edge has exactly
// one outside end, so vertices are independent.
void seed_delta_edges(const ExtendContext& ctx, const Orientation& tau,
                      FlowAssignment& f) {
  const SignedGraph& g = ctx.g;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (ctx.vertex_on_c[v]) continue;
    std::vector<int> delta_halves;
    std::int64_t existing = 0;
    for (int h : g.half_edges_at(v)) {
      EdgeId e = g.edge_of_half(h);
      if (ctx.edge_role[e] == kDelta)
        delta_halves.push_back(h);
      else
        existing += tau.at(h) * f.value(e).b;
    }
    if (delta_halves.empty()) continue;
    int d = g.delta_degree(v);
    std::size_t k = delta_halves.size();
    bool done = false;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k) && !done; ++pick) {
      std::int64_t total = existing;
      for (std::size_t j = 0; j < k; ++j) {
        std::int64_t x = ((pick >> j) & 1) ? 2 : 1;
        total += tau.at(delta_halves[j]) * x;
      }
      std::int64_t r = ((total % 3) + 3) % 3;
      bool good = d == 3 ? (r == 0) : (r != 0);
      if (!good) continue;
      for (std::size_t j = 0; j < k; ++j) {
        std::int64_t x = ((pick >> j) & 1) ? 2 : 1;
        f.set(g.edge_of_half(delta_halves[j]), {0, x});
      }
      done = true;
    }
    if (!done)
      throw InvariantViolation("delta seeding has no solution at an outside vertex");
  }
}

std::int64_t trit_boundary(const SignedGraph& g, const Orientation& tau,
                           const FlowAssignment& f, Vertex v) {
  std::int64_t acc = 0;
  for (int h : g.half_edges_at(v)) acc += tau.at(h) * f.value(g.edge_of_half(h)).b;
  return ((acc % 3) + 3) % 3;
}

}  // namespace

FlowAssignment extend_nzw_over_circuit(const SignedGraph& g, const Circuit& c,
                                       const FlowAssignment& w_rest) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3)
      throw std::invalid_argument("watering undefined at degree > 3");
  // validate the circuit structure against g
  std::size_t k = c.length();
  if (k == 0 || c.verts.size() != k || c.tail_side.size() != k)
    throw std::invalid_argument("malformed circuit");
  for (std::size_t j = 0; j < k; ++j) {
    EdgeId e = c.edges[j];
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("circuit edge out of range");
    Vertex tail = g.vertex_of_half(2 * e + c.tail_side[j]);
    Vertex head = g.vertex_of_half(2 * e + (1 - c.tail_side[j]));
    if (tail != c.verts[j] || head != c.verts[(j + 1) % k])
      throw std::invalid_argument("circuit walk does not match the graph");
  }
  if (!is_removable_circuit(g, c))
    throw std::invalid_argument("circuit is not removable");

  ExtendContext ctx(g);
  ctx.on_c = c.vertex_set();
  ctx.circuit_edges = c.edge_set();
  ctx.vertex_on_c.assign(g.vertex_count(), 0);
  for (Vertex v : ctx.on_c) ctx.vertex_on_c[v] = 1;
  ctx.edge_role.assign(g.edge_count(), kRest);
  for (const EdgeRec& e : g.edges()) {
    if (ctx.circuit_edges.contains(e.id))
      ctx.edge_role[e.id] = kCircuit;
    else if (ctx.vertex_on_c[e.u] && ctx.vertex_on_c[e.v])
      ctx.edge_role[e.id] = kChord;
    else if (ctx.vertex_on_c[e.u] || ctx.vertex_on_c[e.v])
      ctx.edge_role[e.id] = kDelta;
  }

  // w_rest must be an NZW of g - V(C): nonzero exactly on the rest edges,
  // right boundaries at every outside vertex within the rest subgraph.
  if (w_rest.group.kind != GroupKind::z2z3)
    throw std::invalid_argument("watering values live in Z2xZ3");
  if (static_cast<int>(w_rest.values.size()) != g.edge_count())
    throw std::invalid_argument("w_rest must be indexed by the parent graph");
  Orientation tau0 = default_orientation(g);
  {
    Subgraph rest = delete_vertices(g, ctx.on_c);
    FlowAssignment local(GroupSpec::z2z3(), rest.graph.edge_count());
    Orientation local_tau = default_orientation(rest.graph);
    for (int le = 0; le < rest.graph.edge_count(); ++le) {
      GroupValue v = w_rest.value(rest.edge_to_parent[le]);
      if (local_tau.at(2 * le) != tau0.at(2 * rest.edge_to_parent[le]))
        v = gv_neg(w_rest.group, v);
      local.set(le, v);
    }
    if (!verify_nzw(rest.graph, local_tau, local))
      throw std::invalid_argument("w_rest is not an NZW of g - V(C)");
    for (const EdgeRec& e : g.edges())
      if (ctx.edge_role[e.id] != kRest && !gv_is_zero(w_rest.value(e.id)))
        throw std::invalid_argument("w_rest must vanish off g - V(C)");
  }

  SubgraphHandle hc = SubgraphHandle::of_edges(g, ctx.circuit_edges);
  ChordPartition cp = chord_partition(g, hc);
  bool unbalanced = circuit_sign(g, c) < 0;

  FlowAssignment f = w_rest;
  for (EdgeId e : ctx.circuit_edges) f.set(e, {1, 0});

  if (unbalanced) {
    if (!cp.balanced_chords.empty())
      throw InvariantViolation("unbalanced circuit with a balanced chord");
    for (EdgeId e : cp.unbalanced_chords) f.set(e, {0, 1});
    seed_delta_edges(ctx, tau0, f);
    for (Vertex u : ctx.on_c) {
      std::int64_t cur = trit_boundary(g, tau0, f, u);
      std::int64_t target = g.delta_degree(u) == 3 ? 0 : 1;
      std::int64_t add = ((target - cur) % 3 + 3) % 3;
      if (add == 0) continue;
      FlowAssignment eta = unbalanced_eta(g, tau0, c, u);
      for (EdgeId e : ctx.circuit_edges) {
        GroupValue v = f.value(e);
        v.b = ((v.b + add * eta.value(e).a) % 3 + 3) % 3;
        f.values[e] = v;
      }
    }
  } else {
    // Switch the circuit positive; the values form an NZW of the switched
    // graph iff they form one of g, so all work happens switched.
    std::vector<char> flip(g.vertex_count(), 0);
    {
      std::vector<int> pot(g.vertex_count(), 0);
      pot[c.verts[0]] = 1;
      for (std::size_t j = 0; j + 1 < k; ++j)
        pot[c.verts[j + 1]] = pot[c.verts[j]] * g.edge(c.edges[j]).sign;
      for (Vertex v : ctx.on_c) flip[v] = pot[v] < 0;
    }
    SignedGraph gsw(g.vertex_count());
    for (const EdgeRec& e : g.edges()) {
      int s = e.sign;
      if (e.u != e.v && (flip[e.u] != flip[e.v])) s = -s;
      gsw.add_edge(e.u, e.v, s);
    }
    Orientation tsw = tau0;
    for (const EdgeRec& e : g.edges()) {
      if (flip[e.u]) tsw.tau[2 * e.id] = -tsw.tau[2 * e.id];
      if (flip[e.v]) tsw.tau[2 * e.id + 1] = -tsw.tau[2 * e.id + 1];
    }
    if (!orientation_valid(gsw, tsw))
      throw InvariantViolation("switched orientation is inconsistent");
    for (EdgeId e : ctx.circuit_edges)
      if (gsw.edge(e).sign < 0)
        throw InvariantViolation("switch failed to make the circuit positive");

    for (EdgeId e : cp.balanced_chords) {
      if (gsw.edge(e).sign < 0)
        throw InvariantViolation("balanced chord negative after the switch");
      f.set(e, {0, 1});
    }
    seed_delta_edges(ctx, tsw, f);

    // One Z3 equation ties the chord values and the 2-vertex targets.
    std::vector<EdgeId> uvars(cp.unbalanced_chords.begin(), cp.unbalanced_chords.end());
    std::vector<Vertex> bvars;
    for (Vertex v : ctx.on_c)
      if (g.delta_degree(v) == 2) bvars.push_back(v);
    std::size_t nv = uvars.size() + bvars.size();
    if (nv < 2) throw InvariantViolation("balanced removable circuit lacks variables");
    std::vector<std::int64_t> ucoef(uvars.size());
    for (std::size_t j = 0; j < uvars.size(); ++j) {
      EdgeId e = uvars[j];
      if (gsw.edge(e).sign > 0)
        throw InvariantViolation("unbalanced chord positive after the switch");
      ucoef[j] = tsw.at(2 * e) + tsw.at(2 * e + 1);  // +-2
    }
    std::int64_t base = 0;
    for (Vertex v : ctx.on_c) base += trit_boundary(gsw, tsw, f, v);

    bool solved = false;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << nv) && !solved; ++pick) {
      std::int64_t lhs = base, rhs = 0;
      for (std::size_t j = 0; j < uvars.size(); ++j) {
        std::int64_t alpha = ((pick >> j) & 1) ? 2 : 1;
        lhs += ucoef[j] * alpha;
      }
      for (std::size_t j = 0; j < bvars.size(); ++j) {
        std::int64_t beta = ((pick >> (uvars.size() + j)) & 1) ? 2 : 1;
        rhs += beta;
      }
      if (((lhs - rhs) % 3 + 3) % 3 != 0) continue;
      solved = true;
      for (std::size_t j = 0; j < uvars.size(); ++j)
        f.set(uvars[j], {0, ((pick >> j) & 1) ? 2 : 1});
      // circuit graph is ordinary after the switch: solve the residual
      // boundary on it
      Subgraph circ = induced_by_vertices(gsw, ctx.on_c);
      std::vector<EdgeId> back;
      SignedGraph cg(circ.graph.vertex_count());
      for (int le = 0; le < circ.graph.edge_count(); ++le) {
        if (!ctx.circuit_edges.contains(circ.edge_to_parent[le])) continue;
        cg.add_edge(circ.graph.edge(le).u, circ.graph.edge(le).v, 1);
        back.push_back(circ.edge_to_parent[le]);
      }
      Orientation cg_tau;
      cg_tau.tau.resize(2 * cg.edge_count());
      for (int le = 0; le < cg.edge_count(); ++le) {
        cg_tau.tau[2 * le] = tsw.at(2 * back[le]);
        cg_tau.tau[2 * le + 1] = tsw.at(2 * back[le] + 1);
      }
      std::vector<GroupValue> beta(cg.vertex_count());
      GroupSpec z3 = GroupSpec::modulo(3);
      for (int lv = 0; lv < cg.vertex_count(); ++lv) {
        Vertex pv = circ.vertex_to_parent[lv];
        std::int64_t target = 0;
        for (std::size_t j = 0; j < bvars.size(); ++j)
          if (bvars[j] == pv) target = ((pick >> (uvars.size() + j)) & 1) ? 2 : 1;
        std::int64_t cur = trit_boundary(gsw, tsw, f, pv);
        beta[lv] = gv_normalize(z3, {target - cur, 0});
      }
      FlowAssignment phi = solve_boundary(cg, cg_tau, z3, beta);
      for (int le = 0; le < cg.edge_count(); ++le) {
        EdgeId pe = back[le];
        GroupValue v = f.value(pe);
        v.b = ((v.b + phi.value(le).a) % 3 + 3) % 3;
        f.values[pe] = v;
      }
    }
    if (!solved)
      throw InvariantViolation("no chord/target assignment balances the circuit sum");
  }

  if (!verify_nzw(g, tau0, f))
    throw InvariantViolation("extension failed the watering check");
  EdgeSet want_bits;
  for (const EdgeRec& e : g.edges())
    if (w_rest.value(e.id).a == 1) want_bits.add(e.id);
  want_bits = want_bits.set_union(ctx.circuit_edges);
  EdgeSet got_bits;
  for (const EdgeRec& e : g.edges())
    if (f.value(e.id).a == 1) got_bits.add(e.id);
  if (!(got_bits == want_bits))
    throw InvariantViolation("bit support must grow by exactly the circuit");
  return f;
}

}  // namespace signedflow
