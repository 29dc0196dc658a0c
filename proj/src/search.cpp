#include "signedflow/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace signedflow {

std::vector<EdgeId> bfs_edge_order(const SignedGraph& g) {
  std::vector<EdgeId> order;
  std::vector<char> edge_seen(g.edge_count(), 0), vert_seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (vert_seen[s]) continue;
    std::deque<Vertex> queue{s};
    vert_seen[s] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      std::vector<EdgeId> inc;
      for (int h : g.half_edges_at(v)) inc.push_back(g.edge_of_half(h));
      std::sort(inc.begin(), inc.end());
      inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
      for (EdgeId e : inc) {
        if (!edge_seen[e]) {
          edge_seen[e] = 1;
          order.push_back(e);
        }
        Vertex w = g.other_end(e, v);
        if (!vert_seen[w]) {
          vert_seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

namespace {

// Per-edge boundary footprint: (vertex, +-1) per non-loop half, or a single
// (vertex, tau(h)+tau(h^)) entry for a loop.
struct EdgeFootprint {
  std::vector<std::pair<Vertex, int>> terms;
};

std::vector<EdgeFootprint> footprints(const SignedGraph& g, const Orientation& tau) {
  std::vector<EdgeFootprint> out(g.edge_count());
  for (const EdgeRec& e : g.edges()) {
    if (e.u == e.v) {
      out[e.id].terms = {{e.u, tau.at(2 * e.id) + tau.at(2 * e.id + 1)}};
    } else {
      out[e.id].terms = {{e.u, tau.at(2 * e.id)}, {e.v, tau.at(2 * e.id + 1)}};
    }
  }
  return out;
}

// True when coef*x vanishes for every group element x.
bool coef_annihilates(const GroupSpec& group, int coef) {
  if (coef == 0) return true;
  if (std::abs(coef) == 2 && group.kind == GroupKind::modulo && group.k == 2)
    return true;
  return false;
}

GroupValue gv_scale(const GroupSpec& group, int coef, GroupValue x) {
  GroupValue acc{0, 0};
  for (int i = std::abs(coef); i > 0; --i) acc = gv_add(group, acc, x);
  if (coef < 0) acc = gv_neg(group, acc);
  return acc;
}

bool lex_le(GroupValue a, GroupValue b) {
  return a.a != b.a ? a.a < b.a : a.b <= b.b;
}

struct FlowSearch {
  const SignedGraph& g;
  GroupSpec group;
  const SearchConstraints& cons;
  Orientation tau;
  std::vector<EdgeId> order;
  long long max_nodes;
  long long nodes = 0;

  std::vector<EdgeFootprint> foot;
  std::vector<std::vector<GroupValue>> domain;  // by order position
  std::vector<GroupValue> partial;              // per vertex
  std::vector<int> remaining;                   // unassigned incident edges
  std::vector<std::int64_t> capacity;           // integer groups only
  FlowAssignment assign;
  bool integer;

  FlowSearch(const SignedGraph& g, const GroupSpec& group,
             const SearchConstraints& cons, const SearchOptions& opts)
      : g(g), group(group), cons(cons), assign(group, g.edge_count()) {
    tau = opts.tau ? *opts.tau : default_orientation(g);
    if (!orientation_valid(g, tau))
      throw std::invalid_argument("invalid orientation for this graph");
    order = opts.order ? *opts.order : bfs_edge_order(g);
    if (static_cast<int>(order.size()) != g.edge_count())
      throw std::invalid_argument("edge order must cover every edge exactly once");
    max_nodes = opts.max_nodes;
    integer = group.kind == GroupKind::integer;
    foot = footprints(g, tau);
    validate_constraints();
    build_domains();
    partial.assign(g.vertex_count(), GroupValue{});
    remaining.assign(g.vertex_count(), 0);
    capacity.assign(g.vertex_count(), 0);
    for (const EdgeFootprint& fp : foot)
      for (auto [v, c] : fp.terms) {
        remaining[v] += 1;
        if (integer) capacity[v] += std::abs(c) * std::int64_t(group.k - 1);
      }
  }

  void validate_constraints() {
    for (auto& [e, val] : cons.prescribed)
      if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("prescription references unknown edge");
    for (auto& [e, vals] : cons.forbidden_abs) {
      if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("forbidden-abs references unknown edge");
      if (!integer)
        throw std::invalid_argument("forbidden absolute values need integer flows");
    }
    if (cons.balanced && group.kind != GroupKind::z2z3)
      throw std::invalid_argument("balancedness constraint needs z2z3");
    if (cons.support_superset && cons.support_exact)
      throw std::invalid_argument("choose one support constraint");
    auto check_set = [&](const std::optional<EdgeSet>& s) {
      if (!s) return;
      for (EdgeId e : *s)
        if (e < 0 || e >= g.edge_count())
          throw std::invalid_argument("support constraint references unknown edge");
    };
    check_set(cons.support_superset);
    check_set(cons.support_exact);
  }

  void build_domains() {
    std::vector<GroupValue> nonzero = gv_nonzero_elements(group);
    domain.resize(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      EdgeId e = order[pos];
      std::vector<GroupValue> vals;
      bool zero_ok, nonzero_ok = true;
      if (cons.support_exact) {
        zero_ok = !cons.support_exact->contains(e);
        nonzero_ok = cons.support_exact->contains(e);
      } else if (cons.support_superset) {
        zero_ok = !cons.support_superset->contains(e);
      } else {
        zero_ok = false;
      }
      if (zero_ok) vals.push_back(GroupValue{});
      if (nonzero_ok) vals.insert(vals.end(), nonzero.begin(), nonzero.end());
      if (auto it = cons.prescribed.find(e); it != cons.prescribed.end()) {
        GroupValue want = gv_normalize(group, it->second);
        std::erase_if(vals, [&](GroupValue v) { return !(v == want); });
      }
      if (auto it = cons.forbidden_abs.find(e); it != cons.forbidden_abs.end()) {
        std::erase_if(vals,
                      [&](GroupValue v) { return it->second.count(std::abs(v.a)) > 0; });
      }
      bool free_edge = true;
      for (auto [v, c] : foot[e].terms)
        if (!coef_annihilates(group, c)) free_edge = false;
      if (free_edge && vals.size() > 1) vals.resize(1);
      domain[pos] = std::move(vals);
    }
    // f and -f are interchangeable when nothing pins signs: restrict the
    // first branching edge to the canonical half.
    if (cons.prescribed.empty()) {
      for (auto& vals : domain) {
        if (vals.size() < 2) continue;
        std::erase_if(vals, [&](GroupValue v) { return !lex_le(v, gv_neg(group, v)); });
        break;
      }
    }
  }

  bool final_checks() const {
    if (cons.balanced && !is_balanced_z2z3(g, assign)) return false;
    return true;
  }

  bool dfs(std::size_t pos) {
    if (pos == order.size()) return final_checks();
    EdgeId e = order[pos];
    for (GroupValue val : domain[pos]) {
      if (++nodes > max_nodes) throw BudgetExceeded("find_nzf: node budget exhausted");
      bool ok = true;
      assign.values[e] = val;
      for (auto [v, c] : foot[e].terms) {
        partial[v] = gv_add(group, partial[v], gv_scale(group, c, val));
        remaining[v] -= 1;
        if (integer) capacity[v] -= std::abs(c) * std::int64_t(group.k - 1);
      }
      for (auto [v, c] : foot[e].terms) {
        if (remaining[v] == 0 && !gv_is_zero(partial[v])) ok = false;
        if (integer && std::abs(partial[v].a) > capacity[v]) ok = false;
      }
      if (ok && dfs(pos + 1)) return true;
      for (auto [v, c] : foot[e].terms) {
        partial[v] = gv_add(group, partial[v], gv_neg(group, gv_scale(group, c, val)));
        remaining[v] += 1;
        if (integer) capacity[v] += std::abs(c) * std::int64_t(group.k - 1);
      }
    }
    assign.values[e] = GroupValue{};
    return false;
  }
};

bool component_is_balanced(const SignedGraph& g, const std::vector<int>& comp, int c) {
  VertexSet keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (comp[v] == c) keep.add(v);
  return is_balanced(induced_by_vertices(g, keep).graph);
}

}  // namespace

std::optional<FlowAssignment> find_nzf(const SignedGraph& g, const GroupSpec& group,
                                       const SearchConstraints& constraints,
                                       const SearchOptions& options) {
  FlowSearch search(g, group, constraints, options);
  if (search.dfs(0)) return search.assign;
  return std::nullopt;
}

std::optional<int> min_flow_number(const SignedGraph& g, int k_max,
                                   long long max_nodes) {
  if (k_max < 2) throw std::invalid_argument("min_flow_number needs k_max >= 2");
  for (int k = 2; k <= k_max; ++k) {
    SearchOptions opts;
    opts.max_nodes = max_nodes;
    if (find_nzf(g, GroupSpec::integer(k), {}, opts)) return k;
  }
  return std::nullopt;
}

bool is_flow_admissible(const SignedGraph& g) {
  std::vector<int> comp = component_ids(g);
  int ncomp = component_count(g);
  for (int c = 0; c < ncomp; ++c) {
    VertexSet keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c) keep.add(v);
    Subgraph sub = induced_by_vertices(g, keep);
    if (negativeness(sub.graph) == 1) return false;
    for (EdgeId b : bridges(sub.graph)) {
      EdgeSet rest;
      for (EdgeId e = 0; e < sub.graph.edge_count(); ++e)
        if (e != b) rest.add(e);
      Subgraph cut = spanning_by_edges(sub.graph, rest);
      std::vector<int> cut_comp = component_ids(cut.graph);
      int side_u = cut_comp[sub.graph.edge(b).u];
      int side_v = cut_comp[sub.graph.edge(b).v];
      if (component_is_balanced(cut.graph, cut_comp, side_u) ||
          component_is_balanced(cut.graph, cut_comp, side_v))
        return false;
    }
  }
  return true;
}

namespace {

// Contraction state for deletion-contraction counting: vertices collapse to
// the least vertex of their merged class.
struct DcState {
  const SignedGraph& g;
  const Orientation& tau;
  GroupSpec group;
  const EdgeSet& T;
  std::map<EdgeId, GroupValue> gamma;
  std::unordered_map<std::string, long long> memo;

  long long count(std::vector<int> rep, std::vector<char> alive) {
    // Smallest live non-T edge drives the recursion.
    EdgeId pick = -1;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (alive[e] && !T.contains(e)) {
        pick = e;
        break;
      }
    if (pick < 0) return base_case(rep, alive);

    std::string key = state_key(rep, alive);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long long result;
    Vertex ru = find(rep, g.edge(pick).u), rv = find(rep, g.edge(pick).v);
    std::vector<char> deleted = alive;
    deleted[pick] = 0;
    if (ru == rv) {
      // loop: any nonzero value extends every count
      result = (group.order() - 1) * count(rep, deleted);
    } else if (is_cut_edge(rep, alive, pick)) {
      result = 0;
    } else {
      std::vector<int> merged = rep;
      Vertex lo = std::min(ru, rv), hi = std::max(ru, rv);
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (find(merged, v) == hi) merged[v] = lo;
      result = count(merged, deleted) - count(rep, deleted);
    }
    memo.emplace(std::move(key), result);
    return result;
  }

  static Vertex find(const std::vector<int>& rep, Vertex v) {
    while (rep[v] != v) v = rep[v];
    return v;
  }

  bool is_cut_edge(const std::vector<int>& rep, const std::vector<char>& alive,
                   EdgeId cand) const {
    // Connectivity of the contracted graph with cand removed, limited to the
    // vertex classes touched by live edges.
    Vertex a = find(rep, g.edge(cand).u), b = find(rep, g.edge(cand).v);
    std::map<Vertex, std::vector<Vertex>> adj;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[e] || e == cand) continue;
      Vertex x = find(rep, g.edge(e).u), y = find(rep, g.edge(e).v);
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::set<Vertex> seen{a};
    std::vector<Vertex> stack{a};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      if (x == b) return false;
      for (Vertex y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    return true;
  }

  long long base_case(const std::vector<int>& rep, const std::vector<char>& alive) {
    // All live edges carry gamma; count 1 iff it is an A-NZF here.
    std::map<Vertex, GroupValue> bnd;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[e]) continue;
      GroupValue val = gv_normalize(group, gamma.at(e));
      if (gv_is_zero(val)) return 0;
      Vertex ru = find(rep, g.edge(e).u), rv = find(rep, g.edge(e).v);
      GroupValue cu = tau.at(2 * e) < 0 ? gv_neg(group, val) : val;
      GroupValue cv = tau.at(2 * e + 1) < 0 ? gv_neg(group, val) : val;
      bnd[ru] = gv_add(group, bnd[ru], cu);
      bnd[rv] = gv_add(group, bnd[rv], cv);
    }
    for (auto& [v, x] : bnd)
      if (!gv_is_zero(x)) return 0;
    return 1;
  }

  std::string state_key(const std::vector<int>& rep,
                        const std::vector<char>& alive) const {
    std::vector<std::string> parts;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[e]) continue;
      Vertex ru = find(rep, g.edge(e).u), rv = find(rep, g.edge(e).v);
      Vertex from = tau.at(2 * e) > 0 ? ru : rv;
      Vertex to = tau.at(2 * e) > 0 ? rv : ru;
      std::string mark = "*";
      if (auto it = gamma.find(e); it != gamma.end() && T.contains(e))
        mark = gv_str(group, gv_normalize(group, it->second));
      parts.push_back(std::to_string(from) + ">" + std::to_string(to) + ":" + mark);
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const std::string& p : parts) key += p + ";";
    return key;
  }
};

}  // namespace

long long count_prescribed_nzf(const SignedGraph& g, const Orientation& tau,
                               const GroupSpec& group, const EdgeSet& T,
                               const std::map<EdgeId, GroupValue>& gamma) {
  if (group.kind == GroupKind::integer)
    throw std::invalid_argument("counting needs a finite group");
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0)
      throw std::invalid_argument("deletion-contraction counting needs an ordinary graph");
  if (!orientation_valid(g, tau)) throw std::invalid_argument("invalid orientation");
  for (EdgeId e : T)
    if (!gamma.count(e))
      throw std::invalid_argument("gamma must cover every edge of T");

  DcState st{g, tau, group, T, gamma, {}};
  std::vector<int> rep(g.vertex_count());
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<char> alive(g.edge_count(), 1);
  return st.count(std::move(rep), std::move(alive));
}

bool are_similar(const SignedGraph& g, const Orientation& tau, const GroupSpec& group,
                 const EdgeSet& T, const std::map<EdgeId, GroupValue>& gamma1,
                 const std::map<EdgeId, GroupValue>& gamma2,
                 int max_vertices) {
  int n = g.vertex_count();
  if (n > max_vertices)
    throw BudgetExceeded("are_similar: exhaustive subset scan exceeds limit");
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0) throw std::invalid_argument("similarity is defined on ordinary graphs");
  if (!orientation_valid(g, tau)) throw std::invalid_argument("invalid orientation");
  for (EdgeId e : T)
    if (!gamma1.count(e) || !gamma2.count(e))
      throw std::invalid_argument("gamma must cover every edge of T");

  // alpha_X(e): +1 toward X, -1 away, 0 when both ends are on one side
  // (loops never lie in delta(X)).
  auto subset_sum = [&](const std::map<EdgeId, GroupValue>& gm, std::uint64_t mask) {
    GroupValue acc{};
    for (EdgeId e : T) {
      const EdgeRec& r = g.edge(e);
      bool u_in = (mask >> r.u) & 1, v_in = (mask >> r.v) & 1;
      if (u_in == v_in) continue;
      int h_inside = u_in ? 2 * e : 2 * e + 1;
      int alpha = tau.at(h_inside) < 0 ? 1 : -1;
      GroupValue val = gv_normalize(group, gm.at(e));
      acc = gv_add(group, acc, alpha > 0 ? val : gv_neg(group, val));
    }
    return acc;
  };

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (gv_is_zero(subset_sum(gamma1, mask)) != gv_is_zero(subset_sum(gamma2, mask)))
      return false;
  }
  return true;
}

FlowAssignment extend_nzf_at_vertex(const SignedGraph& g, const Orientation& tau,
                                    const GroupSpec& group, Vertex v,
                                    const std::map<EdgeId, GroupValue>& gamma) {
  if (group.kind == GroupKind::integer)
    throw std::invalid_argument("extension lemma works over a finite group");
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0) throw std::invalid_argument("extension lemma needs an ordinary graph");
  g.check_vertex(v);
  if (g.degree(v) > 3) throw std::invalid_argument("vertex degree exceeds 3");
  EdgeSet delta;
  for (int h : g.half_edges_at(v)) {
    EdgeId e = g.edge_of_half(h);
    if (g.is_loop(e)) throw std::invalid_argument("loop at the extension vertex");
    delta.add(e);
  }
  if (gamma.size() != delta.size())
    throw std::invalid_argument("gamma must cover exactly delta(v)");
  GroupValue bnd{};
  for (EdgeId e : delta) {
    auto it = gamma.find(e);
    if (it == gamma.end()) throw std::invalid_argument("gamma must cover exactly delta(v)");
    GroupValue val = gv_normalize(group, it->second);
    if (gv_is_zero(val)) throw std::invalid_argument("gamma must be nowhere-zero");
    int h = g.edge(e).u == v ? 2 * e : 2 * e + 1;
    bnd = gv_add(group, bnd, tau.at(h) < 0 ? gv_neg(group, val) : val);
  }
  if (!gv_is_zero(bnd)) throw std::invalid_argument("gamma has nonzero boundary at v");

  SearchOptions opts;
  opts.tau = tau;
  if (!find_nzf(g, group, {}, opts))
    throw std::invalid_argument("graph admits no NZF over this group");
  SearchConstraints cons;
  cons.prescribed = gamma;
  auto witness = find_nzf(g, group, cons, opts);
  if (!witness)
    throw InvariantViolation("extension lemma: no extension despite valid preconditions");
  return *witness;
}

FlowAssignment solve_boundary(const SignedGraph& g, const Orientation& tau,
                              const GroupSpec& group,
                              const std::vector<GroupValue>& beta) {
  if (group.kind == GroupKind::integer)
    throw std::invalid_argument("boundary solving works over a finite group");
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0) throw std::invalid_argument("boundary solving needs an ordinary graph");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (static_cast<int>(beta.size()) != g.vertex_count())
    throw std::invalid_argument("beta must cover every vertex");
  GroupValue total{};
  for (const GroupValue& b : beta) total = gv_add(group, total, b);
  if (!gv_is_zero(total)) throw std::invalid_argument("beta must sum to zero");

  // BFS spanning tree; peel in reverse discovery order.
  int n = g.vertex_count();
  std::vector<int> parent_half(n, -1);
  std::vector<Vertex> bfs_order;
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{0};
  if (n > 0) seen[0] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    bfs_order.push_back(v);
    for (int h : g.half_edges_at(v)) {
      Vertex w = g.vertex_of_half(h ^ 1);
      if (!seen[w]) {
        seen[w] = 1;
        parent_half[w] = h ^ 1;  // half at w
        queue.push_back(w);
      }
    }
  }

  FlowAssignment phi(group, g.edge_count());
  std::vector<GroupValue> need(n);
  for (Vertex v = 0; v < n; ++v) need[v] = gv_normalize(group, beta[v]);
  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    Vertex v = *it;
    if (parent_half[v] < 0) continue;  // root
    int h = parent_half[v];
    EdgeId e = g.edge_of_half(h);
    GroupValue x = tau.at(h) < 0 ? gv_neg(group, need[v]) : need[v];
    phi.set(e, x);
    need[v] = GroupValue{};
    Vertex p = g.vertex_of_half(h ^ 1);
    GroupValue at_p = tau.at(h ^ 1) < 0 ? gv_neg(group, x) : x;
    need[p] = gv_add(group, need[p], gv_neg(group, at_p));
  }
  if (n > 0 && !gv_is_zero(need[bfs_order.front()]))
    throw InvariantViolation("solve_boundary: residual at the root");
  return phi;
}

namespace {

struct NzwSearch {
  const SignedGraph& g;
  const NzwConstraints& cons;
  GroupSpec group = GroupSpec::z2z3();
  Orientation tau;
  std::vector<EdgeId> order;
  long long max_nodes;
  long long nodes = 0;

  std::vector<EdgeFootprint> foot;
  std::vector<GroupValue> partial;
  std::vector<int> remaining;
  FlowAssignment assign;

  NzwSearch(const SignedGraph& g, const NzwConstraints& cons, const SearchOptions& opts)
      : g(g), cons(cons), assign(group, g.edge_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > 3)
        throw std::invalid_argument("watering undefined at degree > 3");
    tau = opts.tau ? *opts.tau : default_orientation(g);
    if (!orientation_valid(g, tau)) throw std::invalid_argument("invalid orientation");
    order = opts.order ? *opts.order : bfs_edge_order(g);
    max_nodes = opts.max_nodes;
    foot = footprints(g, tau);
    partial.assign(g.vertex_count(), GroupValue{});
    remaining.assign(g.vertex_count(), 0);
    for (const EdgeFootprint& fp : foot)
      for (auto [v, c] : fp.terms) remaining[v] += 1;
  }

  // Targets keyed by |delta(v)|: loops sit outside the watering rule, so a
  // loops-only vertex is unconstrained.
  bool boundary_ok(Vertex v) const {
    int d = g.delta_degree(v);
    const GroupValue& x = partial[v];
    if (d == 3) return gv_is_zero(x);
    if (d == 1 || d == 2) return x.a == 0 && x.b != 0;
    return true;
  }

  bool final_checks() const {
    if (cons.support_sign) {
      int s = 1;
      for (const EdgeRec& e : g.edges())
        if (assign.value(e.id).a == 1) s *= e.sign;
      if (s != *cons.support_sign) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos) {
    if (pos == order.size()) return final_checks();
    EdgeId e = order[pos];
    for (GroupValue val : gv_nonzero_elements(group)) {
      if (++nodes > max_nodes) throw BudgetExceeded("find_nzw: node budget exhausted");
      bool ok = true;
      assign.values[e] = val;
      for (auto [v, c] : foot[e].terms) {
        partial[v] = gv_add(group, partial[v], gv_scale(group, c, val));
        remaining[v] -= 1;
      }
      for (auto [v, c] : foot[e].terms)
        if (remaining[v] == 0 && !boundary_ok(v)) ok = false;
      if (ok && dfs(pos + 1)) return true;
      for (auto [v, c] : foot[e].terms) {
        partial[v] = gv_add(group, partial[v], gv_neg(group, gv_scale(group, c, val)));
        remaining[v] += 1;
      }
    }
    assign.values[e] = GroupValue{};
    return false;
  }
};

}  // namespace

std::optional<FlowAssignment> find_nzw(const SignedGraph& g,
                                       const NzwConstraints& constraints,
                                       const SearchOptions& options) {
  NzwSearch search(g, constraints, options);
  if (search.dfs(0)) return search.assign;
  return std::nullopt;
}

}  // namespace signedflow
