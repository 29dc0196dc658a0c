#include "signedflow/generators.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace signedflow {

SignedGraph fig1_family(const std::vector<std::pair<Vertex, Vertex>>& tree_edges) {
  if (tree_edges.empty()) throw std::invalid_argument("fig1_family: empty tree");
  Vertex n = 0;
  for (auto [u, v] : tree_edges) n = std::max({n, u + 1, v + 1});
  std::vector<int> deg(n, 0);
  for (auto [u, v] : tree_edges) {
    if (u < 0 || v < 0 || u == v)
      throw std::invalid_argument("fig1_family: bad tree edge");
    deg[u] += 1;
    deg[v] += 1;
  }
  if (static_cast<int>(tree_edges.size()) != n - 1)
    throw std::invalid_argument("fig1_family: not a tree");
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] != 1 && deg[v] != 3)
      throw std::invalid_argument("fig1_family: degrees must be 1 or 3");
  SignedGraph g(n);
  for (auto [u, v] : tree_edges) g.add_edge(u, v, 1);
  // connectivity = tree with n-1 edges and no cycles; the potential check
  // rides on is_balanced-style traversal
  if (!is_connected(g)) throw std::invalid_argument("fig1_family: not a tree");
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) g.add_edge(v, v, -1);
  return g;
}

SignedGraph fig1_caterpillar(int internal) {
  if (internal < 0) throw std::invalid_argument("fig1_caterpillar: negative size");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (internal == 0) {
    edges.push_back({0, 1});
    return fig1_family(edges);
  }
  // path 0..internal-1, leaves appended after it
  Vertex next = internal;
  for (Vertex i = 0; i + 1 < internal; ++i) edges.push_back({i, i + 1});
  for (Vertex i = 0; i < internal; ++i) {
    int want = 3 - ((i > 0 ? 1 : 0) + (i + 1 < internal ? 1 : 0));
    for (int j = 0; j < want; ++j) edges.push_back({i, next++});
  }
  return fig1_family(edges);
}

namespace {

struct Slot {
  Vertex u, v;
  int cap;
};

std::vector<Slot> make_slots(int n) {
  std::vector<Slot> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v) slots.push_back({u, v, u == v ? 2 : 3});
  return slots;
}

bool multiset_connected(int n, const std::vector<Slot>& slots,
                        const std::vector<int>& mult) {
  if (n == 1) return true;
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (mult[i] > 0) rep[find(slots[i].u)] = find(slots[i].v);
  // connected iff one class and every vertex touched
  std::vector<int> deg(n, 0);
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (mult[i] > 0) {
      deg[slots[i].u] += 1;
      deg[slots[i].v] += 1;
    }
  for (int v = 0; v < n; ++v)
    if (deg[v] == 0) return false;
  int r0 = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != r0) return false;
  return true;
}

bool emit_signatures(int n, const std::vector<Slot>& slots,
                     const std::vector<int>& mult, int m,
                     const std::function<bool(const SignedGraph&)>& visit) {
  for (std::uint64_t smask = 0; smask < (std::uint64_t{1} << m); ++smask) {
    SignedGraph g(n);
    int idx = 0;
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (int c = 0; c < mult[i]; ++c) {
        g.add_edge(slots[i].u, slots[i].v, ((smask >> idx) & 1) ? -1 : 1);
        ++idx;
      }
    if (!visit(g)) return false;
  }
  return true;
}

bool enumerate_multisets(int n, const std::vector<Slot>& slots, std::vector<int>& mult,
                         std::size_t at, int left,
                         const std::function<bool(const SignedGraph&)>& visit,
                         int total) {
  if (at == slots.size()) {
    if (left != 0) return true;  // exactly m edges; smaller sizes have their own pass
    if (!multiset_connected(n, slots, mult)) return true;
    return emit_signatures(n, slots, mult, total, visit);
  }
  for (int c = 0; c <= std::min(slots[at].cap, left); ++c) {
    mult[at] = c;
    if (!enumerate_multisets(n, slots, mult, at + 1, left - c, visit, total)) {
      mult[at] = 0;
      return false;
    }
  }
  mult[at] = 0;
  return true;
}

}  // namespace

void corpus_enumerate(int max_vertices, int max_edges,
                      const std::function<bool(const SignedGraph&)>& visit) {
  if (max_vertices < 1) throw std::invalid_argument("corpus: need at least one vertex");
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<Slot> slots = make_slots(n);
    for (int m = 0; m <= max_edges; ++m) {
      if (n == 1 && m == 0) {
        SignedGraph g(1);
        if (!visit(g)) return;
        continue;
      }
      if (m < n - 1) continue;  // connectivity needs n-1 edges
      std::vector<int> mult(slots.size(), 0);
      if (!enumerate_multisets(n, slots, mult, 0, m, visit, m)) return;
    }
  }
}

std::vector<SignedGraph> corpus_collect(int max_vertices, int max_edges) {
  std::vector<SignedGraph> out;
  corpus_enumerate(max_vertices, max_edges, [&](const SignedGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

SignedGraph random_signed(int n, int m, double p_negative, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_signed: need at least one vertex");
  long long cap = 3LL * n * (n - 1) / 2 + 2LL * n;
  if (m < 0 || m > cap)
    throw std::invalid_argument("random_signed: edge count infeasible under the caps");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SignedGraph g(n);
  std::map<std::pair<int, int>, int> used;
  int placed = 0;
  while (placed < m) {
    int u = pick_vertex(rng), v = pick_vertex(rng);
    if (u > v) std::swap(u, v);
    int limit = u == v ? 2 : 3;
    if (used[{u, v}] >= limit) continue;
    used[{u, v}] += 1;
    g.add_edge(u, v, coin(rng) < p_negative ? -1 : 1);
    ++placed;
  }
  return g;
}

SignedGraph theta_unbalanced() {
  SignedGraph g(2);
  g.add_edge(0, 1, -1);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 1, 1);
  return g;
}

SignedGraph barbell() {
  SignedGraph g(2);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 0, -1);
  g.add_edge(1, 1, -1);
  return g;
}

SignedGraph k4() {
  SignedGraph g(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v, 1);
  return g;
}

SignedGraph k33() {
  SignedGraph g(6);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) g.add_edge(u, v, 1);
  return g;
}

SignedGraph prism() {
  SignedGraph g(6);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 0, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(4, 5, 1);
  g.add_edge(5, 3, 1);
  g.add_edge(0, 3, 1);
  g.add_edge(1, 4, 1);
  g.add_edge(2, 5, 1);
  return g;
}

SignedGraph petersen() {
  SignedGraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, 1);       // outer C5
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5, 1);  // pentagram
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i, 1);             // spokes
  return g;
}

SignedGraph moebius_kantor() {
  // generalized Petersen graph GP(8,3)
  SignedGraph g(16);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8, 1);
  for (int i = 0; i < 8; ++i) g.add_edge(8 + i, 8 + (i + 3) % 8, 1);
  for (int i = 0; i < 8; ++i) g.add_edge(i, 8 + i, 1);
  return g;
}

}  // namespace signedflow
