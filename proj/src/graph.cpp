#include "signedflow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace signedflow {

IndexSet::IndexSet(std::vector<int> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void IndexSet::add(int x) {
  auto it = std::lower_bound(items_.begin(), items_.end(), x);
  if (it == items_.end() || *it != x) items_.insert(it, x);
}

bool IndexSet::contains(int x) const {
  return std::binary_search(items_.begin(), items_.end(), x);
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  IndexSet r;
  r.items_ = std::move(out);
  return r;
}

IndexSet IndexSet::set_minus(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out));
  IndexSet r;
  r.items_ = std::move(out);
  return r;
}

IndexSet IndexSet::set_intersect(const IndexSet& other) const {
  std::vector<int> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
  IndexSet r;
  r.items_ = std::move(out);
  return r;
}

SignedGraph::SignedGraph(int n_vertices) : n_(n_vertices), half_at_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
}

EdgeId SignedGraph::add_edge(Vertex u, Vertex v, int sign) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("edge endpoint out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, u, v, sign});
  half_at_[u].push_back(2 * id);
  half_at_[v].push_back(2 * id + 1);
  return id;
}

int SignedGraph::delta_degree(Vertex v) const {
  int d = 0;
  for (int h : half_at_.at(v))
    if (!is_loop(h >> 1)) ++d;
  return d;
}

Vertex SignedGraph::other_end(EdgeId e, Vertex v) const {
  const EdgeRec& r = edges_.at(e);
  if (r.u == v) return r.v;
  if (r.v == v) return r.u;
  throw std::invalid_argument("vertex not an end of edge");
}

void SignedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

SubgraphHandle SubgraphHandle::of_edges(const SignedGraph& g, EdgeSet edges) {
  VertexSet vs;
  for (EdgeId e : edges) {
    vs.add(g.edge(e).u);
    vs.add(g.edge(e).v);
  }
  return SubgraphHandle{&g, std::move(edges), std::move(vs)};
}

SignedGraph switch_at(const SignedGraph& g, Vertex v) {
  g.check_vertex(v);
  SignedGraph out(g.vertex_count());
  for (const EdgeRec& e : g.edges()) {
    int s = e.sign;
    if ((e.u == v) != (e.v == v)) s = -s;  // loops at v flip twice
    out.add_edge(e.u, e.v, s);
  }
  return out;
}

namespace {

// Potential assignment over a spanning forest; balanced iff every non-tree
// edge (loops included) agrees with the endpoint potentials.
bool balanced_masked(const SignedGraph& g, const std::vector<char>* edge_in,
                     const std::vector<char>* vertex_in) {
  int n = g.vertex_count();
  std::vector<int> pot(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (pot[root] != 0) continue;
    if (vertex_in && !(*vertex_in)[root]) continue;
    pot[root] = 1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (int h : g.half_edges_at(x)) {
        EdgeId e = g.edge_of_half(h);
        if (edge_in && !(*edge_in)[e]) continue;
        Vertex y = g.vertex_of_half(h ^ 1);
        if (g.is_loop(e)) {
          if (g.edge(e).sign < 0) return false;
          continue;
        }
        if (pot[y] == 0) {
          pot[y] = pot[x] * g.edge(e).sign;
          stack.push_back(y);
        } else if (pot[y] != pot[x] * g.edge(e).sign) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_balanced(const SignedGraph& g) { return balanced_masked(g, nullptr, nullptr); }

bool is_balanced_subset(const SignedGraph& g, const EdgeSet& edges) {
  std::vector<char> in(g.edge_count(), 0);
  for (EdgeId e : edges) in[e] = 1;
  return balanced_masked(g, &in, nullptr);
}

int negativeness(const SignedGraph& g, int max_component_vertices) {
  std::vector<int> comp = component_ids(g);
  int ncomp = component_count(g);
  int total = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (comp[v] == c) verts.push_back(v);
    if (static_cast<int>(verts.size()) > max_component_vertices)
      throw BudgetExceeded("negativeness: component exceeds exhaustive limit");
    std::vector<EdgeId> inner;
    for (const EdgeRec& e : g.edges())
      if (comp[e.u] == c && !(e.u == e.v)) inner.push_back(e.id);
    int loop_neg = 0;
    for (const EdgeRec& e : g.edges())
      if (comp[e.u] == c && e.u == e.v && e.sign < 0) ++loop_neg;
    // Fix verts[0] out of the switch set; complement gives the same signature.
    int m = static_cast<int>(verts.size()) - 1;
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 1; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i - 1);
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      int cnt = 0;
      for (EdgeId id : inner) {
        const EdgeRec& e = g.edge(id);
        bool fu = pos[e.u] >= 0 && (mask >> pos[e.u] & 1);
        bool fv = pos[e.v] >= 0 && (mask >> pos[e.v] & 1);
        int s = (fu != fv) ? -e.sign : e.sign;
        if (s < 0) ++cnt;
      }
      if (best < 0 || cnt < best) best = cnt;
      if (best == 0) break;
    }
    total += (best < 0 ? 0 : best) + loop_neg;
  }
  return total;
}

namespace {

struct BridgeState {
  const SignedGraph& g;
  std::vector<int> disc, low;
  int timer = 0;
  EdgeSet out;

  explicit BridgeState(const SignedGraph& g)
      : g(g), disc(g.vertex_count(), -1), low(g.vertex_count(), 0) {}

  void dfs(Vertex v, EdgeId parent_edge) {
    disc[v] = low[v] = timer++;
    for (int h : g.half_edges_at(v)) {
      EdgeId e = g.edge_of_half(h);
      if (e == parent_edge || g.is_loop(e)) continue;
      Vertex w = g.vertex_of_half(h ^ 1);
      if (disc[w] < 0) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.add(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

EdgeSet bridges(const SignedGraph& g) {
  BridgeState st(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (st.disc[v] < 0) st.dfs(v, -1);
  return st.out;
}

std::vector<int> component_ids(const SignedGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (int h : g.half_edges_at(x)) {
        Vertex y = g.vertex_of_half(h ^ 1);
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const SignedGraph& g) {
  std::vector<int> comp = component_ids(g);
  int m = 0;
  for (int c : comp) m = std::max(m, c + 1);
  return m;
}

bool is_connected(const SignedGraph& g) { return component_count(g) <= 1; }

namespace {

struct BlockState {
  const SignedGraph& g;
  BlockDecomposition& out;
  std::vector<int> disc, low;
  std::vector<EdgeId> stack;
  int timer = 0;

  BlockState(const SignedGraph& g, BlockDecomposition& out)
      : g(g), out(out), disc(g.vertex_count(), -1), low(g.vertex_count(), 0) {}

  void pop_block(EdgeId until) {
    int b = out.block_count++;
    while (!stack.empty()) {
      EdgeId e = stack.back();
      stack.pop_back();
      out.edge_block[e] = b;
      if (e == until) break;
    }
  }

  void dfs(Vertex v, int parent_half) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int h : g.half_edges_at(v)) {
      if ((h ^ 1) == parent_half) continue;
      EdgeId e = g.edge_of_half(h);
      if (g.is_loop(e)) continue;
      Vertex w = g.vertex_of_half(h ^ 1);
      if (disc[w] < 0) {
        stack.push_back(e);
        ++children;
        dfs(w, h);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          pop_block(e);
          bool cut = (parent_half >= 0) ? true : (children > 1);
          if (cut) out.cut_vertex[v] = 1;
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const SignedGraph& g) {
  BlockDecomposition out;
  out.edge_block.assign(g.edge_count(), -1);
  out.cut_vertex.assign(g.vertex_count(), 0);
  BlockState st(g, out);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (st.disc[v] < 0) st.dfs(v, -1);
  return out;
}

int circuit_sign(const SignedGraph& g, const SubgraphHandle& c) {
  if (c.parent != &g) throw std::invalid_argument("subgraph handle of another graph");
  // Connected and all inner degrees exactly 2.
  std::map<Vertex, int> deg;
  for (EdgeId e : c.edges) {
    deg[g.edge(e).u] += 1;
    deg[g.edge(e).v] += 1;
  }
  if (c.edges.empty()) throw std::invalid_argument("empty edge set is not a circuit");
  for (auto& [v, d] : deg)
    if (d != 2) throw std::invalid_argument("not a circuit: vertex degree != 2");
  std::vector<char> edge_in(g.edge_count(), 0);
  for (EdgeId e : c.edges) edge_in[e] = 1;
  // Connectivity over the retained edges only.
  std::set<Vertex> seen;
  std::vector<Vertex> stack{g.edge(*c.edges.begin()).u};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (int h : g.half_edges_at(x)) {
      if (!edge_in[g.edge_of_half(h)]) continue;
      Vertex y = g.vertex_of_half(h ^ 1);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  if (seen.size() != deg.size()) throw std::invalid_argument("not a circuit: disconnected");
  int s = 1;
  for (EdgeId e : c.edges) s *= g.edge(e).sign;
  return s;
}

int circuit_sign(const SignedGraph& g, const Circuit& c) {
  int s = 1;
  for (EdgeId e : c.edges) s *= g.edge(e).sign;
  return s;
}

Subgraph induced_by_vertices(const SignedGraph& g, const VertexSet& keep) {
  Subgraph out;
  std::vector<int> map(g.vertex_count(), -1);
  for (Vertex v : keep) {
    g.check_vertex(v);
    map[v] = static_cast<int>(out.vertex_to_parent.size());
    out.vertex_to_parent.push_back(v);
  }
  out.graph = SignedGraph(static_cast<int>(out.vertex_to_parent.size()));
  for (const EdgeRec& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) {
      out.graph.add_edge(map[e.u], map[e.v], e.sign);
      out.edge_to_parent.push_back(e.id);
    }
  }
  return out;
}

Subgraph spanning_by_edges(const SignedGraph& g, const EdgeSet& keep) {
  Subgraph out;
  out.graph = SignedGraph(g.vertex_count());
  out.vertex_to_parent.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.vertex_to_parent[v] = v;
  for (EdgeId e : keep) {
    const EdgeRec& r = g.edge(e);
    out.graph.add_edge(r.u, r.v, r.sign);
    out.edge_to_parent.push_back(e);
  }
  return out;
}

Subgraph delete_vertices(const SignedGraph& g, const VertexSet& drop) {
  VertexSet keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!drop.contains(v)) keep.add(v);
  return induced_by_vertices(g, keep);
}

namespace {

std::vector<PathStep> reversed_path(const std::vector<PathStep>& p) {
  std::vector<PathStep> out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    out.push_back({it->edge, 1 - it->tail_side});
  return out;
}

}  // namespace

SuppressResult suppress(const SignedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("suppress: empty graph");

  // Work on a mutable edge list with stable slots; each live edge carries the
  // ordered original path it stands for.
  struct WorkEdge {
    Vertex u, v;
    int sign;
    bool alive;
    std::vector<PathStep> path;
  };
  std::vector<WorkEdge> work;
  work.reserve(g.edge_count());
  for (const EdgeRec& e : g.edges())
    work.push_back({e.u, e.v, e.sign, true, {{e.id, 0}}});

  int n = g.vertex_count();
  std::vector<std::vector<int>> half_at(n);  // half = 2*slot + side, over live slots
  for (int i = 0; i < static_cast<int>(work.size()); ++i) {
    half_at[work[i].u].push_back(2 * i);
    half_at[work[i].v].push_back(2 * i + 1);
  }
  std::vector<char> gone(n, 0);

  auto degree = [&](Vertex v) { return static_cast<int>(half_at[v].size()); };
  auto suppressible = [&](Vertex v) {
    if (gone[v] || degree(v) != 2) return false;
    int e0 = half_at[v][0] >> 1, e1 = half_at[v][1] >> 1;
    return e0 != e1;  // keep loop-only vertices (degenerate circuit case)
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!suppressible(v)) continue;
      int ha = half_at[v][0], hb = half_at[v][1];
      int ea = ha >> 1, eb = hb >> 1;
      // Orient both paths to run through v: (a-end ... v)(v ... b-end).
      std::vector<PathStep> left = (ha & 1) ? work[ea].path : reversed_path(work[ea].path);
      std::vector<PathStep> right = (hb & 1) ? reversed_path(work[eb].path) : work[eb].path;
      Vertex a_end = (ha & 1) ? work[ea].u : work[ea].v;
      Vertex b_end = (hb & 1) ? work[eb].u : work[eb].v;
      int sign = work[ea].sign * work[eb].sign;

      work[eb].alive = false;
      half_at[v].clear();
      auto detach = [&](Vertex x, int half) {
        auto& lst = half_at[x];
        auto it = std::find(lst.begin(), lst.end(), half);
        if (it != lst.end()) lst.erase(it);
      };
      // Rewire slot ea as the merged edge a_end -- b_end.
      detach(a_end, ha ^ 1);
      detach(b_end, hb ^ 1);
      work[ea].u = a_end;
      work[ea].v = b_end;
      work[ea].sign = sign;
      left.insert(left.end(), right.begin(), right.end());
      work[ea].path = std::move(left);
      half_at[a_end].push_back(2 * ea);
      half_at[b_end].push_back(2 * ea + 1);
      gone[v] = 1;
      changed = true;
    }
  }

  SuppressResult out;
  std::vector<int> vmap(n, -1);
  int nv = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) {
      vmap[v] = nv++;
      out.vertex_to_parent.push_back(v);
    }
  out.graph = SignedGraph(nv);
  for (const WorkEdge& w : work) {
    if (!w.alive) continue;
    out.graph.add_edge(vmap[w.u], vmap[w.v], w.sign);
    out.provenance.push_back(w.path);
  }
  return out;
}

EdgeSet Circuit::edge_set() const { return EdgeSet(edges); }
VertexSet Circuit::vertex_set() const { return VertexSet(verts); }

Circuit circuit_from_edges(const SignedGraph& g, const EdgeSet& edges) {
  if (edges.empty()) throw std::invalid_argument("empty edge set is not a circuit");
  std::map<Vertex, std::vector<int>> halves;  // vertex -> incident halves within set
  for (EdgeId e : edges) {
    halves[g.edge(e).u].push_back(2 * e);
    halves[g.edge(e).v].push_back(2 * e + 1);
  }
  for (auto& [v, hs] : halves)
    if (hs.size() != 2) throw std::invalid_argument("not a circuit: vertex degree != 2");

  Circuit c;
  std::set<EdgeId> used;
  Vertex start = halves.begin()->first;
  Vertex at = start;
  int h = halves[start][0];
  while (true) {
    EdgeId e = h >> 1;
    c.edges.push_back(e);
    c.verts.push_back(at);
    c.tail_side.push_back(h & 1);
    used.insert(e);
    Vertex nxt = g.vertex_of_half(h ^ 1);
    if (nxt == start && used.size() == edges.size()) break;
    // Leave nxt by its other in-set half-edge.
    const auto& hs = halves[nxt];
    int leave = -1;
    for (int cand : hs)
      if (cand != (h ^ 1)) leave = cand;
    if (leave < 0) throw std::invalid_argument("not a circuit");
    h = leave;
    at = nxt;
    if (c.edges.size() > edges.size()) throw std::invalid_argument("not a circuit: disconnected");
  }
  if (used.size() != edges.size()) throw std::invalid_argument("not a circuit: disconnected");
  return c;
}

std::vector<Circuit> all_circuits(const SignedGraph& g) {
  std::vector<Circuit> out;
  std::set<std::vector<EdgeId>> seen;
  int n = g.vertex_count();

  std::vector<char> on_path(n, 0);
  std::vector<EdgeId> epath;
  std::vector<Vertex> vpath;
  std::vector<int> spath;

  std::function<void(Vertex, Vertex)> walk = [&](Vertex start, Vertex at) {
    for (int h : g.half_edges_at(at)) {
      EdgeId e = g.edge_of_half(h);
      if ((h & 1) == 1 && g.is_loop(e)) continue;  // traverse loops from side 0 once
      if (!epath.empty() && e == epath.back()) {
        if (!g.is_loop(e)) continue;  // don't bounce straight back over the same edge
      }
      bool used = std::find(epath.begin(), epath.end(), e) != epath.end();
      if (used) continue;
      Vertex nxt = g.vertex_of_half(h ^ 1);
      if (nxt == start) {
        std::vector<EdgeId> key(epath);
        key.push_back(e);
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) {
          Circuit c;
          c.edges = epath;
          c.edges.push_back(e);
          c.verts = vpath;
          c.verts.push_back(at);
          c.tail_side = spath;
          c.tail_side.push_back(h & 1);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (nxt < start || on_path[nxt]) continue;  // keep start minimal, vertices simple
      on_path[nxt] = 1;
      epath.push_back(e);
      vpath.push_back(at);
      spath.push_back(h & 1);
      walk(start, nxt);
      on_path[nxt] = 0;
      epath.pop_back();
      vpath.pop_back();
      spath.pop_back();
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = 1;
    walk(s, s);
    on_path[s] = 0;
  }
  return out;
}

SignedGraph parse_graph_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_v = false;
  SignedGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      int n;
      if (have_v || !(ls >> n) || n < 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad vertex line");
      g = SignedGraph(n);
      have_v = true;
    } else if (tag == "e") {
      if (!have_v) throw ParseError("edge before vertex count");
      int u, v;
      std::string s;
      if (!(ls >> u >> v >> s) || (s != "+" && s != "-"))
        throw ParseError("line " + std::to_string(lineno) + ": bad edge line");
      if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
      g.add_edge(u, v, s == "+" ? 1 : -1);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (!have_v) throw ParseError("missing vertex line");
  return g;
}

SignedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

SignedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_graph_text(in);
}

void write_graph_text(const SignedGraph& g, std::ostream& out) {
  out << "v " << g.vertex_count() << "\n";
  for (const EdgeRec& e : g.edges())
    out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-') << "\n";
}

std::string graph_to_string(const SignedGraph& g) {
  std::ostringstream os;
  write_graph_text(g, os);
  return os.str();
}

std::string graph_hash(const SignedGraph& g) {
  std::vector<std::string> trips;
  trips.reserve(g.edge_count());
  for (const EdgeRec& e : g.edges()) {
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    trips.push_back(std::to_string(a) + "," + std::to_string(b) + "," +
                    (e.sign > 0 ? "+" : "-"));
  }
  std::sort(trips.begin(), trips.end());
  std::string out = "n" + std::to_string(g.vertex_count());
  for (const std::string& t : trips) out += "|" + t;
  return out;
}

}  // namespace signedflow
