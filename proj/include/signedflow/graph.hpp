#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace signedflow {

using Vertex = int;
using EdgeId = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a paper-backed guarantee fails at runtime; always a bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free index set. Used for both vertex and edge sets.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> items);

  void add(int x);
  bool contains(int x) const;
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<int>& items() const { return items_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  IndexSet set_union(const IndexSet& other) const;
  IndexSet set_minus(const IndexSet& other) const;
  IndexSet set_intersect(const IndexSet& other) const;

 private:
  std::vector<int> items_;
};

using EdgeSet = IndexSet;
using VertexSet = IndexSet;

struct EdgeRec {
  EdgeId id;
  Vertex u, v;
  int sign;  // -1 or +1
};

// Labeled signed multigraph. Loops (u == v) and parallel edges are allowed.
// Every edge e owns two half-edges: 2e (at u) and 2e+1 (at v); a loop
// contributes both to the same vertex. Construct fully, then treat as
// immutable: all operations on a built graph are pure.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n_vertices);

  EdgeId add_edge(Vertex u, Vertex v, int sign);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeRec& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<EdgeRec>& edges() const { return edges_; }

  bool is_loop(EdgeId e) const { return edges_.at(e).u == edges_.at(e).v; }
  // Loops count twice.
  int degree(Vertex v) const { return static_cast<int>(half_at_.at(v).size()); }
  // |delta(v)|: incident non-loop edges, the paper-style degree.
  int delta_degree(Vertex v) const;
  const std::vector<int>& half_edges_at(Vertex v) const { return half_at_.at(v); }

  // Half-edge h = 2e + side; side 0 sits at edge.u, side 1 at edge.v.
  EdgeId edge_of_half(int h) const { return h >> 1; }
  int side_of_half(int h) const { return h & 1; }
  Vertex vertex_of_half(int h) const {
    const EdgeRec& e = edges_.at(h >> 1);
    return (h & 1) ? e.v : e.u;
  }
  Vertex other_end(EdgeId e, Vertex v) const;

  void check_vertex(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<int>> half_at_;
};

struct SubgraphHandle {
  const SignedGraph* parent = nullptr;
  EdgeSet edges;
  VertexSet vertices;

  // Vertex support = endpoints of the retained edges.
  static SubgraphHandle of_edges(const SignedGraph& g, EdgeSet edges);
};

// ---- signature operations and structural predicates ----

/// Negates the sign of every non-loop edge at v (a loop flips twice).
SignedGraph switch_at(const SignedGraph& g, Vertex v);

/// True iff some switching sequence removes all negative edges;
/// spanning-forest potential check, no circuit enumeration.
bool is_balanced(const SignedGraph& g);

/// Balance of the spanning subgraph on the given edges.
bool is_balanced_subset(const SignedGraph& g, const EdgeSet& edges);

/// min over switchings of |E_N|; exhaustive, 2^(n-1) per component.
/// Throws BudgetExceeded when a component exceeds max_component_vertices.
int negativeness(const SignedGraph& g, int max_component_vertices = 24);

/// Exact cut-edge set (low-link traversal; componentwise, so a
/// disconnected graph can be bridgeless).
EdgeSet bridges(const SignedGraph& g);

int circuit_sign(const SignedGraph& g, const SubgraphHandle& c);

// ---- connectivity ----

std::vector<int> component_ids(const SignedGraph& g);
int component_count(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

// Biconnected blocks. Loops get block -1 and never make a cut vertex.
struct BlockDecomposition {
  std::vector<int> edge_block;
  std::vector<char> cut_vertex;
  int block_count = 0;
};
BlockDecomposition block_decomposition(const SignedGraph& g);

// ---- materialized subgraphs ----

struct Subgraph {
  SignedGraph graph;
  std::vector<Vertex> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

/// Keeps the listed vertices and every edge with both ends inside.
Subgraph induced_by_vertices(const SignedGraph& g, const VertexSet& keep);
/// Keeps all vertices and the listed edges.
Subgraph spanning_by_edges(const SignedGraph& g, const EdgeSet& keep);
/// Deletes the listed vertices and all incident edges.
Subgraph delete_vertices(const SignedGraph& g, const VertexSet& drop);

// ---- suppression ----

// One step of a traversal: `edge` entered at its `tail_side` endpoint.
struct PathStep {
  EdgeId edge;
  int tail_side;
};

struct SuppressResult {
  SignedGraph graph;
  std::vector<Vertex> vertex_to_parent;           // new vertex -> old vertex
  std::vector<std::vector<PathStep>> provenance;  // new edge -> ordered old path
};

/// Replaces every maximal subdivided path by one edge carrying the sign
/// product. A component that is a pure circuit of 2-vertices collapses to a
/// single vertex with one loop (keeps flow lifting well defined).
SuppressResult suppress(const SignedGraph& g);

// ---- circuits ----

// Circuit as a closed edge walk: edges[i] runs from verts[i] to
// verts[(i+1) % k]; tail_side[i] is the half-edge side at verts[i].
struct Circuit {
  std::vector<EdgeId> edges;
  std::vector<Vertex> verts;
  std::vector<int> tail_side;

  std::size_t length() const { return edges.size(); }
  EdgeSet edge_set() const;
  VertexSet vertex_set() const;
};

/// Orders an edge set into a circuit; throws std::invalid_argument if the
/// edges do not form one (connected, all inner degrees exactly 2).
Circuit circuit_from_edges(const SignedGraph& g, const EdgeSet& edges);

/// All simple circuits (loops = length 1, digons = length 2 included).
std::vector<Circuit> all_circuits(const SignedGraph& g);

int circuit_sign(const SignedGraph& g, const Circuit& c);

// ---- text format and hashing ----

// Line format: `v <n>` then `e <u> <v> <+|->` per edge, `#` comments.
SignedGraph parse_graph_text(std::istream& in);
SignedGraph parse_graph_string(const std::string& text);
SignedGraph parse_graph_file(const std::string& path);
void write_graph_text(const SignedGraph& g, std::ostream& out);
std::string graph_to_string(const SignedGraph& g);

/// Canonical string of sorted edge triples (min-end, max-end, sign),
/// prefixed with the vertex count.
std::string graph_hash(const SignedGraph& g);

}  // namespace signedflow
