#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "signedflow/generators.hpp"
#include "signedflow/graph.hpp"

using namespace signedflow;
using namespace signedflow::testing;

namespace {

int negative_count(const SignedGraph& g) {
  int c = 0;
  for (const EdgeRec& e : g.edges())
    if (e.sign < 0) ++c;
  return c;
}

// brute-force bridge set: remove each edge and recount components
EdgeSet bridges_brute(const SignedGraph& g) {
  EdgeSet out;
  int base = component_count(g);
  for (EdgeId b = 0; b < g.edge_count(); ++b) {
    EdgeSet rest;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (e != b) rest.add(e);
    if (component_count(spanning_by_edges(g, rest).graph) > base) out.add(b);
  }
  return out;
}

SignedGraph apply_switches(const SignedGraph& g, unsigned mask) {
  SignedGraph cur = g;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if ((mask >> v) & 1) cur = switch_at(cur, v);
  return cur;
}

}  // namespace

TEST_CASE("index sets stay sorted and deduplicated") {
  IndexSet s(std::vector<int>{3, 1, 3, 2});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  s.add(0);
  s.add(2);
  CHECK(s.items() == std::vector<int>{0, 1, 2, 3});
  CHECK(s.set_minus(IndexSet({1, 2})).items() == std::vector<int>{0, 3});
  CHECK(s.set_intersect(IndexSet({2, 9})).items() == std::vector<int>{2});
}

TEST_CASE("switch negates exactly the non-loop edges at the vertex") {
  SignedGraph t = triangle();
  SignedGraph s = switch_at(t, 1);
  CHECK(s.edge(0).sign == -1);  // (0,1)
  CHECK(s.edge(1).sign == -1);  // (1,2)
  CHECK(s.edge(2).sign == 1);   // (2,0)

  SignedGraph l = negative_loop();
  CHECK(switch_at(l, 0).edge(0).sign == -1);

  // unbalanced digon: both switch results still carry one negative edge
  SignedGraph d = unbalanced_digon();
  for (Vertex v : {0, 1}) CHECK(negative_count(switch_at(d, v)) == 1);
  CHECK_THROWS_AS(switch_at(t, 7), std::out_of_range);
}

TEST_CASE("balance via potentials agrees with switch enumeration") {
  CHECK(is_balanced(triangle()));
  CHECK_FALSE(is_balanced(negative_loop()));

  SignedGraph t1 = from_edges(3, {{0, 1, -1}, {1, 2, 1}, {2, 0, 1}});
  CHECK_FALSE(is_balanced(t1));
  // derived: none of the 2^3 switch subsets clears the negative edge
  for (unsigned mask = 0; mask < 8; ++mask)
    CHECK(negative_count(apply_switches(t1, mask)) > 0);
}

TEST_CASE("negativeness") {
  CHECK(negativeness(triangle()) == 0);
  CHECK(negativeness(negative_loop()) == 1);
  SignedGraph b = barbell();
  CHECK(negativeness(b) == 2);
  int best = 99;
  for (unsigned mask = 0; mask < 4; ++mask)
    best = std::min(best, negative_count(apply_switches(b, mask)));
  CHECK(best == 2);
  SignedGraph big(30);  // one connected component past the exhaustive limit
  for (Vertex v = 0; v + 1 < 30; ++v) big.add_edge(v, v + 1, 1);
  CHECK_THROWS_AS(negativeness(big), BudgetExceeded);
}

TEST_CASE("bridges: examples and brute-force agreement") {
  SignedGraph path = from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(bridges(path).items() == std::vector<int>{0, 1});
  CHECK(bridges(triangle()).empty());
  CHECK(bridges(barbell()).items() == std::vector<int>{0});

  corpus_enumerate(4, 5, [&](const SignedGraph& g) {
    REQUIRE(bridges(g) == bridges_brute(g));
    return true;
  });
}

TEST_CASE("suppress merges subdivided paths and keeps provenance") {
  // theta with two subdivided branches: 0-2-1 (+,-), 0-3-1 (+,+), 0-1 direct
  SignedGraph g = from_edges(4, {{0, 2, 1}, {2, 1, -1}, {0, 3, 1}, {3, 1, 1}, {0, 1, 1}});
  SuppressResult r = suppress(g);
  CHECK(r.graph.vertex_count() == 2);
  CHECK(r.graph.edge_count() == 3);
  int neg = 0;
  std::multiset<std::size_t> path_lengths;
  for (const EdgeRec& e : r.graph.edges()) {
    if (e.sign < 0) ++neg;
    path_lengths.insert(r.provenance[e.id].size());
  }
  CHECK(neg == 1);  // sign product of the subdivided branch
  CHECK(path_lengths == std::multiset<std::size_t>{1, 2, 2});

  // pure circuit: single vertex with one loop carrying the sign product
  SignedGraph c = from_edges(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, -1}});
  SuppressResult rc = suppress(c);
  CHECK(rc.graph.vertex_count() == 1);
  CHECK(rc.graph.edge_count() == 1);
  CHECK(rc.graph.is_loop(0));
  CHECK(rc.graph.edge(0).sign == -1);
  CHECK(rc.provenance[0].size() == 3);

  // graphs without 2-vertices stay identical
  SignedGraph k = k4();
  SuppressResult rk = suppress(k);
  CHECK(rk.graph.vertex_count() == 4);
  CHECK(rk.graph.edge_count() == 6);
  for (EdgeId e = 0; e < 6; ++e) {
    REQUIRE(rk.provenance[e].size() == 1);
    CHECK(rk.provenance[e][0].edge == e);
  }
  CHECK_THROWS_AS(suppress(SignedGraph(0)), std::invalid_argument);
}

TEST_CASE("suppress is idempotent up to relabeling") {
  corpus_enumerate(4, 5, [&](const SignedGraph& g) {
    if (g.edge_count() == 0) return true;
    SuppressResult once = suppress(g);
    SuppressResult twice = suppress(once.graph);
    REQUIRE(twice.graph.vertex_count() == once.graph.vertex_count());
    REQUIRE(twice.graph.edge_count() == once.graph.edge_count());
    return true;
  });
}

TEST_CASE("circuit sign") {
  SignedGraph t = triangle();
  SubgraphHandle h = SubgraphHandle::of_edges(t, EdgeSet({0, 1, 2}));
  CHECK(circuit_sign(t, h) == 1);

  SignedGraph d = unbalanced_digon();
  CHECK(circuit_sign(d, SubgraphHandle::of_edges(d, EdgeSet({0, 1}))) == -1);

  // switch-invariance over all small circuits of a few graphs
  for (const SignedGraph& g :
       {triangle(), unbalanced_digon(), from_edges(3, {{0, 1, -1}, {1, 2, 1}, {2, 0, 1}})}) {
    for (const Circuit& c : all_circuits(g)) {
      int base = circuit_sign(g, c);
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        CHECK(circuit_sign(switch_at(g, v), c) == base);
    }
  }

  SignedGraph p = from_edges(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(circuit_sign(p, SubgraphHandle::of_edges(p, EdgeSet({0, 1}))),
                  std::invalid_argument);
}

TEST_CASE("circuit walks") {
  SignedGraph l = negative_loop();
  Circuit c = circuit_from_edges(l, EdgeSet({0}));
  CHECK(c.length() == 1);

  SignedGraph theta = theta_unbalanced();
  CHECK(all_circuits(theta).size() == 3);  // the three digon pairs
  CHECK(all_circuits(k4()).size() == 7);   // 4 triangles + 3 squares
  CHECK(all_circuits(triangle()).size() == 1);

  CHECK_THROWS_AS(circuit_from_edges(k4(), EdgeSet({0, 1})), std::invalid_argument);
}

TEST_CASE("blocks and cut vertices") {
  // two triangles joined at vertex 0
  SignedGraph g = from_edges(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1},
                                 {0, 3, 1}, {3, 4, 1}, {4, 0, 1}});
  BlockDecomposition bd = block_decomposition(g);
  CHECK(bd.cut_vertex[0] == 1);
  CHECK(bd.block_count == 2);
  CHECK(bd.edge_block[0] == bd.edge_block[1]);
  CHECK(bd.edge_block[0] != bd.edge_block[3]);
  for (Vertex v = 1; v < 5; ++v) CHECK(bd.cut_vertex[v] == 0);

  BlockDecomposition bk = block_decomposition(k4());
  CHECK(bk.block_count == 1);
}

TEST_CASE("text format round trip and errors") {
  SignedGraph b = barbell();
  std::string text = graph_to_string(b);
  SignedGraph back = parse_graph_string(text);
  CHECK(graph_hash(back) == graph_hash(b));
  CHECK(back.edge_count() == 3);

  CHECK_THROWS_AS(parse_graph_string("e 0 1 +\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_string("v 2\ne 0 5 +\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_string("v 2\ne 0 1 ?\n"), ParseError);
  CHECK(parse_graph_string("# c\nv 1\n e 0 0 - # loop\n").edge_count() == 1);
}

TEST_CASE("graph hash is order-insensitive and sign-sensitive") {
  SignedGraph a = from_edges(3, {{0, 1, 1}, {1, 2, -1}});
  SignedGraph b = from_edges(3, {{2, 1, -1}, {1, 0, 1}});
  CHECK(graph_hash(a) == graph_hash(b));
  SignedGraph c = from_edges(3, {{0, 1, -1}, {1, 2, -1}});
  CHECK(graph_hash(a) != graph_hash(c));
  CHECK(graph_hash(a) == "n3|0,1,+|1,2,-");
}
