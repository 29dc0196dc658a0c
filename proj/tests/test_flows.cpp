#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "signedflow/flows.hpp"
#include "signedflow/generators.hpp"

using namespace signedflow;
using namespace signedflow::testing;

namespace {

FlowAssignment make_flow(const GroupSpec& group, std::initializer_list<long long> vals) {
  FlowAssignment f(group, static_cast<int>(vals.size()));
  int i = 0;
  for (long long v : vals) f.set(i++, {v, 0});
  return f;
}

}  // namespace

TEST_CASE("group arithmetic") {
  GroupSpec z3 = GroupSpec::modulo(3);
  CHECK(gv_add(z3, {2, 0}, {2, 0}).a == 1);
  CHECK(gv_neg(z3, {1, 0}).a == 2);
  GroupSpec zz = GroupSpec::z2z3();
  CHECK(gv_add(zz, {1, 2}, {1, 2}) == GroupValue{0, 1});
  CHECK(gv_neg(zz, {1, 1}) == GroupValue{1, 2});
  CHECK(zz.order() == 6);
  CHECK(GroupSpec::modulo(5).order() == 5);
  CHECK_THROWS_AS(GroupSpec::integer(5).order(), std::invalid_argument);
  CHECK(gv_nonzero_elements(GroupSpec::integer(3)).size() == 4);
  CHECK(gv_nonzero_elements(zz).size() == 5);
}

TEST_CASE("default orientation") {
  SignedGraph g = from_edges(2, {{0, 1, 1}, {1, 1, -1}, {1, 0, 1}});
  Orientation t = default_orientation(g);
  CHECK(orientation_valid(g, t));
  CHECK(t.at(0) == 1);   // positive (0,1): out of 0
  CHECK(t.at(1) == -1);
  CHECK(t.at(2) == 1);   // negative loop: extroverted
  CHECK(t.at(3) == 1);
  CHECK(t.at(4) == -1);  // positive (1,0): out of the lower endpoint 0
  CHECK(t.at(5) == 1);
  Orientation again = default_orientation(g);
  CHECK(t.tau == again.tau);
}

TEST_CASE("boundary of a negative loop is twice the value") {
  SignedGraph l = negative_loop();
  Orientation t = default_orientation(l);
  FlowAssignment f = make_flow(GroupSpec::integer(3), {1});
  CHECK(boundary(l, t, f, 0).a == 2);
  CHECK_FALSE(is_flow(l, t, f));
  f.set(0, {2, 0});
  CHECK_FALSE(is_flow(l, t, f));
}

TEST_CASE("triangle circulation") {
  SignedGraph t = triangle();
  Orientation tau = default_orientation(t);
  // edges (0,1),(1,2),(2,0) default to 0->1, 1->2, 0->2
  FlowAssignment f = make_flow(GroupSpec::integer(2), {1, 1, -1});
  for (Vertex v = 0; v < 3; ++v) CHECK(gv_is_zero(boundary(t, tau, f, v)));
  CHECK(is_k_nzf(t, tau, f, 2));

  // the same circulation under an explicit consistent orientation, all ones
  Orientation consistent = tau;
  consistent.tau[4] = 1;
  consistent.tau[5] = -1;  // edge 2 now 2->0
  CHECK(orientation_valid(t, consistent));
  FlowAssignment ones = make_flow(GroupSpec::integer(2), {1, 1, 1});
  CHECK(is_nzf(t, consistent, ones));
}

TEST_CASE("barbell boundary by hand") {
  SignedGraph b = barbell();  // edge 0 = (0,1)+, loop 1 at 0, loop 2 at 1
  Orientation t = default_orientation(b);
  // extroverted loop at 0, introverted at 1, bridge directed 1 -> 0
  t.tau[0] = -1;
  t.tau[1] = 1;
  t.tau[4] = -1;
  t.tau[5] = -1;
  CHECK(orientation_valid(b, t));
  FlowAssignment f(GroupSpec::integer(5), 3);
  f.set(0, {2, 0});
  f.set(1, {1, 0});
  f.set(2, {1, 0});
  CHECK(gv_is_zero(boundary(b, t, f, 0)));
  CHECK(gv_is_zero(boundary(b, t, f, 1)));
  CHECK(is_nzf(b, t, f));
}

TEST_CASE("k13 with negative leaf loops carries the 1,2,4 pattern") {
  SignedGraph g = fig1_caterpillar(1);  // pendants 0..2, loops 3..5
  Orientation t = default_orientation(g);
  FlowAssignment f(GroupSpec::integer(5), 6);
  f.set(0, {2, 0});
  f.set(1, {2, 0});
  f.set(2, {-4, 0});
  f.set(3, {1, 0});
  f.set(4, {1, 0});
  f.set(5, {-2, 0});
  CHECK(is_k_nzf(g, t, f, 5));
  CHECK(edges_with_abs(f, 4).items() == std::vector<int>{2});
  CHECK(edges_with_abs(f, 3).empty());
  // derived: exhaustive search confirms a 5-NZF exists here at all
  CHECK(exists_nzf_brute(g, GroupSpec::integer(5)));
}

TEST_CASE("balancedness of z2z3 flows") {
  SignedGraph b = barbell();
  FlowAssignment f(GroupSpec::z2z3(), 3);
  f.set(0, {0, 1});
  f.set(1, {1, 0});
  f.set(2, {0, 1});
  CHECK_FALSE(is_balanced_z2z3(b, f));  // one negative loop in supp(f1)
  f.set(2, {1, 1});
  CHECK(is_balanced_z2z3(b, f));  // both loops
  SignedGraph t = triangle();
  FlowAssignment ft(GroupSpec::z2z3(), 3);
  ft.set(0, {1, 1});
  CHECK(is_balanced_z2z3(t, ft));  // no negative edges at all
  CHECK_THROWS_AS(is_balanced_z2z3(t, make_flow(GroupSpec::integer(3), {1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("reorientation is an involution and keeps boundaries") {
  SignedGraph t = triangle();
  Orientation tau = default_orientation(t);
  FlowAssignment f = make_flow(GroupSpec::integer(2), {1, 1, -1});
  auto [t1, f1] = reorient_edge(t, tau, f, 2);
  CHECK(f1.value(2).a == 1);
  CHECK(is_nzf(t, t1, f1));
  auto [t2, f2] = reorient_edge(t, t1, f1, 2);
  CHECK(t2.tau == tau.tau);
  CHECK(f2.values == f.values);

  // boundary vectors stay put on random assignments over random graphs
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    SignedGraph g = random_signed(4, 6, 0.5, rng());
    Orientation tg = default_orientation(g);
    FlowAssignment fg(GroupSpec::integer(7), 6);
    for (EdgeId e = 0; e < 6; ++e)
      fg.set(e, {static_cast<long long>(rng() % 13) - 6, 0});
    EdgeId pick = static_cast<EdgeId>(rng() % 6);
    auto [tr, fr] = reorient_edge(g, tg, fg, pick);
    for (Vertex v = 0; v < 4; ++v)
      CHECK(boundary(g, tg, fg, v).a == boundary(g, tr, fr, v).a);
  }
}

TEST_CASE("support helpers") {
  FlowAssignment zero(GroupSpec::integer(4), 5);
  CHECK(support(zero).empty());
  FlowAssignment f = make_flow(GroupSpec::integer(5), {0, 3, -3, 1, 0});
  CHECK(support(f).items() == std::vector<int>{1, 2, 3});
  CHECK(edges_with_abs(f, 3).items() == std::vector<int>{1, 2});
}

TEST_CASE("sum of boundaries equals twice the negative-edge flux") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    SignedGraph g = random_signed(4, 5, 0.4, rng());
    Orientation t = default_orientation(g);
    FlowAssignment f(GroupSpec::integer(9), g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      f.set(e, {static_cast<long long>(rng() % 17) - 8, 0});
    long long total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += boundary(g, t, f, v).a;
    long long neg_flux = 0;
    for (const EdgeRec& e : g.edges())
      if (e.sign < 0) neg_flux += t.at(2 * e.id) * f.value(e.id).a;
    CHECK(total == 2 * neg_flux);
  }
}

TEST_CASE("express_under flips exactly the disagreeing edges") {
  SignedGraph t = triangle();
  Orientation a = default_orientation(t);
  Orientation b = a;
  b.tau[2] = -b.tau[2];
  b.tau[3] = -b.tau[3];
  FlowAssignment f = make_flow(GroupSpec::integer(2), {1, 1, -1});
  FlowAssignment g = express_under(t, a, f, b);
  CHECK(g.value(0).a == 1);
  CHECK(g.value(1).a == -1);
  CHECK(g.value(2).a == -1);
  CHECK(is_nzf(t, b, g));
}

TEST_CASE("flows lift through suppression") {
  // subdivided all-positive theta (the one-negative variant has
  // negativeness 1 and admits no flow at all)
  SignedGraph g = from_edges(4, {{0, 2, 1}, {2, 1, 1}, {0, 3, 1}, {3, 1, 1}, {0, 1, 1}});
  SuppressResult sup = suppress(g);
  Orientation ts = default_orientation(sup.graph);
  // brute-force a nowhere-zero 4-flow on the suppressed graph
  FlowAssignment fs(GroupSpec::integer(4), sup.graph.edge_count());
  bool found = false;
  enumerate_tuples(sup.graph.edge_count(), all_nonzero(GroupSpec::integer(4)),
                   [&](const std::vector<GroupValue>& vals) {
                     if (!raw_is_flow(sup.graph, ts, GroupSpec::integer(4), vals))
                       return true;
                     fs.values = vals;
                     found = true;
                     return false;
                   });
  REQUIRE(found);
  auto [tl, fl] = lift_through_suppression(g, sup, ts, fs);
  CHECK(is_nzf(g, tl, fl));

  // and on every corpus graph that has both 2-vertices and a Z3-NZF
  corpus_enumerate(3, 4, [&](const SignedGraph& h) {
    if (h.edge_count() == 0) return true;
    SuppressResult s = suppress(h);
    if (s.graph.edge_count() == h.edge_count()) return true;
    Orientation tsup = default_orientation(s.graph);
    GroupSpec z3 = GroupSpec::modulo(3);
    bool ok = true;
    enumerate_tuples(s.graph.edge_count(), all_nonzero(z3),
                     [&](const std::vector<GroupValue>& vals) {
                       if (!raw_is_flow(s.graph, tsup, z3, vals)) return true;
                       FlowAssignment fsup(z3, s.graph.edge_count());
                       fsup.values = vals;
                       auto [tlift, flift] = lift_through_suppression(h, s, tsup, fsup);
                       ok = ok && is_nzf(h, tlift, flift);
                       return false;  // one witness per graph is enough
                     });
    REQUIRE(ok);
    return true;
  });
}
