#include "rpc/flow_solver.hpp"

#include <gtest/gtest.h>

#include "rpc/oracle.hpp"
#include "test_util.hpp"

namespace rpc {
namespace {

using rpctest::edge;
using rpctest::graph;

// Drivers 1 and 2 over riders 1 and 2: (d1,r1,5), (d1,r2,3), (d2,r1,4).
// Node order: source 0, d1=1, d2=2, r1=3, r2=4, sink 5.
Hypergraph triangle() {
  return graph({edge(0, 1, {1}, 5), edge(1, 1, {2}, 3), edge(2, 2, {1}, 4)});
}

TEST(FlowNetwork, LaysOutLayersAndArcCosts) {
  FlowNetwork n = build_flow_network(triangle());
  EXPECT_EQ(n.node_count(), 6);
  EXPECT_EQ(n.source(), 0);
  EXPECT_EQ(n.sink(), 5);
  ASSERT_EQ(n.arcs.size(), 14u);  // 2 source + 3 edge + 2 sink arcs, each paired

  // Forward arcs in insertion order: s->d1, s->d2, d1->r1, d1->r2, d2->r1,
  // r1->t, r2->t.
  EXPECT_EQ(n.arcs[0].to, 1);
  EXPECT_EQ(n.arcs[0].cost, 0);
  EXPECT_EQ(n.arcs[4].to, 3);
  EXPECT_EQ(n.arcs[4].cost, -5);
  EXPECT_EQ(n.arcs[6].to, 4);
  EXPECT_EQ(n.arcs[6].cost, -3);
  EXPECT_EQ(n.arcs[8].to, 3);
  EXPECT_EQ(n.arcs[8].cost, -4);
  EXPECT_EQ(n.arc_edge[4], 0);
  EXPECT_EQ(n.arc_edge[8], 2);
  EXPECT_EQ(n.arcs[5].cost, 5);  // paired reverse negates
  EXPECT_EQ(n.arcs[5].cap, 0);
}

TEST(FlowNetwork, RejectsMultiPassengerEdges) {
  EXPECT_THROW(build_flow_network(graph({edge(0, 1, {1, 2}, 5)})), std::invalid_argument);
}

TEST(Reweight, ComputesTruncatedDistanceLevels) {
  FlowNetwork n = build_flow_network(triangle());
  int rounds = 0;
  std::vector<Money> h = johnson_reweight(n, &rounds);
  EXPECT_EQ(rounds, 3);
  ASSERT_EQ(h.size(), 6u);
  EXPECT_EQ(h[0], 0);
  EXPECT_EQ(h[1], 0);
  EXPECT_EQ(h[2], 0);
  EXPECT_EQ(h[3], -5);
  EXPECT_EQ(h[4], -3);
  EXPECT_EQ(h[5], -5);

  // Reweighted arc costs: zero along the d1 tree, 1 on d2->r1, 2 on r2->t.
  for (std::size_t a = 0; a < n.arcs.size(); a += 2) EXPECT_GE(n.arcs[a].rcost, 0);
  EXPECT_EQ(n.arcs[4].rcost, 0);   // d1->r1
  EXPECT_EQ(n.arcs[6].rcost, 0);   // d1->r2
  EXPECT_EQ(n.arcs[8].rcost, 1);   // d2->r1
  EXPECT_EQ(n.arcs[10].rcost, 0);  // r1->t
  EXPECT_EQ(n.arcs[12].rcost, 2);  // r2->t
  EXPECT_EQ(n.arcs[9].rcost, -1);  // reverse carries the negation
}

TEST(FlowSolver, CostSequenceTracksBestMatchingPerSize) {
  RpcFlowSolver solver(triangle(), true);
  ASSERT_TRUE(solver.find_path());
  EXPECT_EQ(solver.path_cost(), -5);
  solver.augment();
  ASSERT_TRUE(solver.find_path());
  EXPECT_EQ(solver.path_cost(), -2);
  solver.augment();
  EXPECT_FALSE(solver.find_path());
  EXPECT_EQ(solver.cost_sequence(), (std::vector<Money>{-5, -7}));
  EXPECT_EQ(solver.flow_value(), 2);
  EXPECT_EQ(solver.flow_cost(), -7);
  EXPECT_TRUE(solver.invariants_ok());

  Matching m = solver.matching(triangle());
  EXPECT_EQ(m.edge_ids, (std::vector<EdgeId>{1, 2}));
  EXPECT_EQ(m.weight, 7);
}

TEST(FlowSolver, AugmentWithoutPathThrows) {
  RpcFlowSolver solver(triangle());
  EXPECT_THROW(solver.augment(), std::logic_error);
}

TEST(SolveExact, MeetsTargetWithLargestMatching) {
  ExactSolveTrace trace;
  auto m = solve_rpc1_exact(triangle(), Money{7}, &trace, true);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2);
  EXPECT_EQ(m->weight, 7);
  EXPECT_EQ(trace.flow_costs, (std::vector<Money>{-5, -7}));
  EXPECT_EQ(trace.reweight_rounds, 3);
  EXPECT_TRUE(trace.invariants_ok);
}

TEST(SolveExact, InfeasibleTargetReturnsNothing) {
  EXPECT_FALSE(solve_rpc1_exact(triangle(), Money{8}).has_value());
}

TEST(SolveExact, UnreachableTargetAboveMaxWeight) {
  // Weights rise 0 -> 5 -> 7 and stop; 7 < 9 means no matching qualifies.
  auto m = solve_rpc1_exact(triangle(), Money{9});
  EXPECT_FALSE(m.has_value());
}

TEST(SolveExact, KeepsAugmentingWhileWeightRises) {
  // The 5 -> 7 augmentation raises the weight, so it is taken even though
  // target 6 was already met with one match.
  auto m = solve_rpc1_exact(triangle(), Money{6});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2);
  EXPECT_EQ(m->weight, 7);
}

TEST(SolveExact, TradesWeightForSizeOnlyWhileFeasible) {
  // (d1,r1,9) against (d1,r2,2)+(d2,r1,3): two matches pay 5, one pays 9.
  Hypergraph h = graph({edge(0, 1, {1}, 9), edge(1, 1, {2}, 2), edge(2, 2, {1}, 3)});
  auto two = solve_rpc1_exact(h, Money{5});
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->size(), 2);
  EXPECT_EQ(two->weight, 5);
  auto one = solve_rpc1_exact(h, Money{6});
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->size(), 1);
  EXPECT_EQ(one->weight, 9);
}

TEST(SolveExact, NoTargetMaximizesSizeThenWeight) {
  Hypergraph h = graph({edge(0, 1, {1}, 9), edge(1, 1, {2}, 2), edge(2, 2, {1}, 3)});
  auto m = solve_rpc1_exact(h, std::nullopt);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2);
  EXPECT_EQ(m->weight, 5);
}

TEST(SolveExact, NegativeTargetAdmitsLossyMatchings) {
  Hypergraph h = graph({edge(0, 1, {1}, -2), edge(1, 2, {2}, -4)});
  auto m = solve_rpc1_exact(h, Money{-5});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 1);
  EXPECT_EQ(m->weight, -2);
  auto both = solve_rpc1_exact(h, Money{-6});
  ASSERT_TRUE(both.has_value());
  EXPECT_EQ(both->size(), 2);
  EXPECT_EQ(both->weight, -6);
}

TEST(SolveExact, ZeroWeightEdgesStillServe) {
  Hypergraph h = graph({edge(0, 1, {1}, 0), edge(1, 2, {2}, 0)});
  auto m = solve_rpc1_exact(h, Money{0});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2);
  EXPECT_EQ(m->weight, 0);
}

TEST(SolveExact, EmptyGraph) {
  Hypergraph h;
  auto ok = solve_rpc1_exact(h, Money{0});
  ASSERT_TRUE(ok.has_value());
  EXPECT_EQ(ok->size(), 0);
  EXPECT_FALSE(solve_rpc1_exact(h, Money{1}).has_value());
}

TEST(SolveExact, AgreesWithExhaustiveSearchOnAFixedFamily) {
  // A fixed 3x3 instance swept over every integer target in range.
  Hypergraph h = graph({edge(0, 1, {1}, 6), edge(1, 1, {2}, -3), edge(2, 2, {2}, 8),
                        edge(3, 2, {3}, -1), edge(4, 3, {1}, 2), edge(5, 3, {3}, 4)});
  for (Money c = -10; c <= 20; ++c) {
    auto fast = solve_rpc1_exact(h, c);
    auto slow = brute_rpc1(h, c);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << "target " << c;
    if (fast) {
      EXPECT_EQ(fast->size(), slow->size()) << "target " << c;
      EXPECT_EQ(fast->weight, slow->weight) << "target " << c;
    }
  }
}

}  // namespace
}  // namespace rpc
