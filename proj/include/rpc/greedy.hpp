#pragma once

// Greedy profit-target solver for the single-passenger problem: seed with a
// maximum-weight matching (computed by successive shortest paths on the
// nonnegative-weight subgraph, stopping once the next augmenting path would
// strictly increase the flow cost), then repeatedly add the heaviest
// disjoint negative edge while the weight stays at or above the target.

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "rpc/flow_solver.hpp"
#include "rpc/hypergraph.hpp"

namespace rpc {

// Maximum-weight matching of a single-passenger hypergraph. Negative edges
// can never raise a matching's weight, so the search is restricted to the
// nonnegative subgraph. Zero-cost paths are still taken: they keep the
// weight maximal while leaving no nonnegative edge disjoint from the result,
// which the cardinality guarantee of the greedy solver relies on.
inline Matching max_weight_matching(const Hypergraph& h) {
  auto [plus, minus] = split_by_sign(h);
  (void)minus;
  RpcFlowSolver solver(plus);
  while (solver.find_path()) {
    if (solver.path_cost() > 0) break;
    solver.augment();
  }
  Matching m = solver.matching(plus);
  return make_matching(h, std::move(m.edge_ids));
}

// Largest-cardinality heuristic subject to weight >= target. Infeasible only
// when even the maximum-weight matching misses the target. Negative edges
// are taken heaviest first (ties by smallest id); the pass stops at the first
// disjoint negative edge that would drop the weight below the target, since
// every remaining one is at least as damaging.
inline std::optional<Matching> greedy_rpc1(const Hypergraph& h, Money target) {
  Matching m = max_weight_matching(h);
  if (m.weight < target) return std::nullopt;

  std::unordered_set<DriverId> used_driver;
  std::unordered_set<PassengerId> used_rider;
  for (EdgeId id : m.edge_ids) {
    const HyperEdge& e = h.edge(id);
    used_driver.insert(e.driver);
    used_rider.insert(e.passengers.begin(), e.passengers.end());
  }

  std::vector<const HyperEdge*> negative;
  for (const HyperEdge& e : h.edges())
    if (e.weight < 0) negative.push_back(&e);
  std::sort(negative.begin(), negative.end(), [](const HyperEdge* a, const HyperEdge* b) {
    return a->weight != b->weight ? a->weight > b->weight : a->id < b->id;
  });

  std::vector<EdgeId> ids = m.edge_ids;
  Money weight = m.weight;
  for (const HyperEdge* e : negative) {
    if (used_driver.count(e->driver)) continue;
    bool clash = false;
    for (PassengerId r : e->passengers)
      if (used_rider.count(r)) { clash = true; break; }
    if (clash) continue;
    if (weight + e->weight < target) break;
    ids.push_back(e->id);
    weight += e->weight;
    used_driver.insert(e->driver);
    used_rider.insert(e->passengers.begin(), e->passengers.end());
  }
  return make_matching(h, std::move(ids));
}

}  // namespace rpc
