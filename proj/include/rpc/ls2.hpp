#pragma once

// Local-search solver for the multi-passenger problem restricted to
// nonnegative-weight matches. Step 1 greedily packs the heaviest disjoint
// edges. Step 2 walks the single-passenger edges of that seed in ascending
// weight order and tries to replace each one with up to two of its neighbor
// edges covering strictly more passengers, while keeping the matching
// disjoint and its weight at or above the profit target.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rpc/hypergraph.hpp"

namespace rpc {

// Maximal matching over nonnegative-weight edges: repeatedly add the
// heaviest edge disjoint from the current matching (ties by smallest id).
inline Matching simple_greedy(const Hypergraph& h) {
  std::vector<const HyperEdge*> order;
  for (const HyperEdge& e : h.edges())
    if (e.weight >= 0) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const HyperEdge* a, const HyperEdge* b) {
    return a->weight != b->weight ? a->weight > b->weight : a->id < b->id;
  });
  std::unordered_set<DriverId> used_driver;
  std::unordered_set<PassengerId> used_rider;
  std::vector<EdgeId> ids;
  for (const HyperEdge* e : order) {
    if (used_driver.count(e->driver)) continue;
    bool clash = false;
    for (PassengerId r : e->passengers)
      if (used_rider.count(r)) { clash = true; break; }
    if (clash) continue;
    ids.push_back(e->id);
    used_driver.insert(e->driver);
    used_rider.insert(e->passengers.begin(), e->passengers.end());
  }
  return make_matching(h, std::move(ids));
}

// Profit target below which the local search keeps its approximation
// guarantee: w(M \ A) + floor(2 w(A) / (lambda + 1)), where A holds the
// single-passenger edges of the seed matching M.
inline Money profit_target_bound(const Hypergraph& h, const Matching& seed, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be positive");
  Money single = 0, multi = 0;
  for (EdgeId id : seed.edge_ids) {
    const HyperEdge& e = h.edge(id);
    (e.riders() == 1 ? single : multi) += e.weight;
  }
  if (single < 0) throw std::invalid_argument("seed matching has negative single-edge weight");
  return multi + (2 * single) / (lambda + 1);
}

// A replacement for one single-passenger matched edge: one or two neighbor
// edges that keep the matching disjoint and cover more passengers.
struct Improvement {
  std::vector<EdgeId> edges;  // ascending, size 1 or 2
  int riders = 0;             // passengers covered by the replacement edges
  int gain = 0;               // replacement passengers not already matched
  Money weight = 0;
};

// Searches single edges and pairs among the neighbors of edge e (edges of h
// sharing the driver or the passenger). A candidate must leave
// (M + candidate - e) pairwise disjoint, cover at least two passengers and
// keep the weight at or above the target. With lambda == 2 only candidates
// covering four passengers qualify (three with the aggressive flag); the
// best candidate maximizes newly covered passengers, then weight, then has
// the smallest id set.
inline std::optional<Improvement> find_improvement(const Hypergraph& h, const Matching& m,
                                                   EdgeId e_id, Money target, int lambda,
                                                   bool aggressive = false) {
  const HyperEdge& e = h.edge(e_id);
  if (e.riders() != 1) throw std::invalid_argument("improvement pivot must carry one passenger");
  if (std::find(m.edge_ids.begin(), m.edge_ids.end(), e_id) == m.edge_ids.end())
    throw std::invalid_argument("improvement pivot must be matched");

  std::unordered_set<DriverId> used_driver;
  std::unordered_set<PassengerId> used_rider;
  for (EdgeId id : m.edge_ids) {
    if (id == e_id) continue;
    const HyperEdge& f = h.edge(id);
    used_driver.insert(f.driver);
    used_rider.insert(f.passengers.begin(), f.passengers.end());
  }

  // Neighbors of e that individually fit against M - e.
  std::vector<const HyperEdge*> cands;
  {
    std::vector<EdgeId> nbr = h.edges_of_driver(e.driver);
    const auto& via_rider = h.edges_of_passenger(e.passengers[0]);
    nbr.insert(nbr.end(), via_rider.begin(), via_rider.end());
    std::sort(nbr.begin(), nbr.end());
    nbr.erase(std::unique(nbr.begin(), nbr.end()), nbr.end());
    for (EdgeId id : nbr) {
      if (id == e_id) continue;
      const HyperEdge& f = h.edge(id);
      if (f.weight < 0) continue;
      if (used_driver.count(f.driver)) continue;
      bool clash = false;
      for (PassengerId r : f.passengers)
        if (used_rider.count(r)) { clash = true; break; }
      if (!clash) cands.push_back(&f);
    }
  }

  auto riders_ok = [&](int riders) {
    if (riders < 2) return false;
    if (lambda == 2) return riders == 4 || (aggressive && riders == 3);
    return true;
  };
  auto count_gain = [&](const std::vector<const HyperEdge*>& delta) {
    int gain = 0;
    for (const HyperEdge* f : delta)
      for (PassengerId r : f->passengers)
        if (!used_rider.count(r) && r != e.passengers[0]) ++gain;
    return gain;
  };

  std::optional<Improvement> best;
  auto consider = [&](std::vector<const HyperEdge*> delta) {
    int riders = 0;
    Money weight = 0;
    for (const HyperEdge* f : delta) {
      riders += f->riders();
      weight += f->weight;
    }
    if (!riders_ok(riders)) return;
    if (m.weight + weight - e.weight < target) return;
    Improvement imp;
    for (const HyperEdge* f : delta) imp.edges.push_back(f->id);
    std::sort(imp.edges.begin(), imp.edges.end());
    imp.riders = riders;
    imp.gain = count_gain(delta);
    imp.weight = weight;
    if (!best || imp.gain > best->gain || (imp.gain == best->gain && imp.weight > best->weight) ||
        (imp.gain == best->gain && imp.weight == best->weight && imp.edges < best->edges))
      best = std::move(imp);
  };

  for (std::size_t i = 0; i < cands.size(); ++i) {
    consider({cands[i]});
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      const HyperEdge* f = cands[i];
      const HyperEdge* g = cands[j];
      if (f->driver == g->driver) continue;
      bool clash = false;
      for (PassengerId r : f->passengers)
        if (std::binary_search(g->passengers.begin(), g->passengers.end(), r)) {
          clash = true;
          break;
        }
      if (clash) continue;
      consider({f, g});
    }
  }
  return best;
}

// Local-search solver. Returns nullopt when even the greedy seed misses the
// target (the guarantee regime is target <= profit_target_bound(seed)).
inline std::optional<Matching> ls2(const Hypergraph& h, Money target, int lambda,
                                   bool aggressive = false) {
  auto [plus, minus] = split_by_sign(h);
  (void)minus;
  Matching m = simple_greedy(plus);
  if (m.weight < target) return std::nullopt;

  std::vector<EdgeId> singles;
  for (EdgeId id : m.edge_ids)
    if (plus.edge(id).riders() == 1) singles.push_back(id);
  std::sort(singles.begin(), singles.end(), [&](EdgeId a, EdgeId b) {
    Money wa = plus.edge(a).weight, wb = plus.edge(b).weight;
    return wa != wb ? wa < wb : a < b;
  });

  for (EdgeId a : singles) {
    auto imp = find_improvement(plus, m, a, target, lambda, aggressive);
    if (!imp) continue;
    std::vector<EdgeId> ids;
    ids.reserve(m.edge_ids.size() + imp->edges.size());
    for (EdgeId id : m.edge_ids)
      if (id != a) ids.push_back(id);
    ids.insert(ids.end(), imp->edges.begin(), imp->edges.end());
    m = make_matching(plus, std::move(ids));
  }
  return make_matching(h, std::move(m.edge_ids));
}

}  // namespace rpc
