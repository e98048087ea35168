#pragma once

// Exhaustive reference solvers for small instances. These enumerate every
// matching of the hypergraph by backtracking (edges in ascending id order)
// and keep the best candidate under each problem's objective, so they are
// deliberately simple rather than fast. A state budget caps the number of
// visited matchings; exceeding it throws.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rpc/hypergraph.hpp"

namespace rpc {

constexpr std::uint64_t kOracleStateBudget = std::uint64_t{1} << 24;

namespace detail {

// Calls visit(chosen_ids, weight, served) once per matching (the empty
// matching included). Edges are considered in ascending id order, so chosen
// id lists are produced sorted.
template <typename Visit>
void enumerate_matchings(const Hypergraph& h, std::uint64_t budget, Visit&& visit) {
  std::vector<const HyperEdge*> edges;
  edges.reserve(h.edge_count());
  for (const HyperEdge& e : h.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const HyperEdge* a, const HyperEdge* b) { return a->id < b->id; });

  std::unordered_map<DriverId, int> driver_ix;
  std::unordered_map<PassengerId, int> passenger_ix;
  for (DriverId d : h.drivers()) driver_ix.emplace(d, static_cast<int>(driver_ix.size()));
  for (PassengerId r : h.passengers())
    passenger_ix.emplace(r, static_cast<int>(passenger_ix.size()));

  struct DenseEdge {
    EdgeId id;
    int driver;
    std::vector<int> riders;
    Money weight;
  };
  std::vector<DenseEdge> dense;
  dense.reserve(edges.size());
  for (const HyperEdge* e : edges) {
    DenseEdge de{e->id, driver_ix.at(e->driver), {}, e->weight};
    for (PassengerId r : e->passengers) de.riders.push_back(passenger_ix.at(r));
    dense.push_back(std::move(de));
  }

  std::vector<char> driver_used(driver_ix.size(), 0);
  std::vector<char> passenger_used(passenger_ix.size(), 0);
  std::vector<EdgeId> chosen;
  std::uint64_t visited = 0;

  auto rec = [&](auto&& self, std::size_t start, Money weight, int served) -> void {
    if (++visited > budget) throw std::runtime_error("matching enumeration budget exceeded");
    visit(chosen, weight, served);
    for (std::size_t j = start; j < dense.size(); ++j) {
      const DenseEdge& e = dense[j];
      if (driver_used[e.driver]) continue;
      bool clash = false;
      for (int r : e.riders)
        if (passenger_used[r]) { clash = true; break; }
      if (clash) continue;
      driver_used[e.driver] = 1;
      for (int r : e.riders) passenger_used[r] = 1;
      chosen.push_back(e.id);
      self(self, j + 1, weight + e.weight, served + static_cast<int>(e.riders.size()));
      chosen.pop_back();
      driver_used[e.driver] = 0;
      for (int r : e.riders) passenger_used[r] = 0;
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace detail

// Maximizes the number of matched passengers (= matched edges, since every
// edge carries one passenger) subject to total weight >= target. Ties prefer
// larger weight, then the lexicographically smallest id set. Returns nullopt
// when no matching (the empty one included) meets the target.
inline std::optional<Matching> brute_rpc1(const Hypergraph& h, Money target,
                                          std::uint64_t budget = kOracleStateBudget) {
  if (!h.unit_capacity()) throw std::invalid_argument("brute_rpc1 requires single-passenger edges");
  bool found = false;
  std::vector<EdgeId> best_ids;
  Money best_w = 0;
  int best_n = -1;
  detail::enumerate_matchings(h, budget, [&](const std::vector<EdgeId>& ids, Money w, int) {
    if (w < target) return;
    int n = static_cast<int>(ids.size());
    if (!found || n > best_n || (n == best_n && w > best_w) ||
        (n == best_n && w == best_w && ids < best_ids)) {
      found = true;
      best_ids = ids;
      best_w = w;
      best_n = n;
    }
  });
  if (!found) return std::nullopt;
  return make_matching(h, best_ids);
}

// Maximizes the number of served passengers over nonnegative-weight edges
// subject to total weight >= target. Ties prefer larger weight, then the
// lexicographically smallest id set.
inline std::optional<Matching> brute_rpcplus(const Hypergraph& h, Money target,
                                             std::uint64_t budget = kOracleStateBudget) {
  std::vector<HyperEdge> plus;
  for (const HyperEdge& e : h.edges())
    if (e.weight >= 0) plus.push_back(e);
  Hypergraph hp = Hypergraph::from_edges(std::move(plus));
  bool found = false;
  std::vector<EdgeId> best_ids;
  Money best_w = 0;
  int best_served = -1;
  detail::enumerate_matchings(hp, budget, [&](const std::vector<EdgeId>& ids, Money w, int served) {
    if (w < target) return;
    if (!found || served > best_served || (served == best_served && w > best_w) ||
        (served == best_served && w == best_w && ids < best_ids)) {
      found = true;
      best_ids = ids;
      best_w = w;
      best_served = served;
    }
  });
  if (!found) return std::nullopt;
  return make_matching(h, best_ids);
}

// Maximum-weight matching with no profit target (the empty matching gives the
// weight-0 baseline). Ties prefer more served passengers, then the
// lexicographically smallest id set.
inline Matching brute_rp(const Hypergraph& h, std::uint64_t budget = kOracleStateBudget) {
  std::vector<EdgeId> best_ids;
  Money best_w = 0;
  int best_served = 0;
  bool found = false;
  detail::enumerate_matchings(h, budget, [&](const std::vector<EdgeId>& ids, Money w, int served) {
    if (!found || w > best_w || (w == best_w && served > best_served) ||
        (w == best_w && served == best_served && ids < best_ids)) {
      found = true;
      best_ids = ids;
      best_w = w;
      best_served = served;
    }
  });
  return make_matching(h, best_ids);
}

}  // namespace rpc
