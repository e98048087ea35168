#pragma once

// Edge-weighted hypergraph of feasible matches. Vertices are driver and
// passenger ids; each hyperedge joins one driver with a nonempty passenger
// group and carries the match profit (cents) as its weight. Edge ids are
// stable: assigned in input order on construction and preserved by subgraph
// operations, so matchings can be communicated as id sets.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rpc/money.hpp"
#include "rpc/types.hpp"

namespace rpc {

struct HyperEdge {
  EdgeId id = 0;
  DriverId driver = 0;
  std::vector<PassengerId> passengers;  // sorted ascending, nonempty
  Money weight = 0;

  int riders() const { return static_cast<int>(passengers.size()); }
};

class Hypergraph {
 public:
  Hypergraph() = default;

  // Takes ownership of validated edges: ids unique, passenger lists sorted,
  // nonempty and duplicate-free, no two edges with the same (driver, group).
  static Hypergraph from_edges(std::vector<HyperEdge> edges) {
    Hypergraph h;
    h.edges_ = std::move(edges);
    h.build_index();
    return h;
  }

  const std::vector<HyperEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool has_edge(EdgeId id) const { return pos_.count(id) != 0; }

  const HyperEdge& edge(EdgeId id) const {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return edges_[it->second];
  }

  // Vertices incident to at least one edge (there are no isolated vertices).
  const std::vector<DriverId>& drivers() const { return drivers_; }
  const std::vector<PassengerId>& passengers() const { return passengers_; }

  const std::vector<EdgeId>& edges_of_driver(DriverId d) const {
    static const std::vector<EdgeId> kNone;
    auto it = by_driver_.find(d);
    return it == by_driver_.end() ? kNone : it->second;
  }

  const std::vector<EdgeId>& edges_of_passenger(PassengerId r) const {
    static const std::vector<EdgeId> kNone;
    auto it = by_passenger_.find(r);
    return it == by_passenger_.end() ? kNone : it->second;
  }

  // True when every edge carries exactly one passenger.
  bool unit_capacity() const {
    for (const auto& e : edges_)
      if (e.riders() != 1) return false;
    return true;
  }

 private:
  void build_index() {
    pos_.clear();
    by_driver_.clear();
    by_passenger_.clear();
    drivers_.clear();
    passengers_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const HyperEdge& e = edges_[i];
      if (e.passengers.empty()) throw std::invalid_argument("edge with empty passenger group");
      if (!std::is_sorted(e.passengers.begin(), e.passengers.end()) ||
          std::adjacent_find(e.passengers.begin(), e.passengers.end()) != e.passengers.end())
        throw std::invalid_argument("edge passenger list must be sorted and duplicate-free");
      if (!pos_.emplace(e.id, i).second)
        throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
      by_driver_[e.driver].push_back(e.id);
      for (PassengerId r : e.passengers) by_passenger_[r].push_back(e.id);
    }
    for (auto& [d, ids] : by_driver_) {
      std::sort(ids.begin(), ids.end());
      drivers_.push_back(d);
    }
    for (auto& [r, ids] : by_passenger_) {
      std::sort(ids.begin(), ids.end());
      passengers_.push_back(r);
    }
    std::sort(drivers_.begin(), drivers_.end());
    std::sort(passengers_.begin(), passengers_.end());
  }

  std::vector<HyperEdge> edges_;
  std::unordered_map<EdgeId, std::size_t> pos_;
  std::unordered_map<DriverId, std::vector<EdgeId>> by_driver_;
  std::unordered_map<PassengerId, std::vector<EdgeId>> by_passenger_;
  std::vector<DriverId> drivers_;
  std::vector<PassengerId> passengers_;
};

// Builds the match hypergraph from priced matches. Edge weight is the match
// profit; ids are assigned 0,1,2,... in input order; a later match with the
// same driver and passenger group as an earlier one is dropped. When a
// capacity map is supplied, a match whose group exceeds its driver's capacity
// is rejected.
inline Hypergraph build_hypergraph(
    const std::vector<FeasibleMatch>& matches,
    const std::unordered_map<DriverId, int>* capacities = nullptr) {
  std::vector<HyperEdge> edges;
  edges.reserve(matches.size());
  std::unordered_map<DriverId, std::vector<std::vector<PassengerId>>> seen;
  EdgeId next_id = 0;
  for (const FeasibleMatch& m : matches) {
    if (m.passengers.empty()) throw std::invalid_argument("match with empty passenger group");
    std::vector<PassengerId> group = m.passengers;
    std::sort(group.begin(), group.end());
    if (std::adjacent_find(group.begin(), group.end()) != group.end())
      throw std::invalid_argument("match lists a passenger twice");
    if (capacities) {
      auto it = capacities->find(m.driver);
      if (it == capacities->end())
        throw std::invalid_argument("match references unknown driver " + std::to_string(m.driver));
      if (static_cast<int>(group.size()) > it->second)
        throw std::invalid_argument("match exceeds driver capacity");
    }
    auto& groups = seen[m.driver];
    if (std::find(groups.begin(), groups.end(), group) != groups.end()) continue;
    groups.push_back(group);
    edges.push_back(HyperEdge{next_id++, m.driver, std::move(group), m.profit});
  }
  return Hypergraph::from_edges(std::move(edges));
}

// Splits into (nonnegative-weight, negative-weight) subgraphs; edge ids are
// preserved so matchings remain valid across the split.
inline std::pair<Hypergraph, Hypergraph> split_by_sign(const Hypergraph& h) {
  std::vector<HyperEdge> plus, minus;
  for (const HyperEdge& e : h.edges()) (e.weight >= 0 ? plus : minus).push_back(e);
  return {Hypergraph::from_edges(std::move(plus)), Hypergraph::from_edges(std::move(minus))};
}

// A solution: pairwise vertex-disjoint edge set with cached totals.
struct Matching {
  std::vector<EdgeId> edge_ids;  // ascending
  Money weight = 0;
  int served = 0;  // total passengers covered

  int size() const { return static_cast<int>(edge_ids.size()); }
};

inline Matching make_matching(const Hypergraph& h, std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  Matching m;
  m.edge_ids = std::move(ids);
  for (EdgeId id : m.edge_ids) {
    const HyperEdge& e = h.edge(id);
    m.weight += e.weight;
    m.served += e.riders();
  }
  return m;
}

struct ValidationResult {
  bool ok = true;
  std::string message;
  Money weight = 0;    // recomputed
  int served = 0;      // recomputed
  EdgeId first = -1;   // first conflicting pair when disjointness fails
  EdgeId second = -1;
};

// Checks that a matching references known edges, is pairwise vertex-disjoint
// (no shared driver or passenger) and that its cached totals are accurate.
inline ValidationResult validate_matching(const Hypergraph& h, const Matching& m) {
  ValidationResult res;
  std::unordered_map<DriverId, EdgeId> driver_used;
  std::unordered_map<PassengerId, EdgeId> passenger_used;
  std::vector<EdgeId> ids = m.edge_ids;
  std::sort(ids.begin(), ids.end());
  for (EdgeId id : ids) {
    if (!h.has_edge(id)) {
      res.ok = false;
      res.message = "unknown edge id " + std::to_string(id);
      return res;
    }
    const HyperEdge& e = h.edge(id);
    auto [dit, dnew] = driver_used.emplace(e.driver, id);
    if (!dnew) {
      res.ok = false;
      res.first = dit->second;
      res.second = id;
      res.message = "edges " + std::to_string(res.first) + " and " + std::to_string(id) +
                    " share driver " + std::to_string(e.driver);
      return res;
    }
    for (PassengerId r : e.passengers) {
      auto [pit, pnew] = passenger_used.emplace(r, id);
      if (!pnew) {
        res.ok = false;
        res.first = pit->second;
        res.second = id;
        res.message = "edges " + std::to_string(res.first) + " and " + std::to_string(id) +
                      " share passenger " + std::to_string(r);
        return res;
      }
    }
    res.weight += e.weight;
    res.served += e.riders();
  }
  if (res.weight != m.weight || res.served != m.served) {
    res.ok = false;
    res.message = "cached totals disagree with edge set";
  }
  return res;
}

}  // namespace rpc
