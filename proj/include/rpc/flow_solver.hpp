#pragma once

// Exact solver for the unit-capacity assignment flow. The bipartite match
// hypergraph becomes a four-layer network source -> drivers -> passengers ->
// sink with unit capacities; driver->passenger arcs cost the negated match
// weight, all other arcs cost zero. Costs are first made nonnegative by a
// single vertex reweighting h derived from a Bellman-Ford pass truncated to
// exactly three rounds (every source-sink path has three arcs), after which
// successive shortest paths run plain Dijkstra with node potentials and
// early termination at the sink. The flow cost after y augmentations equals
// the negated maximum weight over y-edge matchings, and its increments are
// nondecreasing, which is what the profit-target stopping rule exploits.

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rpc/hypergraph.hpp"

namespace rpc {

constexpr Money kMoneyInf = std::numeric_limits<Money>::max() / 4;
constexpr int kReweightRounds = 3;

struct FlowArc {
  int to = 0;
  int cap = 0;        // residual capacity, 0 or 1
  Money cost = 0;     // original cost (negated on the paired reverse arc)
  Money rcost = 0;    // reweighted cost; reverse arcs carry the negation
};

// Paired-arc residual network: arcs 2k and 2k+1 are mutual reverses.
struct FlowNetwork {
  int num_drivers = 0;
  int num_passengers = 0;
  std::vector<FlowArc> arcs;
  std::vector<std::vector<int>> adj;   // node -> outgoing arc indices
  std::vector<EdgeId> arc_edge;        // arc index -> hyperedge id, -1 if none
  std::vector<DriverId> driver_ids;    // node 1+i  -> driver_ids[i]
  std::vector<PassengerId> rider_ids;  // node 1+num_drivers+j -> rider_ids[j]

  int source() const { return 0; }
  int sink() const { return num_drivers + num_passengers + 1; }
  int node_count() const { return num_drivers + num_passengers + 2; }

  void add_arc(int from, int to, Money cost, EdgeId edge) {
    arcs.push_back(FlowArc{to, 1, cost, 0});
    arcs.push_back(FlowArc{from, 0, -cost, 0});
    adj[from].push_back(static_cast<int>(arcs.size()) - 2);
    adj[to].push_back(static_cast<int>(arcs.size()) - 1);
    arc_edge.push_back(edge);
    arc_edge.push_back(edge);
  }
};

// Requires a single-passenger-per-edge hypergraph. Node order: source 0,
// drivers by ascending id, passengers by ascending id, sink last.
inline FlowNetwork build_flow_network(const Hypergraph& h) {
  if (!h.unit_capacity())
    throw std::invalid_argument("flow network requires single-passenger edges");
  FlowNetwork n;
  n.driver_ids = h.drivers();
  n.rider_ids = h.passengers();
  n.num_drivers = static_cast<int>(n.driver_ids.size());
  n.num_passengers = static_cast<int>(n.rider_ids.size());
  n.adj.assign(n.node_count(), {});

  std::unordered_map<DriverId, int> dnode;
  std::unordered_map<PassengerId, int> rnode;
  for (int i = 0; i < n.num_drivers; ++i) dnode.emplace(n.driver_ids[i], 1 + i);
  for (int j = 0; j < n.num_passengers; ++j) rnode.emplace(n.rider_ids[j], 1 + n.num_drivers + j);

  for (int i = 0; i < n.num_drivers; ++i) n.add_arc(n.source(), 1 + i, 0, -1);
  std::vector<const HyperEdge*> edges;
  for (const HyperEdge& e : h.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const HyperEdge* a, const HyperEdge* b) { return a->id < b->id; });
  for (const HyperEdge* e : edges)
    n.add_arc(dnode.at(e->driver), rnode.at(e->passengers[0]), -e->weight, e->id);
  for (int j = 0; j < n.num_passengers; ++j) n.add_arc(1 + n.num_drivers + j, n.sink(), 0, -1);
  return n;
}

// Makes every arc cost nonnegative: h(u) = dist(source, u) from a
// Bellman-Ford relaxation truncated to exactly kReweightRounds rounds, then
// rcost(u,v) = cost(u,v) + h(u) - h(v). Returns h (kMoneyInf marks nodes
// unreachable from the source; such nodes carry no arcs).
inline std::vector<Money> johnson_reweight(FlowNetwork& n, int* rounds_run = nullptr) {
  std::vector<Money> h(n.node_count(), kMoneyInf);
  h[n.source()] = 0;
  int rounds = 0;
  for (; rounds < kReweightRounds; ++rounds) {
    for (int u = 0; u < n.node_count(); ++u) {
      if (h[u] >= kMoneyInf) continue;
      for (int a : n.adj[u]) {
        const FlowArc& arc = n.arcs[a];
        if (arc.cap <= 0) continue;
        if (h[u] + arc.cost < h[arc.to]) h[arc.to] = h[u] + arc.cost;
      }
    }
  }
  if (rounds_run) *rounds_run = rounds;
  for (int u = 0; u < n.node_count(); ++u) {
    for (int a : n.adj[u]) {
      FlowArc& arc = n.arcs[a];
      if (arc.cap <= 0) continue;
      if (h[u] >= kMoneyInf || h[arc.to] >= kMoneyInf)
        throw std::logic_error("arc incident to unreachable node");
      arc.rcost = arc.cost + h[u] - h[arc.to];
      n.arcs[a ^ 1].rcost = -arc.rcost;
      assert(arc.rcost >= 0);
    }
  }
  return h;
}

// Successive-shortest-path state over a reweighted network. find_path()
// locates the cheapest residual source-sink path under the current node
// potentials and refreshes the potentials (permanent labels keep their
// distance; nodes not yet scanned when the sink settles use the sink label);
// augment() then applies it. The caller may inspect path_cost() between the
// two to implement stopping rules without disturbing the flow.
class RpcFlowSolver {
 public:
  explicit RpcFlowSolver(const Hypergraph& h, bool track_invariants = false)
      : net_(build_flow_network(h)), track_(track_invariants) {
    levels_ = johnson_reweight(net_, &bf_rounds_);
    pot_.assign(net_.node_count(), 0);
    if (track_) check_reduced_costs();
  }

  // Finds the next shortest augmenting path; false when none remains.
  bool find_path() {
    const int n = net_.node_count();
    dist_.assign(n, kMoneyInf);
    parent_arc_.assign(n, -1);
    scanned_.assign(n, 0);
    using Item = std::pair<Money, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist_[net_.source()] = 0;
    pq.emplace(0, net_.source());
    Money sink_dist = kMoneyInf;
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (scanned_[u] || d > dist_[u]) continue;
      scanned_[u] = 1;
      if (u == net_.sink()) {
        sink_dist = d;
        break;
      }
      for (int a : net_.adj[u]) {
        const FlowArc& arc = net_.arcs[a];
        if (arc.cap <= 0) continue;
        Money w = arc.rcost - pot_[u] + pot_[arc.to];
        assert(w >= 0);
        if (dist_[u] + w < dist_[arc.to]) {
          dist_[arc.to] = dist_[u] + w;
          parent_arc_[arc.to] = a;
          pq.emplace(dist_[arc.to], arc.to);
        }
      }
    }
    if (sink_dist >= kMoneyInf) return false;
    for (int u = 0; u < n; ++u) pot_[u] -= std::min(dist_[u], sink_dist);
    path_cost_ = 0;
    for (int v = net_.sink(); v != net_.source();) {
      int a = parent_arc_[v];
      path_cost_ += net_.arcs[a].cost;
      v = net_.arcs[a ^ 1].to;
    }
    have_path_ = true;
    if (track_) check_reduced_costs();
    return true;
  }

  // Original-cost delta of the path located by the last find_path().
  Money path_cost() const { return path_cost_; }

  void augment() {
    if (!have_path_) throw std::logic_error("augment without a located path");
    for (int v = net_.sink(); v != net_.source();) {
      int a = parent_arc_[v];
      net_.arcs[a].cap -= 1;
      net_.arcs[a ^ 1].cap += 1;
      v = net_.arcs[a ^ 1].to;
    }
    total_cost_ += path_cost_;
    cost_sequence_.push_back(total_cost_);
    have_path_ = false;
    if (track_) check_reduced_costs();
  }

  int flow_value() const { return static_cast<int>(cost_sequence_.size()); }
  Money flow_cost() const { return total_cost_; }
  const std::vector<Money>& cost_sequence() const { return cost_sequence_; }
  int reweight_rounds() const { return bf_rounds_; }
  const std::vector<Money>& reweight_levels() const { return levels_; }
  const FlowNetwork& network() const { return net_; }
  bool invariants_ok() const { return !violation_; }

  // Edges whose driver->passenger arc currently carries flow.
  Matching matching(const Hypergraph& h) const {
    std::vector<EdgeId> ids;
    for (std::size_t a = 0; a < net_.arcs.size(); a += 2) {
      if (net_.arc_edge[a] < 0) continue;
      if (net_.arcs[a].cap == 0) ids.push_back(net_.arc_edge[a]);
    }
    return make_matching(h, std::move(ids));
  }

 private:
  // Every residual arc must have nonnegative reduced cost.
  void check_reduced_costs() {
    for (int u = 0; u < net_.node_count(); ++u) {
      for (int a : net_.adj[u]) {
        const FlowArc& arc = net_.arcs[a];
        if (arc.cap <= 0) continue;
        if (arc.rcost - pot_[u] + pot_[arc.to] < 0) violation_ = true;
      }
    }
  }

  FlowNetwork net_;
  bool track_ = false;
  bool violation_ = false;
  int bf_rounds_ = 0;
  std::vector<Money> levels_;
  std::vector<Money> pot_;
  std::vector<Money> dist_;
  std::vector<int> parent_arc_;
  std::vector<char> scanned_;
  bool have_path_ = false;
  Money path_cost_ = 0;
  Money total_cost_ = 0;
  std::vector<Money> cost_sequence_;
};

struct ExactSolveTrace {
  std::vector<Money> flow_costs;  // cost after each committed augmentation
  int reweight_rounds = 0;
  bool invariants_ok = true;
};

// Largest matching whose weight meets the target; among those, maximum
// weight. target = nullopt drops the profit constraint entirely. Augmenting
// stops once the next flow would both cost more than the current one and
// overshoot the negated target; by convexity of the flow-cost sequence no
// later flow can be feasible then, and the current flow is the answer.
inline std::optional<Matching> solve_rpc1_exact(const Hypergraph& h,
                                                std::optional<Money> target,
                                                ExactSolveTrace* trace = nullptr,
                                                bool track_invariants = false) {
  RpcFlowSolver solver(h, track_invariants);
  Money weight = 0;  // negated flow cost
  while (solver.find_path()) {
    Money next_weight = weight - solver.path_cost();
    if (target && next_weight < weight && next_weight < *target) break;
    solver.augment();
    weight = next_weight;
  }
  if (trace) {
    trace->flow_costs = solver.cost_sequence();
    trace->reweight_rounds = solver.reweight_rounds();
    trace->invariants_ok = solver.invariants_ok();
  }
  if (target && weight < *target) return std::nullopt;
  return solver.matching(h);
}

}  // namespace rpc
