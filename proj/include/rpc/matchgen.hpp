#pragma once

// Feasible-match generation. A cheap straight-line detour estimate first
// prunes driver/passenger pairs; surviving groups are checked by an
// exhaustive search over pickup/dropoff interleavings that respects every
// time budget (earliest departures with waiting allowed, latest arrivals,
// ride-duration caps and the driver detour cap — waiting counts toward all
// of them). Among feasible interleavings the shortest wins, ties going to
// the lexicographically smallest visiting order. Enumeration proceeds in two
// capped phases: single-passenger base matches, then extension of feasible
// groups by one base passenger at a time. Every emitted match is priced on
// the spot, drawing its per-passenger commission from the supplied stream in
// emission order.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rpc/pricing.hpp"
#include "rpc/road_network.hpp"
#include "rpc/types.hpp"

namespace rpc {

struct MatchCaps {
  int max_base_per_driver = 100;
  int max_total_per_driver = 500;
  int max_base_per_passenger = 20;
  double tau = 0.6;  // detour-estimate discount of the prefilter
};

// Geometric prefilter: the driver's maximum travel distance (duration budget
// at the speed of their own trip) must cover a tau-discounted straight-line
// tour origin -> pickup -> dropoff -> destination.
inline bool candidate_pair(const Driver& d, const Passenger& r, const RoadNetwork& net,
                           const SpeedTable& speeds, bool peak, double tau) {
  double spd = speeds.speed(peak, net.region(d.origin), net.region(d.destination));
  double max_travel = static_cast<double>(d.max_duration) * spd;
  double estimate = net.straight_line(d.origin, r.origin) +
                    net.straight_line(r.origin, r.destination) +
                    net.straight_line(r.destination, d.destination);
  return max_travel >= tau * estimate;
}

// Resolved stop sequence of a feasible interleaving, with the timeline data
// pricing needs. Stop 0 is the driver origin, the last stop the driver
// destination; codes describe the interleaved pickups (2*i) and dropoffs
// (2*i+1) of the riders in ascending-id order.
struct StopTimeline {
  std::vector<VertexId> stops;
  std::vector<int> codes;
  Meters distance = 0;
  std::vector<double> leg_seconds;     // driving time per leg (waits excluded)
  std::vector<int> pickup_stop;        // per rider: stop index
  std::vector<int> dropoff_stop;
  std::vector<double> board_times;     // per rider: departure time from the pickup
  std::vector<double> dropoff_times;   // per rider: arrival time at the dropoff
  double driver_depart = 0;
  double driver_arrive = 0;
};

namespace detail {

struct SfpQuery {
  const Driver* driver;
  const std::vector<const Passenger*>* riders;  // ascending id
  const RoadNetwork* net;
  const SpeedTable* speeds;
  bool peak;
  double direct_seconds;  // driver origin -> destination
};

inline double leg_seconds(const SfpQuery& q, VertexId from, VertexId to, Meters dist) {
  return static_cast<double>(dist) /
         q.speeds->speed(q.peak, q.net->region(from), q.net->region(to));
}

// Replays one interleaving and verifies every budget; nullopt on violation.
inline std::optional<StopTimeline> simulate_order(const SfpQuery& q,
                                                  const std::vector<int>& codes) {
  const Driver& d = *q.driver;
  const auto& riders = *q.riders;
  StopTimeline tl;
  tl.codes = codes;
  tl.stops.push_back(d.origin);
  tl.pickup_stop.assign(riders.size(), -1);
  tl.dropoff_stop.assign(riders.size(), -1);
  tl.board_times.assign(riders.size(), 0);
  tl.dropoff_times.assign(riders.size(), 0);
  tl.driver_depart = static_cast<double>(d.earliest_departure);

  double t = tl.driver_depart;
  VertexId loc = d.origin;
  auto advance = [&](VertexId v) -> bool {
    Meters leg = q.net->shortest_path_dist(loc, v);
    if (leg >= kUnreachable) return false;
    double secs = leg_seconds(q, loc, v, leg);
    tl.leg_seconds.push_back(secs);
    tl.distance += leg;
    t += secs;
    loc = v;
    tl.stops.push_back(v);
    return true;
  };

  for (int code : codes) {
    int i = code / 2;
    const Passenger& r = *riders[i];
    if (code % 2 == 0) {
      if (!advance(r.origin)) return std::nullopt;
      t = std::max(t, static_cast<double>(r.earliest_departure));  // wait at the pickup
      tl.pickup_stop[i] = static_cast<int>(tl.stops.size()) - 1;
      tl.board_times[i] = t;
    } else {
      if (!advance(r.destination)) return std::nullopt;
      tl.dropoff_stop[i] = static_cast<int>(tl.stops.size()) - 1;
      tl.dropoff_times[i] = t;
      if (t > static_cast<double>(r.latest_arrival)) return std::nullopt;
      if (t - tl.board_times[i] > static_cast<double>(r.max_duration)) return std::nullopt;
    }
  }
  if (!advance(d.destination)) return std::nullopt;
  tl.driver_arrive = t;
  double elapsed = t - tl.driver_depart;
  if (t > static_cast<double>(d.latest_arrival)) return std::nullopt;
  if (elapsed > static_cast<double>(d.max_duration)) return std::nullopt;
  if (elapsed > q.direct_seconds + static_cast<double>(d.detour_limit)) return std::nullopt;
  return tl;
}

}  // namespace detail

// Minimum-distance feasible interleaving for one driver and a rider group
// (passengers ascending by id, at most the driver's capacity). Exhaustive
// over all (2k)!/2^k pickup/dropoff orders, pruned only where no completion
// can be feasible or shorter than the incumbent; visiting orders are
// explored lexicographically so distance ties keep the smallest order.
inline std::optional<StopTimeline> shortest_feasible_path(const Driver& d,
                                                          const std::vector<const Passenger*>& riders,
                                                          const RoadNetwork& net,
                                                          const SpeedTable& speeds, bool peak) {
  if (riders.empty()) throw std::invalid_argument("empty rider group");
  for (std::size_t i = 0; i + 1 < riders.size(); ++i)
    if (riders[i]->id >= riders[i + 1]->id)
      throw std::invalid_argument("riders must be sorted by ascending id");
  if (static_cast<int>(riders.size()) > d.capacity) return std::nullopt;

  detail::SfpQuery q{&d, &riders, &net, &speeds, peak, 0.0};
  Meters direct = net.shortest_path_dist(d.origin, d.destination);
  if (direct >= kUnreachable) return std::nullopt;
  q.direct_seconds = detail::leg_seconds(q, d.origin, d.destination, direct);

  const int k = static_cast<int>(riders.size());
  std::vector<int> codes;
  codes.reserve(2 * k);
  bool have_best = false;
  Meters best_dist = 0;
  std::vector<int> best_codes;

  // DFS state mirrors simulate_order but prunes on monotone violations.
  struct Frame {
    double t;
    VertexId loc;
    Meters dist;
  };
  std::vector<double> board(riders.size(), 0);
  unsigned picked = 0, dropped = 0;

  auto violates = [&](double t) {
    if (t > static_cast<double>(d.latest_arrival)) return true;
    double elapsed = t - static_cast<double>(d.earliest_departure);
    if (elapsed > static_cast<double>(d.max_duration)) return true;
    if (elapsed > q.direct_seconds + static_cast<double>(d.detour_limit)) return true;
    for (int i = 0; i < k; ++i) {
      bool done = dropped & (1u << i);
      if (!done && t > static_cast<double>(riders[i]->latest_arrival)) return true;
      bool aboard = (picked & (1u << i)) && !done;
      if (aboard && t - board[i] > static_cast<double>(riders[i]->max_duration)) return true;
    }
    return false;
  };

  auto rec = [&](auto&& self, double t, VertexId loc, Meters dist) -> void {
    if (static_cast<int>(codes.size()) == 2 * k) {
      Meters leg = net.shortest_path_dist(loc, d.destination);
      if (leg >= kUnreachable) return;
      Meters total = dist + leg;
      if (have_best && total >= best_dist) return;
      double tEnd = t + detail::leg_seconds(q, loc, d.destination, leg);
      double elapsed = tEnd - static_cast<double>(d.earliest_departure);
      if (tEnd > static_cast<double>(d.latest_arrival)) return;
      if (elapsed > static_cast<double>(d.max_duration)) return;
      if (elapsed > q.direct_seconds + static_cast<double>(d.detour_limit)) return;
      have_best = true;
      best_dist = total;
      best_codes = codes;
      return;
    }
    for (int code = 0; code < 2 * k; ++code) {
      int i = code / 2;
      bool pickup = code % 2 == 0;
      if (pickup && (picked & (1u << i))) continue;
      if (!pickup && (!(picked & (1u << i)) || (dropped & (1u << i)))) continue;
      const Passenger& r = *riders[i];
      VertexId v = pickup ? r.origin : r.destination;
      Meters leg = net.shortest_path_dist(loc, v);
      if (leg >= kUnreachable) continue;
      Meters ndist = dist + leg;
      if (have_best && ndist >= best_dist) continue;
      double nt = t + detail::leg_seconds(q, loc, v, leg);
      double saved_board = 0;
      if (pickup) {
        nt = std::max(nt, static_cast<double>(r.earliest_departure));
        picked |= 1u << i;
        saved_board = board[i];
        board[i] = nt;
      } else {
        if (nt > static_cast<double>(r.latest_arrival)) continue;
        if (nt - board[i] > static_cast<double>(r.max_duration)) continue;
        dropped |= 1u << i;
      }
      if (!violates(nt)) {
        codes.push_back(code);
        self(self, nt, v, ndist);
        codes.pop_back();
      }
      if (pickup) {
        picked &= ~(1u << i);
        board[i] = saved_board;
      } else {
        dropped &= ~(1u << i);
      }
    }
  };
  double t0 = static_cast<double>(d.earliest_departure);
  if (!violates(t0)) rec(rec, t0, d.origin, 0);

  if (!have_best) return std::nullopt;
  auto tl = detail::simulate_order(q, best_codes);
  if (!tl) throw std::logic_error("winning interleaving failed replay");
  return tl;
}

struct MatchGenEnv {
  const RoadNetwork* net = nullptr;
  const SpeedTable* speeds = nullptr;
  bool peak = false;
  MatchCaps caps;
  FeeSchedule fees;
  CostSetting setting;
};

// Prices one match from its timeline: per-leg occupancy splits the metered
// charges, each rider's discount follows the distinct co-riders met on their
// subpath, and the commission is drawn per rider (ascending id) from rng.
inline FeasibleMatch price_match(const Driver& d, const std::vector<const Passenger*>& riders,
                                 const StopTimeline& tl, const MatchGenEnv& env,
                                 std::mt19937_64& rng) {
  RideContext ctx;
  const int legs = static_cast<int>(tl.stops.size()) - 1;
  ctx.legs.resize(legs);
  for (int i = 0; i < legs; ++i) {
    Meters leg = env.net->shortest_path_dist(tl.stops[i], tl.stops[i + 1]);
    ctx.legs[i].miles = static_cast<double>(leg) / kMetersPerMile;
    ctx.legs[i].minutes = tl.leg_seconds[i] / kSecondsPerMinute;
    int occ = 0;
    for (std::size_t j = 0; j < riders.size(); ++j)
      if (tl.pickup_stop[j] <= i && i < tl.dropoff_stop[j]) ++occ;
    ctx.legs[i].occupancy = occ;
  }
  for (std::size_t j = 0; j < riders.size(); ++j) {
    RiderFare fare;
    fare.first_leg = tl.pickup_stop[j];
    fare.last_leg = tl.dropoff_stop[j] - 1;
    int co = 0;
    for (std::size_t o = 0; o < riders.size(); ++o) {
      if (o == j) continue;
      if (tl.pickup_stop[j] <= tl.dropoff_stop[o] - 1 && tl.pickup_stop[o] <= tl.dropoff_stop[j] - 1)
        ++co;  // subpaths share at least one leg
    }
    fare.discount = discount_rate(co);
    fare.take_rate = take_rate(fare.discount, rng);
    fare.surge = riders[j]->surge_factor;
    fare.tip = riders[j]->tip_expectation;
    ctx.riders.push_back(fare);
  }
  double total_miles = static_cast<double>(tl.distance) / kMetersPerMile;
  FeasibleMatch m;
  m.driver = d.id;
  for (const Passenger* r : riders) m.passengers.push_back(r->id);
  m.path = tl.stops;
  m.revenue = match_revenue(ctx, env.fees);
  m.cost = match_cost(total_miles, d.vehicle_type, env.setting, env.peak);
  m.profit = m.revenue - m.cost;
  return m;
}

// Two-phase enumeration. Phase 1 collects per driver (ascending id) the
// feasible single-passenger matches in ascending passenger id, stopping at
// max_base_per_driver; a reconciliation pass then keeps, for each passenger,
// the base matches with the smallest driver ids up to max_base_per_passenger
// (order-independent, so a parallel phase 1 would emit the same set). Phase 2
// grows surviving groups one kept base passenger at a time — a group is
// attempted when some subgroup one smaller was feasible — until
// max_total_per_driver matches exist for the driver.
inline std::vector<FeasibleMatch> enumerate_matches(const std::vector<Driver>& drivers,
                                                    const std::vector<Passenger>& passengers,
                                                    const MatchGenEnv& env,
                                                    std::mt19937_64& pricing_rng) {
  std::vector<const Driver*> ds;
  for (const Driver& d : drivers) ds.push_back(&d);
  std::sort(ds.begin(), ds.end(), [](auto* a, auto* b) { return a->id < b->id; });
  std::vector<const Passenger*> rs;
  for (const Passenger& r : passengers) rs.push_back(&r);
  std::sort(rs.begin(), rs.end(), [](auto* a, auto* b) { return a->id < b->id; });

  // Phase 1: feasible base candidates, capped per driver.
  struct BaseMatch {
    const Passenger* rider;
    StopTimeline timeline;
  };
  std::vector<std::vector<BaseMatch>> base(ds.size());
  for (std::size_t di = 0; di < ds.size(); ++di) {
    const Driver& d = *ds[di];
    for (const Passenger* r : rs) {
      if (static_cast<int>(base[di].size()) >= env.caps.max_base_per_driver) break;
      if (!candidate_pair(d, *r, *env.net, *env.speeds, env.peak, env.caps.tau)) continue;
      std::vector<const Passenger*> group{r};
      auto tl = shortest_feasible_path(d, group, *env.net, *env.speeds, env.peak);
      if (tl) base[di].push_back(BaseMatch{r, std::move(*tl)});
    }
  }

  // Reconciliation: per-passenger cap keeps the smallest driver ids.
  std::unordered_map<PassengerId, int> rider_load;
  for (std::size_t di = 0; di < ds.size(); ++di) {
    std::vector<BaseMatch> kept;
    for (BaseMatch& bm : base[di]) {
      int& load = rider_load[bm.rider->id];
      if (load >= env.caps.max_base_per_passenger) continue;
      ++load;
      kept.push_back(std::move(bm));
    }
    base[di] = std::move(kept);
  }

  // Emission (base then breadth-first extensions) with pricing.
  std::vector<FeasibleMatch> out;
  for (std::size_t di = 0; di < ds.size(); ++di) {
    const Driver& d = *ds[di];
    int total = 0;
    for (const BaseMatch& bm : base[di]) {
      std::vector<const Passenger*> group{bm.rider};
      out.push_back(price_match(d, group, bm.timeline, env, pricing_rng));
      ++total;
    }
    if (d.capacity < 2 || base[di].empty()) continue;

    std::vector<std::vector<const Passenger*>> frontier;
    for (const BaseMatch& bm : base[di]) frontier.push_back({bm.rider});
    std::set<std::vector<PassengerId>> attempted;
    while (!frontier.empty() && total < env.caps.max_total_per_driver) {
      std::vector<std::vector<const Passenger*>> next;
      for (const auto& group : frontier) {
        if (static_cast<int>(group.size()) + 1 > d.capacity) break;
        for (const BaseMatch& bm : base[di]) {
          if (total >= env.caps.max_total_per_driver) break;
          const Passenger* add = bm.rider;
          std::vector<const Passenger*> bigger = group;
          auto pos = std::lower_bound(bigger.begin(), bigger.end(), add,
                                      [](auto* a, auto* b) { return a->id < b->id; });
          if (pos != bigger.end() && (*pos)->id == add->id) continue;
          bigger.insert(pos, add);
          std::vector<PassengerId> key;
          for (auto* p : bigger) key.push_back(p->id);
          if (!attempted.insert(key).second) continue;
          auto tl = shortest_feasible_path(d, bigger, *env.net, *env.speeds, env.peak);
          if (!tl) continue;
          out.push_back(price_match(d, bigger, *tl, env, pricing_rng));
          ++total;
          next.push_back(std::move(bigger));
        }
        if (total >= env.caps.max_total_per_driver) break;
      }
      frontier = std::move(next);
    }
  }
  return out;
}

}  // namespace rpc
