#pragma once

// Synthetic-city instance generator: a square grid road network with
// Euclidean (= spacing) edge lengths partitioned into rectangular regions.
// Per interval it samples passengers region-by-region and derives driver
// counts from the variant's supply rule, with trip windows drawn from the
// standard parameter ranges. All draws come from the interval's generation
// substream in a fixed documented order, so instances are reproducible from
// (config, interval) alone.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rpc/instance.hpp"
#include "rpc/matchgen.hpp"
#include "rpc/rng.hpp"

namespace rpc {

struct GenConfig {
  std::uint64_t seed = 1;
  std::string variant = "rpc1";  // rpc1 | rpcplus

  int grid_width = 25;
  int grid_height = 25;
  Meters spacing = 400;
  int region_rows = 5;
  int region_cols = 5;
  DayGrid day;

  int offpeak_passengers = 250;
  int peak_passengers = 1000;

  double rpc1_ratio_min = 0.9;  // drivers per passenger, sampled per region
  double rpc1_ratio_max = 1.1;
  double rpcplus_peak_divisor = 4.0;       // drivers = ceil(passengers / divisor)
  double rpcplus_offpeak_min = 1.0 / 3.0;  // drivers = ceil(passengers * u)
  double rpcplus_offpeak_max = 0.5;

  double peak_sedan_share = 0.95;
  double offpeak_sedan_share = 0.90;
  int sedan_capacity_min = 1;
  int sedan_capacity_max = 3;
  int suv_capacity_min = 1;
  int suv_capacity_max = 5;

  double detour_a_min = 1.2;  // z = max(a * direct_time, detour_floor)
  double detour_a_max = 1.4;
  Seconds detour_floor = 2700;
  double driver_arrive_a_min = 1.0;  // latest = depart + a * (direct_time + z)
  double driver_arrive_a_max = 1.25;
  double rider_arrive_a_min = 2.0;  // latest = depart + a * direct_time
  double rider_arrive_a_max = 3.0;
  double rider_duration_a_min = 1.5;  // max_duration = a * direct_time
  double rider_duration_a_max = 2.0;

  SpeedTable speeds;
  double surge_offpeak = 1.0;
  double surge_peak_min = 1.0;
  double surge_peak_max = 1.5;
  double tip_probability = 0.3;
  Money tip_cents_per_mile = 50;
  Money tip_cap_cents = 500;

  MatchCaps caps;  // caps.tau < 0 means "variant default" (0.6 rpc1, 0.8 rpcplus)
  FeeSchedule fees;
  std::string cost_setting = "base";

  double resolved_tau() const {
    if (caps.tau >= 0) return caps.tau;
    return variant == "rpc1" ? 0.6 : 0.8;
  }
};

inline GenConfig default_config(const std::string& variant) {
  GenConfig c;
  c.variant = variant;
  c.caps.tau = -1;
  return c;
}

inline GenConfig config_from_json(const nlohmann::json& j) {
  GenConfig c = default_config(j.value("variant", std::string("rpc1")));
  c.seed = j.value("seed", c.seed);
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    c.grid_width = g.value("width", c.grid_width);
    c.grid_height = g.value("height", c.grid_height);
    c.spacing = g.value("spacing_m", c.spacing);
  }
  if (j.contains("regions")) {
    c.region_rows = j["regions"].value("rows", c.region_rows);
    c.region_cols = j["regions"].value("cols", c.region_cols);
  }
  if (j.contains("day")) {
    c.day.start_hour = j["day"].value("start_hour", c.day.start_hour);
    c.day.interval_minutes = j["day"].value("interval_minutes", c.day.interval_minutes);
    c.day.intervals = j["day"].value("intervals", c.day.intervals);
  }
  if (j.contains("demand")) {
    c.offpeak_passengers = j["demand"].value("offpeak_passengers", c.offpeak_passengers);
    c.peak_passengers = j["demand"].value("peak_passengers", c.peak_passengers);
  }
  if (j.contains("supply")) {
    const auto& s = j["supply"];
    c.rpc1_ratio_min = s.value("rpc1_ratio_min", c.rpc1_ratio_min);
    c.rpc1_ratio_max = s.value("rpc1_ratio_max", c.rpc1_ratio_max);
    c.rpcplus_peak_divisor = s.value("rpcplus_peak_divisor", c.rpcplus_peak_divisor);
    c.rpcplus_offpeak_min = s.value("rpcplus_offpeak_min", c.rpcplus_offpeak_min);
    c.rpcplus_offpeak_max = s.value("rpcplus_offpeak_max", c.rpcplus_offpeak_max);
  }
  if (j.contains("vehicles")) {
    const auto& v = j["vehicles"];
    c.peak_sedan_share = v.value("peak_sedan_share", c.peak_sedan_share);
    c.offpeak_sedan_share = v.value("offpeak_sedan_share", c.offpeak_sedan_share);
    c.sedan_capacity_min = v.value("sedan_capacity_min", c.sedan_capacity_min);
    c.sedan_capacity_max = v.value("sedan_capacity_max", c.sedan_capacity_max);
    c.suv_capacity_min = v.value("suv_capacity_min", c.suv_capacity_min);
    c.suv_capacity_max = v.value("suv_capacity_max", c.suv_capacity_max);
  }
  if (j.contains("windows")) {
    const auto& w = j["windows"];
    c.detour_a_min = w.value("detour_a_min", c.detour_a_min);
    c.detour_a_max = w.value("detour_a_max", c.detour_a_max);
    c.detour_floor = w.value("detour_floor_s", c.detour_floor);
    c.driver_arrive_a_min = w.value("driver_arrive_a_min", c.driver_arrive_a_min);
    c.driver_arrive_a_max = w.value("driver_arrive_a_max", c.driver_arrive_a_max);
    c.rider_arrive_a_min = w.value("rider_arrive_a_min", c.rider_arrive_a_min);
    c.rider_arrive_a_max = w.value("rider_arrive_a_max", c.rider_arrive_a_max);
    c.rider_duration_a_min = w.value("rider_duration_a_min", c.rider_duration_a_min);
    c.rider_duration_a_max = w.value("rider_duration_a_max", c.rider_duration_a_max);
  }
  if (j.contains("speed")) {
    const auto& s = j["speed"];
    c.speeds.offpeak_mps = s.value("offpeak_mps", c.speeds.offpeak_mps);
    c.speeds.peak_mps = s.value("peak_mps", c.speeds.peak_mps);
    if (s.contains("offpeak_table"))
      c.speeds.offpeak_table = s["offpeak_table"].get<std::vector<std::vector<double>>>();
    if (s.contains("peak_table"))
      c.speeds.peak_table = s["peak_table"].get<std::vector<std::vector<double>>>();
  }
  if (j.contains("surge")) {
    const auto& s = j["surge"];
    c.surge_offpeak = s.value("offpeak", c.surge_offpeak);
    c.surge_peak_min = s.value("peak_min", c.surge_peak_min);
    c.surge_peak_max = s.value("peak_max", c.surge_peak_max);
  }
  if (j.contains("tip")) {
    const auto& t = j["tip"];
    c.tip_probability = t.value("probability", c.tip_probability);
    c.tip_cents_per_mile = t.value("cents_per_mile", c.tip_cents_per_mile);
    c.tip_cap_cents = t.value("cap_cents", c.tip_cap_cents);
  }
  if (j.contains("caps")) {
    const auto& k = j["caps"];
    c.caps.max_base_per_driver = k.value("max_base_per_driver", c.caps.max_base_per_driver);
    c.caps.max_total_per_driver = k.value("max_total_per_driver", c.caps.max_total_per_driver);
    c.caps.max_base_per_passenger =
        k.value("max_base_per_passenger", c.caps.max_base_per_passenger);
    c.caps.tau = k.value("tau", c.caps.tau);
  }
  if (j.contains("fees")) {
    const auto& f = j["fees"];
    c.fees.base = f.value("base_cents", c.fees.base);
    c.fees.per_minute = f.value("per_minute_cents", c.fees.per_minute);
    c.fees.per_mile = f.value("per_mile_cents", c.fees.per_mile);
  }
  c.cost_setting = j.value("cost_setting", c.cost_setting);
  return c;
}

// Square grid with 4-neighbor arcs in both directions; the vertex at grid
// cell (gx, gy) has id gy*width+gx and lies in the rectangular region block
// floor(gy/cell_h)*region_cols + floor(gx/cell_w).
inline RoadNetwork build_grid_network(const GenConfig& c) {
  if (c.grid_width < 2 || c.grid_height < 2) throw std::invalid_argument("grid too small");
  const int cell_w = (c.grid_width + c.region_cols - 1) / c.region_cols;
  const int cell_h = (c.grid_height + c.region_rows - 1) / c.region_rows;
  std::vector<NetVertex> vertices;
  vertices.reserve(static_cast<std::size_t>(c.grid_width) * c.grid_height);
  for (int gy = 0; gy < c.grid_height; ++gy)
    for (int gx = 0; gx < c.grid_width; ++gx)
      vertices.push_back(NetVertex{static_cast<VertexId>(gy * c.grid_width + gx),
                                   c.spacing * gx, c.spacing * gy,
                                   (gy / cell_h) * c.region_cols + gx / cell_w});
  std::vector<NetEdge> edges;
  auto vid = [&](int gx, int gy) { return static_cast<VertexId>(gy * c.grid_width + gx); };
  for (int gy = 0; gy < c.grid_height; ++gy)
    for (int gx = 0; gx < c.grid_width; ++gx) {
      if (gx + 1 < c.grid_width) {
        edges.push_back(NetEdge{vid(gx, gy), vid(gx + 1, gy), c.spacing});
        edges.push_back(NetEdge{vid(gx + 1, gy), vid(gx, gy), c.spacing});
      }
      if (gy + 1 < c.grid_height) {
        edges.push_back(NetEdge{vid(gx, gy), vid(gx, gy + 1), c.spacing});
        edges.push_back(NetEdge{vid(gx, gy + 1), vid(gx, gy), c.spacing});
      }
    }
  return RoadNetwork(std::move(vertices), std::move(edges));
}

// Samples one interval's drivers and passengers. Draw order (generation
// substream): per passenger origin region, origin vertex, destination region
// and vertex (redrawn while it equals the origin), departure, arrival slack,
// duration slack, surge (peak only); then per region ascending the driver
// count rule, and per driver origin vertex, destination (region of a
// uniformly picked same-region passenger), departure, vehicle draws, detour
// slack, arrival slack.
inline Instance generate_instance(const GenConfig& c, const RoadNetwork& network, int interval) {
  if (interval < 0 || interval >= c.day.intervals) throw std::out_of_range("interval");
  Instance inst;
  inst.seed = c.seed;
  inst.interval = interval;
  inst.variant = c.variant;
  inst.day = c.day;
  inst.network = network;
  inst.speeds = c.speeds;

  const bool peak = c.day.is_peak(interval);
  const Seconds t_lo = c.day.interval_start(interval);
  const Seconds t_hi = c.day.interval_end(interval) - 1;
  std::mt19937_64 rng = substream(c.seed, interval, StreamPhase::kGeneration);

  int region_count = 0;
  for (const NetVertex& v : network.vertices()) region_count = std::max(region_count, v.region + 1);
  std::vector<std::vector<VertexId>> region_vertices(region_count);
  for (const NetVertex& v : network.vertices()) region_vertices[v.region].push_back(v.id);
  for (const auto& rv : region_vertices)
    if (rv.empty()) throw std::invalid_argument("region without vertices");

  auto pick_vertex = [&](int region) {
    const auto& pool = region_vertices[region];
    return pool[uniform_int(rng, 0, static_cast<std::int64_t>(pool.size()) - 1)];
  };
  auto direct_seconds = [&](VertexId a, VertexId b) {
    Meters dist = network.shortest_path_dist(a, b);
    if (dist >= kUnreachable) throw std::logic_error("disconnected network");
    return static_cast<double>(dist) /
           c.speeds.speed(peak, network.region(a), network.region(b));
  };

  const int n = peak ? c.peak_passengers : c.offpeak_passengers;
  std::vector<std::vector<int>> riders_by_region(region_count);
  for (int i = 0; i < n; ++i) {
    Passenger p;
    p.id = i;
    int oreg = static_cast<int>(uniform_int(rng, 0, region_count - 1));
    p.origin = pick_vertex(oreg);
    int dreg = static_cast<int>(uniform_int(rng, 0, region_count - 1));
    p.destination = pick_vertex(dreg);
    while (p.destination == p.origin) {
      dreg = static_cast<int>(uniform_int(rng, 0, region_count - 1));
      p.destination = pick_vertex(dreg);
    }
    p.earliest_departure = uniform_int(rng, t_lo, t_hi);
    double direct = direct_seconds(p.origin, p.destination);
    p.latest_arrival =
        p.earliest_departure +
        std::llround(uniform_double(rng, c.rider_arrive_a_min, c.rider_arrive_a_max) * direct);
    p.max_duration =
        std::llround(uniform_double(rng, c.rider_duration_a_min, c.rider_duration_a_max) * direct);
    p.surge_factor = peak ? uniform_double(rng, c.surge_peak_min, c.surge_peak_max)
                          : c.surge_offpeak;
    Money miles = std::llround(static_cast<double>(network.shortest_path_dist(p.origin, p.destination)) /
                               kMetersPerMile);
    p.tip_expectation = std::llround(
        c.tip_probability *
        static_cast<double>(std::min(c.tip_cents_per_mile * miles, c.tip_cap_cents)));
    riders_by_region[oreg].push_back(i);
    inst.passengers.push_back(p);
  }

  DriverId next_driver = 0;
  for (int region = 0; region < region_count; ++region) {
    const auto& local = riders_by_region[region];
    const int demand = static_cast<int>(local.size());
    if (demand == 0) continue;
    int count = 0;
    if (c.variant == "rpc1") {
      count = static_cast<int>(
          std::llround(uniform_double(rng, c.rpc1_ratio_min, c.rpc1_ratio_max) * demand));
    } else if (peak) {
      count = static_cast<int>(std::ceil(demand / c.rpcplus_peak_divisor));
    } else {
      count = static_cast<int>(std::ceil(
          uniform_double(rng, c.rpcplus_offpeak_min, c.rpcplus_offpeak_max) * demand));
    }
    for (int i = 0; i < count; ++i) {
      Driver d;
      d.id = next_driver++;
      d.origin = pick_vertex(region);
      const Passenger& mirror =
          inst.passengers[local[uniform_int(rng, 0, demand - 1)]];
      int dreg = network.region(mirror.destination);
      d.destination = pick_vertex(dreg);
      while (d.destination == d.origin) d.destination = pick_vertex(dreg);
      d.earliest_departure = uniform_int(rng, t_lo, t_hi);
      if (c.variant == "rpc1") {
        d.vehicle_type =
            bernoulli(rng, 0.5) ? VehicleType::kSmallSedan : VehicleType::kMediumSedan;
        d.capacity = 1;
      } else {
        double sedan_share = peak ? c.peak_sedan_share : c.offpeak_sedan_share;
        if (bernoulli(rng, sedan_share)) {
          d.vehicle_type =
              bernoulli(rng, 0.5) ? VehicleType::kSmallSedan : VehicleType::kMediumSedan;
          d.capacity =
              static_cast<int>(uniform_int(rng, c.sedan_capacity_min, c.sedan_capacity_max));
        } else {
          d.vehicle_type = VehicleType::kMediumSuv;
          d.capacity = static_cast<int>(uniform_int(rng, c.suv_capacity_min, c.suv_capacity_max));
        }
      }
      double direct = direct_seconds(d.origin, d.destination);
      Seconds z = std::max<Seconds>(
          std::llround(uniform_double(rng, c.detour_a_min, c.detour_a_max) * direct),
          c.detour_floor);
      d.detour_limit = z;
      d.max_duration = std::llround(direct) + z;
      d.latest_arrival =
          d.earliest_departure +
          std::llround(uniform_double(rng, c.driver_arrive_a_min, c.driver_arrive_a_max) *
                       (direct + static_cast<double>(z)));
      inst.drivers.push_back(d);
    }
  }
  return inst;
}

}  // namespace rpc
