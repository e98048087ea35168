#include "rpc/generator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

namespace rpc {
namespace {

GenConfig small_config(const std::string& variant) {
  GenConfig c = default_config(variant);
  c.seed = 7;
  c.grid_width = 10;
  c.grid_height = 10;
  c.region_rows = 2;
  c.region_cols = 2;
  c.offpeak_passengers = 40;
  c.peak_passengers = 80;
  return c;
}

TEST(GridNetwork, LaysOutVerticesRegionsAndArcs) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  EXPECT_EQ(net.vertex_count(), 100);
  // 4-neighbor arcs both ways: 2 * 2 * 9 * 10.
  EXPECT_EQ(net.edges().size(), 360u);
  EXPECT_EQ(net.region(0), 0);
  EXPECT_EQ(net.region(9), 1);       // right half of the top row
  EXPECT_EQ(net.region(99), 3);      // bottom-right corner
  EXPECT_EQ(net.region(5), 1);       // x = 5 crosses the cell boundary
  EXPECT_EQ(net.shortest_path_dist(0, 99), 400 * 18);  // Manhattan distance
  EXPECT_DOUBLE_EQ(net.straight_line(0, 9), 3600.0);
}

TEST(GridNetwork, RejectsDegenerateGrids) {
  GenConfig c = small_config("rpc1");
  c.grid_width = 1;
  EXPECT_THROW(build_grid_network(c), std::invalid_argument);
}

TEST(GenerateInstance, IsDeterministicPerSeedAndInterval) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  Instance a = generate_instance(c, net, 5);
  Instance b = generate_instance(c, net, 5);
  EXPECT_EQ(instance_to_json(a), instance_to_json(b));
  Instance other = generate_instance(c, net, 6);
  EXPECT_NE(instance_to_json(a), instance_to_json(other));
  EXPECT_THROW(generate_instance(c, net, c.day.intervals), std::out_of_range);
}

TEST(GenerateInstance, DemandFollowsThePeakSchedule) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  EXPECT_EQ(generate_instance(c, net, 0).passengers.size(), 40u);  // 06:00
  EXPECT_EQ(generate_instance(c, net, 4).passengers.size(), 80u);  // 07:00
}

TEST(GenerateInstance, PassengerWindowsScaleWithTheDirectTrip) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  Instance inst = generate_instance(c, net, 4);  // peak
  const Seconds t_lo = c.day.interval_start(4);
  const Seconds t_hi = c.day.interval_end(4) - 1;
  for (const Passenger& p : inst.passengers) {
    EXPECT_NE(p.origin, p.destination);
    EXPECT_GE(p.earliest_departure, t_lo);
    EXPECT_LE(p.earliest_departure, t_hi);
    double direct = static_cast<double>(net.shortest_path_dist(p.origin, p.destination)) / 5.0;
    double arrive_ratio = static_cast<double>(p.latest_arrival - p.earliest_departure) / direct;
    EXPECT_GE(arrive_ratio, 1.95);
    EXPECT_LE(arrive_ratio, 3.05);
    double duration_ratio = static_cast<double>(p.max_duration) / direct;
    EXPECT_GE(duration_ratio, 1.45);
    EXPECT_LE(duration_ratio, 2.05);
    EXPECT_GE(p.surge_factor, 1.0);
    EXPECT_LT(p.surge_factor, 1.5);

    Money miles = std::llround(
        static_cast<double>(net.shortest_path_dist(p.origin, p.destination)) / kMetersPerMile);
    Money expected_tip =
        std::llround(0.3 * static_cast<double>(std::min<Money>(50 * miles, 500)));
    EXPECT_EQ(p.tip_expectation, expected_tip);
  }
}

TEST(GenerateInstance, OffpeakSurgeIsFlat) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  Instance inst = generate_instance(c, net, 0);
  for (const Passenger& p : inst.passengers) EXPECT_DOUBLE_EQ(p.surge_factor, 1.0);
}

TEST(GenerateInstance, DriverWindowsIncludeTheDetourAllowance) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  Instance inst = generate_instance(c, net, 4);
  ASSERT_FALSE(inst.drivers.empty());
  for (const Driver& d : inst.drivers) {
    EXPECT_NE(d.origin, d.destination);
    EXPECT_EQ(d.capacity, 1);  // single-rider variant
    EXPECT_NE(d.vehicle_type, VehicleType::kMediumSuv);
    double direct = static_cast<double>(net.shortest_path_dist(d.origin, d.destination)) / 5.0;
    EXPECT_GE(d.detour_limit, 2700);
    Seconds z = d.detour_limit;
    if (z > 2700) {
      double ratio = static_cast<double>(z) / direct;
      EXPECT_GE(ratio, 1.15);
      EXPECT_LE(ratio, 1.45);
    }
    EXPECT_EQ(d.max_duration, std::llround(direct) + z);
    double arrive_ratio = static_cast<double>(d.latest_arrival - d.earliest_departure) /
                          (direct + static_cast<double>(z));
    EXPECT_GE(arrive_ratio, 0.95);
    EXPECT_LE(arrive_ratio, 1.3);
  }
}

TEST(GenerateInstance, SingleRiderSupplyTracksRegionalDemand) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  Instance inst = generate_instance(c, net, 4);
  double n = static_cast<double>(inst.passengers.size());
  EXPECT_GE(inst.drivers.size(), std::floor(0.85 * n));
  EXPECT_LE(inst.drivers.size(), std::ceil(1.15 * n));
}

TEST(GenerateInstance, SharedRideSupplyUsesTheDivisorRule) {
  GenConfig c = small_config("rpcplus");
  RoadNetwork net = build_grid_network(c);
  Instance inst = generate_instance(c, net, 4);  // peak: ceil(demand / 4) per region

  std::map<int, int> demand;
  for (const Passenger& p : inst.passengers) ++demand[net.region(p.origin)];
  std::size_t expected = 0;
  for (auto [region, count] : demand)
    expected += static_cast<std::size_t>(std::ceil(count / 4.0));
  EXPECT_EQ(inst.drivers.size(), expected);

  for (const Driver& d : inst.drivers) {
    EXPECT_GE(d.capacity, 1);
    EXPECT_LE(d.capacity, d.vehicle_type == VehicleType::kMediumSuv ? 5 : 3);
  }

  Instance off = generate_instance(c, net, 0);
  std::map<int, int> off_demand;
  for (const Passenger& p : off.passengers) ++off_demand[net.region(p.origin)];
  std::size_t lo = 0, hi = 0;
  for (auto [region, count] : off_demand) {
    lo += static_cast<std::size_t>(std::ceil(count / 3.0));
    hi += static_cast<std::size_t>(std::ceil(count * 0.5));
  }
  EXPECT_GE(off.drivers.size(), lo);
  EXPECT_LE(off.drivers.size(), hi);
}

TEST(GenerateInstance, DriverIdsAreContiguousByRegion) {
  GenConfig c = small_config("rpc1");
  RoadNetwork net = build_grid_network(c);
  Instance inst = generate_instance(c, net, 0);
  for (std::size_t i = 0; i < inst.drivers.size(); ++i)
    EXPECT_EQ(inst.drivers[i].id, static_cast<DriverId>(i));
  std::set<PassengerId> rider_ids;
  for (const Passenger& p : inst.passengers) rider_ids.insert(p.id);
  EXPECT_EQ(rider_ids.size(), inst.passengers.size());
}

TEST(ConfigJson, OverridesSelectedFields) {
  nlohmann::json j = {
      {"variant", "rpcplus"},
      {"seed", 99},
      {"grid", {{"width", 12}, {"height", 8}, {"spacing_m", 250}}},
      {"demand", {{"offpeak_passengers", 30}, {"peak_passengers", 60}}},
      {"caps", {{"tau", 0.7}, {"max_total_per_driver", 50}}},
      {"surge", {{"peak_max", 2.0}}},
      {"cost_setting", "S4"},
  };
  GenConfig c = config_from_json(j);
  EXPECT_EQ(c.variant, "rpcplus");
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.grid_width, 12);
  EXPECT_EQ(c.grid_height, 8);
  EXPECT_EQ(c.spacing, 250);
  EXPECT_EQ(c.offpeak_passengers, 30);
  EXPECT_EQ(c.peak_passengers, 60);
  EXPECT_DOUBLE_EQ(c.caps.tau, 0.7);
  EXPECT_DOUBLE_EQ(c.resolved_tau(), 0.7);
  EXPECT_EQ(c.caps.max_total_per_driver, 50);
  EXPECT_DOUBLE_EQ(c.surge_peak_max, 2.0);
  EXPECT_EQ(c.cost_setting, "S4");
  // Untouched fields keep their defaults.
  EXPECT_EQ(c.region_rows, 5);
  EXPECT_EQ(c.day.intervals, 72);
  EXPECT_DOUBLE_EQ(c.rpc1_ratio_min, 0.9);
}

TEST(ConfigJson, TauDefaultsFollowTheVariant) {
  EXPECT_DOUBLE_EQ(default_config("rpc1").resolved_tau(), 0.6);
  EXPECT_DOUBLE_EQ(default_config("rpcplus").resolved_tau(), 0.8);
  EXPECT_DOUBLE_EQ(config_from_json(nlohmann::json::object()).resolved_tau(), 0.6);
}

}  // namespace
}  // namespace rpc
