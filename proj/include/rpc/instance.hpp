#pragma once

// JSON interchange for problem instances. Units on the wire: money in
// integer cents, times in integer seconds, distances in integer meters.
// The matches array is optional; when present each entry carries its stop
// sequence and priced revenue/cost/profit.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rpc/road_network.hpp"
#include "rpc/types.hpp"

namespace rpc {

struct Instance {
  std::uint64_t seed = 0;
  int interval = 0;
  std::string variant = "rpc1";
  DayGrid day;
  RoadNetwork network;
  SpeedTable speeds;
  std::vector<Driver> drivers;
  std::vector<Passenger> passengers;
  std::vector<FeasibleMatch> matches;
  bool has_matches = false;

  bool is_peak() const { return day.is_peak(interval); }
};

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["seed"] = inst.seed;
  j["interval"] = inst.interval;
  j["variant"] = inst.variant;
  j["day"] = {{"start_hour", inst.day.start_hour},
              {"interval_minutes", inst.day.interval_minutes},
              {"intervals", inst.day.intervals}};

  nlohmann::json net;
  net["vertices"] = nlohmann::json::array();
  for (const NetVertex& v : inst.network.vertices())
    net["vertices"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}, {"region", v.region}});
  net["edges"] = nlohmann::json::array();
  for (const NetEdge& e : inst.network.edges())
    net["edges"].push_back({{"from", e.from}, {"to", e.to}, {"length", e.length}});
  nlohmann::json speed{{"offpeak_mps", inst.speeds.offpeak_mps}, {"peak_mps", inst.speeds.peak_mps}};
  if (!inst.speeds.offpeak_table.empty()) speed["offpeak_table"] = inst.speeds.offpeak_table;
  if (!inst.speeds.peak_table.empty()) speed["peak_table"] = inst.speeds.peak_table;
  net["speed"] = speed;
  j["network"] = net;

  j["drivers"] = nlohmann::json::array();
  for (const Driver& d : inst.drivers)
    j["drivers"].push_back({{"id", d.id},
                            {"origin", d.origin},
                            {"destination", d.destination},
                            {"capacity", d.capacity},
                            {"earliest_departure", d.earliest_departure},
                            {"latest_arrival", d.latest_arrival},
                            {"detour_limit", d.detour_limit},
                            {"max_duration", d.max_duration},
                            {"vehicle_type", to_string(d.vehicle_type)}});
  j["passengers"] = nlohmann::json::array();
  for (const Passenger& p : inst.passengers)
    j["passengers"].push_back({{"id", p.id},
                               {"origin", p.origin},
                               {"destination", p.destination},
                               {"earliest_departure", p.earliest_departure},
                               {"latest_arrival", p.latest_arrival},
                               {"max_duration", p.max_duration},
                               {"surge_factor", p.surge_factor},
                               {"tip_expectation", p.tip_expectation}});
  if (inst.has_matches) {
    j["matches"] = nlohmann::json::array();
    for (const FeasibleMatch& m : inst.matches)
      j["matches"].push_back({{"driver", m.driver},
                              {"passengers", m.passengers},
                              {"path", m.path},
                              {"revenue", m.revenue},
                              {"cost", m.cost},
                              {"profit", m.profit}});
  }
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  Instance inst;
  inst.seed = j.value("seed", std::uint64_t{0});
  inst.interval = j.value("interval", 0);
  inst.variant = j.value("variant", std::string("rpc1"));
  if (j.contains("day")) {
    inst.day.start_hour = j["day"].value("start_hour", 6);
    inst.day.interval_minutes = j["day"].value("interval_minutes", 15);
    inst.day.intervals = j["day"].value("intervals", 72);
  }

  const auto& net = j.at("network");
  std::vector<NetVertex> vertices;
  for (const auto& v : net.at("vertices"))
    vertices.push_back(NetVertex{v.at("id").get<VertexId>(), v.at("x").get<std::int64_t>(),
                                 v.at("y").get<std::int64_t>(), v.at("region").get<int>()});
  std::vector<NetEdge> edges;
  for (const auto& e : net.at("edges"))
    edges.push_back(NetEdge{e.at("from").get<VertexId>(), e.at("to").get<VertexId>(),
                            e.at("length").get<Meters>()});
  inst.network = RoadNetwork(std::move(vertices), std::move(edges));
  if (net.contains("speed")) {
    const auto& s = net["speed"];
    inst.speeds.offpeak_mps = s.value("offpeak_mps", 7.0);
    inst.speeds.peak_mps = s.value("peak_mps", 5.0);
    if (s.contains("offpeak_table"))
      inst.speeds.offpeak_table = s["offpeak_table"].get<std::vector<std::vector<double>>>();
    if (s.contains("peak_table"))
      inst.speeds.peak_table = s["peak_table"].get<std::vector<std::vector<double>>>();
  }

  for (const auto& d : j.at("drivers")) {
    Driver drv;
    drv.id = d.at("id").get<DriverId>();
    drv.origin = d.at("origin").get<VertexId>();
    drv.destination = d.at("destination").get<VertexId>();
    drv.capacity = d.at("capacity").get<int>();
    drv.earliest_departure = d.at("earliest_departure").get<Seconds>();
    drv.latest_arrival = d.at("latest_arrival").get<Seconds>();
    drv.detour_limit = d.at("detour_limit").get<Seconds>();
    drv.max_duration = d.at("max_duration").get<Seconds>();
    drv.vehicle_type = vehicle_type_from_string(d.at("vehicle_type").get<std::string>());
    inst.drivers.push_back(drv);
  }
  for (const auto& p : j.at("passengers")) {
    Passenger pass;
    pass.id = p.at("id").get<PassengerId>();
    pass.origin = p.at("origin").get<VertexId>();
    pass.destination = p.at("destination").get<VertexId>();
    pass.earliest_departure = p.at("earliest_departure").get<Seconds>();
    pass.latest_arrival = p.at("latest_arrival").get<Seconds>();
    pass.max_duration = p.at("max_duration").get<Seconds>();
    pass.surge_factor = p.at("surge_factor").get<double>();
    pass.tip_expectation = p.at("tip_expectation").get<Money>();
    inst.passengers.push_back(pass);
  }
  if (j.contains("matches")) {
    inst.has_matches = true;
    for (const auto& m : j["matches"]) {
      FeasibleMatch fm;
      fm.driver = m.at("driver").get<DriverId>();
      fm.passengers = m.at("passengers").get<std::vector<PassengerId>>();
      fm.path = m.at("path").get<std::vector<VertexId>>();
      fm.revenue = m.at("revenue").get<Money>();
      fm.cost = m.at("cost").get<Money>();
      fm.profit = m.at("profit").get<Money>();
      inst.matches.push_back(std::move(fm));
    }
  }
  return inst;
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  return instance_from_json(j);
}

}  // namespace rpc
