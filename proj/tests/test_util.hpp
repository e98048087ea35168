#pragma once

// Shared helpers: terse hypergraph construction and tiny road networks with
// permissive trip windows.

#include <cstdint>
#include <vector>

#include "rpc/hypergraph.hpp"
#include "rpc/road_network.hpp"
#include "rpc/types.hpp"

namespace rpctest {

inline rpc::HyperEdge edge(rpc::EdgeId id, rpc::DriverId d, std::vector<rpc::PassengerId> rs,
                           rpc::Money w) {
  return rpc::HyperEdge{id, d, std::move(rs), w};
}

inline rpc::Hypergraph graph(std::vector<rpc::HyperEdge> es) {
  return rpc::Hypergraph::from_edges(std::move(es));
}

// Path graph along the x axis: vertex i at (xs[i], 0), bidirectional edges
// between consecutive vertices with Euclidean lengths, all in region 0.
inline rpc::RoadNetwork line_network(const std::vector<std::int64_t>& xs) {
  std::vector<rpc::NetVertex> vs;
  for (std::size_t i = 0; i < xs.size(); ++i)
    vs.push_back(rpc::NetVertex{static_cast<rpc::VertexId>(i), xs[i], 0, 0});
  std::vector<rpc::NetEdge> es;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    rpc::Meters len = xs[i + 1] - xs[i];
    es.push_back(rpc::NetEdge{static_cast<rpc::VertexId>(i), static_cast<rpc::VertexId>(i + 1), len});
    es.push_back(rpc::NetEdge{static_cast<rpc::VertexId>(i + 1), static_cast<rpc::VertexId>(i), len});
  }
  return rpc::RoadNetwork(std::move(vs), std::move(es));
}

constexpr rpc::Seconds kBig = 1'000'000;

inline rpc::Driver driver(rpc::DriverId id, rpc::VertexId o, rpc::VertexId d, int capacity = 1) {
  rpc::Driver drv;
  drv.id = id;
  drv.origin = o;
  drv.destination = d;
  drv.capacity = capacity;
  drv.earliest_departure = 0;
  drv.latest_arrival = kBig;
  drv.detour_limit = kBig;
  drv.max_duration = kBig;
  return drv;
}

inline rpc::Passenger rider(rpc::PassengerId id, rpc::VertexId o, rpc::VertexId d) {
  rpc::Passenger p;
  p.id = id;
  p.origin = o;
  p.destination = d;
  p.earliest_departure = 0;
  p.latest_arrival = kBig;
  p.max_duration = kBig;
  return p;
}

// Unit speed everywhere makes seconds equal meters in the tests.
inline rpc::SpeedTable unit_speed() {
  rpc::SpeedTable s;
  s.offpeak_mps = 1.0;
  s.peak_mps = 1.0;
  return s;
}

}  // namespace rpctest
