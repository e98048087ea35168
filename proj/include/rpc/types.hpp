#pragma once

// Domain value types shared across the library.
// Conventions: times are absolute seconds (from midnight of the simulated
// day), durations are seconds, distances are meters, money is cents.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpc/money.hpp"

namespace rpc {

using DriverId = std::int32_t;
using PassengerId = std::int32_t;
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Seconds = std::int64_t;
using Meters = std::int64_t;

constexpr double kMetersPerMile = 1609.344;
constexpr double kSecondsPerMinute = 60.0;

enum class VehicleType { kSmallSedan, kMediumSedan, kMediumSuv };

inline const char* to_string(VehicleType t) {
  switch (t) {
    case VehicleType::kSmallSedan: return "SmallSedan";
    case VehicleType::kMediumSedan: return "MediumSedan";
    case VehicleType::kMediumSuv: return "MediumSUV";
  }
  return "?";
}

inline VehicleType vehicle_type_from_string(const std::string& s) {
  if (s == "SmallSedan") return VehicleType::kSmallSedan;
  if (s == "MediumSedan") return VehicleType::kMediumSedan;
  if (s == "MediumSUV") return VehicleType::kMediumSuv;
  throw std::invalid_argument("unknown vehicle type: " + s);
}

struct Driver {
  DriverId id = 0;
  VertexId origin = 0;
  VertexId destination = 0;
  int capacity = 1;                 // max passengers carried over the whole trip
  Seconds earliest_departure = 0;
  Seconds latest_arrival = 0;
  Seconds detour_limit = 0;         // extra travel time allowed beyond the direct trip
  Seconds max_duration = 0;         // cap on departure-to-arrival time
  VehicleType vehicle_type = VehicleType::kSmallSedan;
};

struct Passenger {
  PassengerId id = 0;
  VertexId origin = 0;
  VertexId destination = 0;
  Seconds earliest_departure = 0;
  Seconds latest_arrival = 0;
  Seconds max_duration = 0;         // cap on board-to-dropoff time
  double surge_factor = 1.0;
  Money tip_expectation = 0;
};

// A priced feasible assignment of one driver to a passenger group, carrying
// the stop sequence of its shortest feasible path (driver origin, pickups and
// dropoffs interleaved, driver destination).
struct FeasibleMatch {
  DriverId driver = 0;
  std::vector<PassengerId> passengers;  // sorted ascending, size >= 1
  std::vector<VertexId> path;           // stop sequence of the SFP
  Money revenue = 0;
  Money cost = 0;
  Money profit = 0;                     // always revenue - cost
};

}  // namespace rpc
