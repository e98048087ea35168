#pragma once

// Fare and cost model. Revenue per passenger: after-commission share of a
// metered fare (base + per-minute + per-mile, with per-mile/per-minute
// charges split evenly among the passengers aboard each leg), scaled by a
// shared-ride discount and a surge factor, plus an expected tip. The booking
// fee is charged to the passenger but never reaches the driver, so it stays
// out of profit. Driver cost is mileage-based per vehicle type with optional
// fuel uplift, operating costs and overhead. All intermediate arithmetic is
// double in cent units; each monetary quantity is rounded once, half away
// from zero.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rpc/money.hpp"
#include "rpc/types.hpp"

namespace rpc {

struct FeeSchedule {
  Money base = 180;        // cents per ride
  Money per_minute = 27;   // cents per minute in vehicle
  Money per_mile = 80;     // cents per mile in vehicle
};

// Passenger-side booking fee: $1 minimum, +$0.25 per mile beyond two, capped
// at $10. Excluded from driver revenue.
inline Money booking_fee(double miles) {
  if (miles < 0) throw std::invalid_argument("negative distance");
  double dollars = std::min(std::max(1.0, 1.0 + 0.25 * (miles - 2.0)), 10.0);
  return cents_from_dollars(dollars);
}

// Shared-ride fare discount from the number of distinct co-riders met on the
// passenger's subpath: 1 - 0.2 per co-rider, floored at 0.2.
inline double discount_rate(int distinct_co_riders) {
  if (distinct_co_riders < 0) throw std::invalid_argument("negative co-rider count");
  return std::max(1.0 - 0.2 * distinct_co_riders, 0.2);
}

// Commission interval: the platform takes a uniform draw from
// [max(0.05, 0.2 w), max(0.1, 0.25 w)] where w is the discount rate.
inline std::pair<double, double> take_rate_interval(double discount) {
  if (discount < 0.0 || discount > 1.0) throw std::invalid_argument("discount outside [0,1]");
  return {std::max(0.05, 0.2 * discount), std::max(0.1, 0.25 * discount)};
}

template <typename Rng>
double take_rate(double discount, Rng& rng) {
  auto [lo, hi] = take_rate_interval(discount);
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
  return lo + u * (hi - lo);
}

// Driver-side cost model. Named settings: "base" is bare mileage cost;
// S1..S6 add a peak/off-peak fuel uplift plus per-mile operating costs.
struct CostSetting {
  std::string name = "base";
  double uplift_offpeak = 0.0;  // fraction of the mileage cost
  double uplift_peak = 0.0;
  bool operating_costs = false;
  double overhead = 0.0;  // extra fraction of the bare mileage cost
};

inline CostSetting cost_setting_from_name(const std::string& name) {
  if (name == "base") return {};
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '1' && name[1] <= '6') {
    int i = name[1] - '0';
    return CostSetting{name, 0.20 * i, 0.20 * (i + 1), true, 0.0};
  }
  throw std::invalid_argument("unknown cost setting: " + name);
}

// Bare mileage cost, dollars per mile.
inline double per_mile_vehicle_cost(VehicleType t) {
  switch (t) {
    case VehicleType::kSmallSedan: return 0.1251;
    case VehicleType::kMediumSedan: return 0.1437;
    case VehicleType::kMediumSuv: return 0.1889;
  }
  throw std::invalid_argument("unknown vehicle type");
}

// Operating costs (maintenance + ownership), dollars per mile. Defined for
// the sedan types the cost settings were calibrated on; zero otherwise.
inline double operating_cost_per_mile(VehicleType t) {
  switch (t) {
    case VehicleType::kSmallSedan: return 0.0887 + 0.1851;
    case VehicleType::kMediumSedan: return 0.1064 + 0.2505;
    case VehicleType::kMediumSuv: return 0.0;
  }
  throw std::invalid_argument("unknown vehicle type");
}

struct RideLeg {
  double miles = 0;
  double minutes = 0;
  int occupancy = 0;  // passengers aboard
};

struct RiderFare {
  int first_leg = 0;  // inclusive leg range of the rider's subpath
  int last_leg = 0;
  double take_rate = 0;  // commission fraction
  double discount = 1;   // shared-ride discount
  double surge = 1;
  Money tip = 0;  // expected tip, cents
};

struct RideContext {
  std::vector<RideLeg> legs;
  std::vector<RiderFare> riders;
};

// Driver revenue of a match, rounded once.
inline Money match_revenue(const RideContext& ctx, const FeeSchedule& fees) {
  double cents = 0;
  for (const RiderFare& r : ctx.riders) {
    if (r.first_leg < 0 || r.last_leg < r.first_leg ||
        r.last_leg >= static_cast<int>(ctx.legs.size()))
      throw std::invalid_argument("rider leg range outside path");
    double fare = static_cast<double>(fees.base);
    for (int i = r.first_leg; i <= r.last_leg; ++i) {
      const RideLeg& leg = ctx.legs[i];
      if (leg.occupancy < 1) throw std::invalid_argument("leg with no passengers on subpath");
      fare += (fees.per_minute * leg.minutes + fees.per_mile * leg.miles) / leg.occupancy;
    }
    cents += (1.0 - r.take_rate) * r.discount * r.surge * fare + static_cast<double>(r.tip);
  }
  return round_cents(cents);
}

// Driver cost of a match, rounded once.
inline Money match_cost(double total_miles, VehicleType vehicle, const CostSetting& setting,
                        bool peak) {
  if (total_miles < 0) throw std::invalid_argument("negative distance");
  double mileage = total_miles * per_mile_vehicle_cost(vehicle);
  double uplift = peak ? setting.uplift_peak : setting.uplift_offpeak;
  double dollars = mileage * (1.0 + uplift) + mileage * setting.overhead;
  if (setting.operating_costs) dollars += total_miles * operating_cost_per_mile(vehicle);
  return cents_from_dollars(dollars);
}

inline Money match_profit(const RideContext& ctx, const FeeSchedule& fees, double total_miles,
                          VehicleType vehicle, const CostSetting& setting, bool peak) {
  return match_revenue(ctx, fees) - match_cost(total_miles, vehicle, setting, peak);
}

}  // namespace rpc
