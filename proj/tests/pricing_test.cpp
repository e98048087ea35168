#include "rpc/pricing.hpp"

#include <gtest/gtest.h>

#include <random>

namespace rpc {
namespace {

TEST(BookingFee, DollarFloorPerMileGrowthAndCap) {
  EXPECT_EQ(booking_fee(0.0), 100);
  EXPECT_EQ(booking_fee(2.0), 100);
  EXPECT_EQ(booking_fee(10.0), 300);
  EXPECT_EQ(booking_fee(100.0), 1000);
  EXPECT_EQ(booking_fee(3.0), 125);
  EXPECT_THROW(booking_fee(-1.0), std::invalid_argument);
}

TEST(DiscountRate, StepsDownPerCoRiderWithFloor) {
  EXPECT_DOUBLE_EQ(discount_rate(0), 1.0);
  EXPECT_DOUBLE_EQ(discount_rate(1), 0.8);
  EXPECT_DOUBLE_EQ(discount_rate(2), 0.6);
  EXPECT_DOUBLE_EQ(discount_rate(4), 0.2);
  EXPECT_DOUBLE_EQ(discount_rate(7), 0.2);
  EXPECT_THROW(discount_rate(-1), std::invalid_argument);
}

TEST(TakeRate, IntervalTracksTheDiscount) {
  auto full = take_rate_interval(1.0);
  EXPECT_DOUBLE_EQ(full.first, 0.2);
  EXPECT_DOUBLE_EQ(full.second, 0.25);
  auto floored = take_rate_interval(0.2);
  EXPECT_DOUBLE_EQ(floored.first, 0.05);
  EXPECT_DOUBLE_EQ(floored.second, 0.1);
  auto mid = take_rate_interval(0.5);
  EXPECT_DOUBLE_EQ(mid.first, 0.1);
  EXPECT_DOUBLE_EQ(mid.second, 0.125);
  EXPECT_THROW(take_rate_interval(1.5), std::invalid_argument);
}

TEST(TakeRate, DrawsStayInsideTheInterval) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    double t = take_rate(0.6, rng);
    EXPECT_GE(t, 0.12);
    EXPECT_LT(t, 0.15);
  }
}

TEST(CostSetting, NamedSettingsScaleUplift) {
  CostSetting base = cost_setting_from_name("base");
  EXPECT_FALSE(base.operating_costs);
  EXPECT_DOUBLE_EQ(base.uplift_peak, 0.0);

  CostSetting s3 = cost_setting_from_name("S3");
  EXPECT_TRUE(s3.operating_costs);
  EXPECT_DOUBLE_EQ(s3.uplift_offpeak, 0.6);
  EXPECT_DOUBLE_EQ(s3.uplift_peak, 0.8);

  EXPECT_THROW(cost_setting_from_name("S7"), std::invalid_argument);
  EXPECT_THROW(cost_setting_from_name("s1"), std::invalid_argument);
}

TEST(MatchRevenue, SingleRiderSingleLeg) {
  // 10 minutes, 5 miles, full fare, 25% commission, no tip:
  // 0.75 * (180 + 270 + 400) = 637.5 -> 638.
  RideContext ctx;
  ctx.legs = {RideLeg{5.0, 10.0, 1}};
  ctx.riders = {RiderFare{0, 0, 0.25, 1.0, 1.0, 0}};
  EXPECT_EQ(match_revenue(ctx, FeeSchedule{}), 638);
}

TEST(MatchRevenue, SplitsMeteredChargesByOccupancy) {
  // Two riders aboard one leg: each pays half the metered part plus the
  // full base, with a 0.8 discount and no commission.
  // Fare each: 180 + (27*10 + 80*5)/2 = 515; 0.8 * 515 = 412 -> two riders 824.
  RideContext ctx;
  ctx.legs = {RideLeg{5.0, 10.0, 2}};
  ctx.riders = {RiderFare{0, 0, 0.0, 0.8, 1.0, 0}, RiderFare{0, 0, 0.0, 0.8, 1.0, 0}};
  EXPECT_EQ(match_revenue(ctx, FeeSchedule{}), 824);
}

TEST(MatchRevenue, SurgeAndTipApplyPerRider) {
  // 1.5 surge on an 850-cent fare at no commission: 1275; plus 200 tip.
  RideContext ctx;
  ctx.legs = {RideLeg{5.0, 10.0, 1}};
  ctx.riders = {RiderFare{0, 0, 0.0, 1.0, 1.5, 200}};
  EXPECT_EQ(match_revenue(ctx, FeeSchedule{}), 1475);
}

TEST(MatchRevenue, RoundsOnceAtTheEnd) {
  // Two riders at 637.5 cents each: summed to 1275, not rounded to 638 * 2.
  RideContext ctx;
  ctx.legs = {RideLeg{5.0, 10.0, 2}};
  ctx.riders = {RiderFare{0, 0, 0.25, 1.0, 1.0, 0}, RiderFare{0, 0, 0.25, 1.0, 1.0, 0}};
  // Each fare: 180 + (270 + 400)/2 = 515; 0.75 * 515 = 386.25; sum 772.5 -> 773.
  EXPECT_EQ(match_revenue(ctx, FeeSchedule{}), 773);
}

TEST(MatchRevenue, ValidatesLegRangesAndOccupancy) {
  RideContext ctx;
  ctx.legs = {RideLeg{5.0, 10.0, 1}};
  ctx.riders = {RiderFare{0, 1, 0.0, 1.0, 1.0, 0}};
  EXPECT_THROW(match_revenue(ctx, FeeSchedule{}), std::invalid_argument);
  ctx.riders = {RiderFare{0, 0, 0.0, 1.0, 1.0, 0}};
  ctx.legs[0].occupancy = 0;
  EXPECT_THROW(match_revenue(ctx, FeeSchedule{}), std::invalid_argument);
}

TEST(MatchCost, BareMileage) {
  EXPECT_EQ(match_cost(10.0, VehicleType::kSmallSedan, CostSetting{}, false), 125);
  EXPECT_EQ(match_cost(10.0, VehicleType::kMediumSedan, CostSetting{}, false), 144);
  EXPECT_EQ(match_cost(10.0, VehicleType::kMediumSuv, CostSetting{}, true), 189);
  EXPECT_THROW(match_cost(-1.0, VehicleType::kSmallSedan, CostSetting{}, false),
               std::invalid_argument);
}

TEST(MatchCost, UpliftAndOperatingCosts) {
  // S2 off-peak, small sedan, 10 miles:
  // 1.251 * 1.4 + 10 * (0.0887 + 0.1851) = 4.4894 dollars -> 449.
  CostSetting s2 = cost_setting_from_name("S2");
  EXPECT_EQ(match_cost(10.0, VehicleType::kSmallSedan, s2, false), 449);
  // Peak bumps the uplift to 0.6: 1.251 * 1.6 + 2.738 = 4.7396 -> 474.
  EXPECT_EQ(match_cost(10.0, VehicleType::kSmallSedan, s2, true), 474);
  // The SUV has no calibrated operating costs.
  // 1.889 * 1.4 = 2.6446 -> 264.
  EXPECT_EQ(match_cost(10.0, VehicleType::kMediumSuv, s2, false), 264);
}

TEST(MatchCost, OverheadScalesTheBareMileage) {
  CostSetting with_overhead;
  with_overhead.overhead = 0.5;
  // 1.251 + 0.5 * 1.251 = 1.8765 dollars -> 188.
  EXPECT_EQ(match_cost(10.0, VehicleType::kSmallSedan, with_overhead, false), 188);
}

TEST(MatchProfit, RevenueMinusCost) {
  RideContext ctx;
  ctx.legs = {RideLeg{5.0, 10.0, 1}};
  ctx.riders = {RiderFare{0, 0, 0.25, 1.0, 1.0, 0}};
  Money p = match_profit(ctx, FeeSchedule{}, 5.0, VehicleType::kSmallSedan, CostSetting{}, false);
  EXPECT_EQ(p, 638 - 63);  // 0.6255 dollars -> 63
}

}  // namespace
}  // namespace rpc
