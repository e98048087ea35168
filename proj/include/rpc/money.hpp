#pragma once

// Monetary amounts are signed 64-bit cent counts at every module boundary.
// Intermediate pricing arithmetic may use doubles; each quantity is rounded
// to cents exactly once, half away from zero.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace rpc {

using Money = std::int64_t;  // cents

// Rounds a dollar amount to whole cents, half away from zero.
inline Money cents_from_dollars(double dollars) {
  return static_cast<Money>(std::llround(dollars * 100.0));
}

// Rounds a cent amount expressed as a double, half away from zero.
inline Money round_cents(double cents) {
  return static_cast<Money>(std::llround(cents));
}

inline std::string format_money(Money cents) {
  char buf[32];
  const char* sign = cents < 0 ? "-" : "";
  Money a = cents < 0 ? -cents : cents;
  std::snprintf(buf, sizeof buf, "%s$%lld.%02lld", sign,
                static_cast<long long>(a / 100), static_cast<long long>(a % 100));
  return buf;
}

}  // namespace rpc
