#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costbench/decimal.hpp"

namespace costbench {

// Timestamps are 64-bit microsecond offsets from the schedule epoch, so
// schedule equality (and the "same seed, same bytes" contract) is exact.
using Micros = std::int64_t;

constexpr Micros kMicrosPerSecond = 1'000'000;

// Renders microseconds as decimal seconds, trailing zeros trimmed.
std::string format_seconds(Micros us);

// Fixed-interval sensor fleet in an open workload model: arrivals are
// scheduled, never gated on completions.
struct LoadProfile {
  std::int64_t sensors = 0;
  Micros emit_interval_us = kMicrosPerSecond;
  Micros duration_us = 0;
  std::uint64_t seed = 0;

  // Validates invariants; interval/duration given in seconds.
  static LoadProfile make(std::int64_t sensors, Dec emit_interval_s,
                          Dec duration_s, std::uint64_t seed);
};

struct Event {
  std::string sensor_id;
  Micros timestamp_us = 0;
  double value = 0;

  bool operator==(const Event&) const = default;
};

// Sorted by (timestamp, sensor_id).
using EventSchedule = std::vector<Event>;

// Aggregate arrival rate sensors / emit_interval, events per second, exact.
Rational arrival_rate(const LoadProfile& profile);

// Each sensor k fires at phase + n * emit_interval for n = 0, 1, ... within
// [0, duration); the phase is drawn uniformly from [0, emit_interval) by a
// generator seeded from (profile.seed, k). Pure function of the profile.
EventSchedule generate_schedule(const LoadProfile& profile);

}  // namespace costbench
