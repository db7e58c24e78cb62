#include "costbench/workload.hpp"

#include <algorithm>

#include "costbench/errors.hpp"
#include "costbench/rng.hpp"

namespace costbench {

namespace {

Micros seconds_to_micros(Dec seconds, const char* field) {
  std::int64_t units = seconds.units();
  constexpr std::int64_t kUnitsPerMicro = Dec::kScale / kMicrosPerSecond;
  if (units % kUnitsPerMicro != 0) {
    throw ValidationError(field, "finer than microsecond resolution");
  }
  return units / kUnitsPerMicro;
}

}  // namespace

std::string format_seconds(Micros us) {
  std::string sign;
  if (us < 0) {
    sign = "-";
    us = -us;
  }
  std::string out = sign + std::to_string(us / kMicrosPerSecond);
  Micros frac = us % kMicrosPerSecond;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

LoadProfile LoadProfile::make(std::int64_t sensors, Dec emit_interval_s,
                              Dec duration_s, std::uint64_t seed) {
  if (sensors < 0) throw ValidationError("sensors", "must be >= 0");
  if (emit_interval_s <= Dec()) {
    throw ValidationError("emit_interval_s", "must be > 0");
  }
  if (duration_s.is_negative()) {
    throw ValidationError("duration_s", "must be >= 0");
  }
  LoadProfile p;
  p.sensors = sensors;
  p.emit_interval_us = seconds_to_micros(emit_interval_s, "emit_interval_s");
  p.duration_us = seconds_to_micros(duration_s, "duration_s");
  if (p.emit_interval_us == 0) {
    throw ValidationError("emit_interval_s", "must be > 0");
  }
  p.seed = seed;
  return p;
}

Rational arrival_rate(const LoadProfile& profile) {
  return Rational::make(profile.sensors * kMicrosPerSecond,
                        profile.emit_interval_us);
}

EventSchedule generate_schedule(const LoadProfile& profile) {
  EventSchedule schedule;
  if (profile.duration_us == 0) return schedule;
  for (std::int64_t k = 0; k < profile.sensors; ++k) {
    SplitMix64 rng(hash_combine(profile.seed, static_cast<std::uint64_t>(k)));
    Micros phase = rng.next_below(profile.emit_interval_us);
    std::string id = "s" + std::to_string(k);
    for (Micros t = phase; t < profile.duration_us; t += profile.emit_interval_us) {
      schedule.push_back(Event{id, t, rng.next_unit() * 1000.0});
    }
  }
  std::sort(schedule.begin(), schedule.end(), [](const Event& a, const Event& b) {
    if (a.timestamp_us != b.timestamp_us) return a.timestamp_us < b.timestamp_us;
    return a.sensor_id < b.sensor_id;
  });
  return schedule;
}

}  // namespace costbench
