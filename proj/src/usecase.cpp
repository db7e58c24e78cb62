#include "costbench/usecase.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "costbench/errors.hpp"

namespace costbench {

std::string to_string(UseCase uc) { return uc == UseCase::uc1 ? "uc1" : "uc2"; }

std::string to_string(Platform p) { return p == Platform::faas ? "faas" : "dsp"; }

UseCase use_case_from_string(const std::string& s) {
  if (s == "uc1") return UseCase::uc1;
  if (s == "uc2") return UseCase::uc2;
  throw ValidationError("use_case", "expected uc1 or uc2, got '" + s + "'");
}

Platform platform_from_string(const std::string& s) {
  if (s == "faas") return Platform::faas;
  if (s == "dsp") return Platform::dsp;
  throw ValidationError("platform", "expected faas or dsp, got '" + s + "'");
}

WindowSpec WindowSpec::seconds(Dec size_s, Dec hop_s) {
  if (!(hop_s > Dec())) throw ValidationError("hop_s", "must be > 0");
  if (hop_s > size_s) throw ValidationError("hop_s", "must be <= size_s");
  constexpr std::int64_t kUnitsPerMicro = Dec::kScale / kMicrosPerSecond;
  if (size_s.units() % kUnitsPerMicro != 0 || hop_s.units() % kUnitsPerMicro != 0) {
    throw ValidationError("window", "finer than microsecond resolution");
  }
  WindowSpec spec;
  spec.size_us = size_s.units() / kUnitsPerMicro;
  spec.hop_us = hop_s.units() / kUnitsPerMicro;
  if (spec.size_us % spec.hop_us != 0) {
    throw ValidationError("size_s", "must be an integer multiple of hop_s");
  }
  return spec;
}

AccessProfile access_profile_for(UseCase uc, Platform platform,
                                 const WindowSpec& spec) {
  if (uc == UseCase::uc1) return AccessProfile{0, 1, 1};
  if (platform == Platform::faas) {
    // Read-modify-write of each open window's state per invocation.
    std::int64_t per_event = spec.windows_per_event();
    return AccessProfile{per_event, per_event, 1};
  }
  return AccessProfile{0, 0, 1};  // state lives inside the engine
}

StoreRecord transform(const Event& event) {
  return StoreRecord{event.sensor_id + "#" + format_seconds(event.timestamp_us),
                     event.value, 1};
}

std::vector<Micros> windows_for(Micros t_us, const WindowSpec& spec) {
  // Largest aligned start not after t; t >= 0 in every schedule.
  Micros last = (t_us / spec.hop_us) * spec.hop_us;
  std::int64_t count = spec.windows_per_event();
  std::vector<Micros> starts;
  starts.reserve(count);
  for (std::int64_t i = count - 1; i >= 0; --i) {
    starts.push_back(last - i * spec.hop_us);
  }
  return starts;
}

Aggregate aggregate(std::span<const double> values) {
  if (values.empty()) throw EmptyWindow();
  Aggregate a;
  a.count = static_cast<std::int64_t>(values.size());
  a.min = values[0];
  a.max = values[0];
  for (double v : values) {
    a.sum += v;
    a.min = std::min(a.min, v);
    a.max = std::max(a.max, v);
  }
  a.mean = a.sum / static_cast<double>(a.count);
  return a;
}

Uc1Result run_uc1(const EventSchedule& schedule, WriteSink& store) {
  Uc1Result result;
  result.access = AccessProfile{0, 1, 1};
  for (const Event& event : schedule) {
    store.put(transform(event));
    ++result.records_written;
  }
  return result;
}

Uc2Result run_uc2(const EventSchedule& schedule, const WindowSpec& spec,
                  Platform platform) {
  Uc2Result result;
  result.access = access_profile_for(UseCase::uc2, platform, spec);

  std::map<std::pair<Micros, std::string>, std::vector<double>> open;
  auto close_through = [&](Micros watermark) {
    // Map order is (start, key), so emissions come out sorted.
    for (auto it = open.begin(); it != open.end() &&
                                 it->first.first + spec.size_us <= watermark;) {
      Aggregate a = aggregate(it->second);
      a.window_start_us = it->first.first;
      a.key = it->first.second;
      result.aggregates.push_back(std::move(a));
      it = open.erase(it);
    }
  };

  for (const Event& event : schedule) {
    close_through(event.timestamp_us);
    for (Micros start : windows_for(event.timestamp_us, spec)) {
      open[{start, event.sensor_id}].push_back(event.value);
    }
  }
  for (auto& [window, values] : open) {
    Aggregate a = aggregate(values);
    a.window_start_us = window.first;
    a.key = window.second;
    result.aggregates.push_back(std::move(a));
  }
  return result;
}

namespace {

std::string shortest_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string aggregate_csv_line(const Aggregate& a) {
  return a.key + "," + format_seconds(a.window_start_us) + "," +
         std::to_string(a.count) + "," + shortest_double(a.sum) + "," +
         shortest_double(a.min) + "," + shortest_double(a.max) + "," +
         shortest_double(a.mean);
}

}  // namespace costbench
