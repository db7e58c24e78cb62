#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "costbench/workload.hpp"

namespace costbench {

enum class UseCase { uc1, uc2 };
enum class Platform { faas, dsp };

std::string to_string(UseCase uc);
std::string to_string(Platform p);
UseCase use_case_from_string(const std::string& s);
Platform platform_from_string(const std::string& s);

// Hopping window of size W advancing every hop h; h divides W, so every
// event belongs to exactly W/h windows.
struct WindowSpec {
  Micros size_us = 0;
  Micros hop_us = 0;

  static WindowSpec seconds(Dec size_s, Dec hop_s);
  std::int64_t windows_per_event() const { return size_us / hop_us; }
};

struct StoreRecord {
  std::string key;  // sensor_id "#" timestamp
  double value = 0;
  std::int64_t write_units = 1;

  bool operator==(const StoreRecord&) const = default;
};

struct Aggregate {
  Micros window_start_us = 0;
  std::string key;
  std::int64_t count = 0;
  double sum = 0;
  double min = 0;
  double max = 0;
  double mean = 0;

  bool operator==(const Aggregate&) const = default;
};

// Per-event resource touches that drive the cost models. Depends only on
// (use case, platform, window spec), never on data values.
struct AccessProfile {
  std::int64_t db_reads_per_event = 0;
  std::int64_t db_writes_per_event = 0;
  std::int64_t messages_per_event = 0;

  bool operator==(const AccessProfile&) const = default;
};

AccessProfile access_profile_for(UseCase uc, Platform platform,
                                 const WindowSpec& spec);

// Maps an event to the record shape the storage backend takes.
StoreRecord transform(const Event& event);

// All window starts s with s = 0 (mod hop) and s <= t < s + size, ascending.
// Starts may be negative near the epoch.
std::vector<Micros> windows_for(Micros t_us, const WindowSpec& spec);

// Summary statistics over one window's values; throws EmptyWindow on an
// empty list. window_start/key are left for the caller to fill.
Aggregate aggregate(std::span<const double> values);

struct WriteSink {
  virtual ~WriteSink() = default;
  virtual void put(const StoreRecord& record) = 0;
};

struct VectorSink final : WriteSink {
  std::vector<StoreRecord> records;
  void put(const StoreRecord& record) override { records.push_back(record); }
};

struct Uc1Result {
  std::int64_t records_written = 0;
  AccessProfile access;
};

// Stateless transform-and-persist: one record per event, in schedule order.
Uc1Result run_uc1(const EventSchedule& schedule, WriteSink& store);

struct Uc2Result {
  std::vector<Aggregate> aggregates;  // ordered by (window_start, key)
  AccessProfile access;
};

// Keyed hopping-window aggregation. Windows are emitted once the watermark
// (max observed timestamp) passes their end; remaining windows are flushed
// at end of schedule. Empty windows are never emitted.
Uc2Result run_uc2(const EventSchedule& schedule, const WindowSpec& spec,
                  Platform platform);

// key,window_start,count,sum,min,max,mean
std::string aggregate_csv_line(const Aggregate& a);

}  // namespace costbench
