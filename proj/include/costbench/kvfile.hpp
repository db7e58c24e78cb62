#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "costbench/decimal.hpp"

namespace costbench {

// Flat "key = value" configuration file. Lines starting with '#' and blank
// lines are ignored; values keep interior spaces (labels, source URLs).
class KvFile {
 public:
  static KvFile load(const std::filesystem::path& path);
  static KvFile from_string(std::string text, std::string origin = "<string>");

  const std::string& origin() const { return origin_; }

  std::optional<std::string> find(const std::string& key) const;
  // Throws ValidationError naming the key when absent.
  std::string require(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  Dec get_dec(const std::string& key, Dec fallback) const;
  Dec require_dec(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::int64_t require_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;

  // Throws ValidationError on any key outside `allowed`.
  void restrict_keys(const std::set<std::string>& allowed) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::string origin_;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace costbench
