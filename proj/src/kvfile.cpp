#include "costbench/kvfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "costbench/errors.hpp"

namespace costbench {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("short write to " + path.string());
}

KvFile KvFile::load(const std::filesystem::path& path) {
  return from_string(read_text_file(path), path.string());
}

KvFile KvFile::from_string(std::string text, std::string origin) {
  KvFile kv;
  kv.origin_ = std::move(origin);
  std::istringstream in(std::move(text));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                       ": expected 'key = value'");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                       ": empty key");
    }
    if (kv.find(key)) {
      throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                       ": duplicate key '" + key + "'");
    }
    kv.entries_.emplace_back(std::move(key), std::move(value));
  }
  return kv;
}

std::optional<std::string> KvFile::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string KvFile::require(const std::string& key) const {
  auto v = find(key);
  if (!v) throw ValidationError(key, "missing in " + origin_);
  return *v;
}

std::string KvFile::get_string(const std::string& key,
                               const std::string& fallback) const {
  auto v = find(key);
  return v ? *v : fallback;
}

Dec KvFile::get_dec(const std::string& key, Dec fallback) const {
  auto v = find(key);
  if (!v) return fallback;
  try {
    return Dec::parse(*v);
  } catch (const ParseError& e) {
    throw ParseError(origin_ + ": " + key + ": " + e.what());
  }
}

Dec KvFile::require_dec(const std::string& key) const {
  auto v = find(key);
  if (!v) throw ValidationError(key, "missing in " + origin_);
  try {
    return Dec::parse(*v);
  } catch (const ParseError& e) {
    throw ParseError(origin_ + ": " + key + ": " + e.what());
  }
}

std::int64_t KvFile::get_int(const std::string& key, std::int64_t fallback) const {
  auto v = find(key);
  if (!v) return fallback;
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw ParseError(origin_ + ": " + key + ": bad integer '" + *v + "'");
  }
  return out;
}

std::int64_t KvFile::require_int(const std::string& key) const {
  if (!find(key)) throw ValidationError(key, "missing in " + origin_);
  return get_int(key, 0);
}

std::uint64_t KvFile::get_u64(const std::string& key, std::uint64_t fallback) const {
  auto v = find(key);
  if (!v) return fallback;
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw ParseError(origin_ + ": " + key + ": bad unsigned integer '" + *v + "'");
  }
  return out;
}

double KvFile::get_double(const std::string& key, double fallback) const {
  auto v = find(key);
  if (!v) return fallback;
  try {
    return Dec::parse(*v).to_double();
  } catch (const ParseError& e) {
    throw ParseError(origin_ + ": " + key + ": " + e.what());
  }
}

void KvFile::restrict_keys(const std::set<std::string>& allowed) const {
  for (const auto& [k, v] : entries_) {
    if (!allowed.count(k)) {
      throw ValidationError(k, "unknown key in " + origin_);
    }
  }
}

}  // namespace costbench
