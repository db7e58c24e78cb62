#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace costbench {

// Exact decimal with 12 fractional digits, stored as a scaled int64.
// Used for money and for resource quantities so that cost totals are
// penny-exact and stable across runs. Arithmetic that cannot be exact
// (division) rounds half to even at the last digit.
class Dec {
 public:
  static constexpr std::int64_t kScale = 1'000'000'000'000LL;  // 1e12

  constexpr Dec() = default;

  static constexpr Dec from_units(std::int64_t units) {
    Dec d;
    d.units_ = units;
    return d;
  }
  static Dec from_int(std::int64_t whole);

  // Parses a plain decimal literal ("0.10", "-3", "2.5"). Throws ParseError
  // on malformed text, more than 12 fractional digits, or overflow.
  static Dec parse(std::string_view text);

  constexpr std::int64_t units() const { return units_; }
  bool is_zero() const { return units_ == 0; }
  bool is_negative() const { return units_ < 0; }
  double to_double() const;

  // Canonical decimal string, trailing fractional zeros trimmed.
  std::string str() const;

  Dec operator+(Dec o) const;
  Dec operator-(Dec o) const;
  Dec operator-() const { return from_units(-units_); }
  Dec& operator+=(Dec o) { return *this = *this + o; }

  // Exact product with an integer count; throws on overflow.
  Dec scaled_by(std::int64_t count) const;
  // Product of two decimals, rounded half to even.
  Dec times(Dec o) const;
  // (*this * num) / den, rounded half to even. den > 0.
  Dec mul_ratio(std::int64_t num, std::int64_t den) const;

  bool operator==(const Dec&) const = default;
  bool operator<(Dec o) const { return units_ < o.units_; }
  bool operator<=(Dec o) const { return units_ <= o.units_; }
  bool operator>(Dec o) const { return units_ > o.units_; }
  bool operator>=(Dec o) const { return units_ >= o.units_; }

 private:
  std::int64_t units_ = 0;
};

// Exact rational, used for arrival rates so that sensors / emit_interval
// and per-hour scaling stay exact. Always normalized with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  // Parses a decimal literal into an exact fraction ("2.5" -> 5/2).
  static Rational parse_decimal(std::string_view text);

  double to_double() const;
  bool is_zero() const { return num == 0; }
  // Exact decimal string when the reduced denominator is 2^a*5^b,
  // otherwise "num/den".
  std::string str() const;

  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const;
};

}  // namespace costbench
