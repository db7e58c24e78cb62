#include "costbench/decimal.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "costbench/errors.hpp"

namespace costbench {

namespace {

using int128 = __int128;

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t checked_int64(int128 v, const char* what) {
  if (v > int128(kInt64Max) || v < -int128(kInt64Max)) {
    throw ParseError(std::string(what) + ": value out of range");
  }
  return static_cast<std::int64_t>(v);
}

// Signed division rounding half to even.
std::int64_t div_round_half_even(int128 num, int128 den, const char* what) {
  bool negative = (num < 0) != (den < 0);
  int128 n = num < 0 ? -num : num;
  int128 d = den < 0 ? -den : den;
  int128 q = n / d;
  int128 r = n % d;
  int128 twice = r * 2;
  if (twice > d || (twice == d && (q & 1) != 0)) {
    q += 1;
  }
  return checked_int64(negative ? -q : q, what);
}

}  // namespace

Dec Dec::from_int(std::int64_t whole) {
  if (whole > kInt64Max / kScale || whole < -(kInt64Max / kScale)) {
    throw ParseError("decimal out of range");
  }
  return from_units(whole * kScale);
}

Dec Dec::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("decimal literal has no digits");

  int128 units = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("bad decimal literal '" + std::string(text) + "'");
    }
    any_digit = true;
    units = units * 10 + (text[i] - '0');
    if (units > int128(kInt64Max)) throw ParseError("decimal out of range");
  }
  units *= kScale;
  if (i < text.size()) {  // fractional part
    ++i;
    std::int64_t place = kScale / 10;
    bool frac_digit = false;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("bad decimal literal '" + std::string(text) + "'");
      }
      frac_digit = true;
      int digit = text[i] - '0';
      if (place == 0) {
        if (digit != 0) {
          throw ParseError("more than 12 decimal places in '" +
                           std::string(text) + "'");
        }
        continue;
      }
      units += int128(digit) * place;
      place /= 10;
    }
    if (!frac_digit) throw ParseError("trailing '.' in decimal literal");
    any_digit = any_digit || frac_digit;
  }
  if (!any_digit) throw ParseError("decimal literal has no digits");
  return from_units(checked_int64(negative ? -units : units, "decimal"));
}

double Dec::to_double() const {
  return static_cast<double>(units_) / static_cast<double>(kScale);
}

std::string Dec::str() const {
  std::int64_t u = units_;
  std::string sign;
  if (u < 0) {
    sign = "-";
    u = -u;
  }
  std::int64_t whole = u / kScale;
  std::int64_t frac = u % kScale;
  std::string out = sign + std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 12 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Dec Dec::operator+(Dec o) const {
  return from_units(checked_int64(int128(units_) + int128(o.units_), "sum"));
}

Dec Dec::operator-(Dec o) const {
  return from_units(checked_int64(int128(units_) - int128(o.units_), "diff"));
}

Dec Dec::scaled_by(std::int64_t count) const {
  return from_units(checked_int64(int128(units_) * int128(count), "product"));
}

Dec Dec::times(Dec o) const {
  return from_units(
      div_round_half_even(int128(units_) * int128(o.units_), kScale, "product"));
}

Dec Dec::mul_ratio(std::int64_t num, std::int64_t den) const {
  if (den <= 0) throw ParseError("ratio denominator must be positive");
  return from_units(
      div_round_half_even(int128(units_) * int128(num), den, "ratio product"));
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num = num;
  r.den = den;
  return r;
}

Rational Rational::parse_decimal(std::string_view text) {
  Dec d = Dec::parse(text);
  return make(d.units(), Dec::kScale);
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
  // den is reduced; it divides a power of ten iff it is 2^a * 5^b <= 1e12.
  std::int64_t d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d == 1 && den <= Dec::kScale) {
    std::int64_t factor = Dec::kScale / den;
    if (Dec::kScale % den == 0 &&
        (num == 0 || std::abs(num) <= std::numeric_limits<std::int64_t>::max() / factor)) {
      return Dec::from_units(num * factor).str();
    }
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

}  // namespace costbench
