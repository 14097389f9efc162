#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace mutagoal {

/// Exact ratio of two 64-bit integers, stored normalized with a positive
/// denominator. Report metrics stay exact end to end; rounding happens only
/// when a value is rendered.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational ratio(std::int64_t num, std::int64_t den);

  Rational plus(const Rational& other) const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

namespace detail {

inline Rational normalize(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace detail

inline Rational Rational::ratio(std::int64_t num, std::int64_t den) {
  return detail::normalize(num, den);
}

inline Rational Rational::plus(const Rational& other) const {
  __int128 n = static_cast<__int128>(num) * other.den +
               static_cast<__int128>(other.num) * den;
  __int128 d = static_cast<__int128>(den) * other.den;
  return detail::normalize(n, d);
}

/// Rounds half away from zero at one decimal place: 6287/10 -> "628.7",
/// 26/3 -> "8.7".
inline std::string decimal1(const Rational& value) {
  __int128 scaled = static_cast<__int128>(value.num) * 10;
  __int128 den = value.den;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  __int128 tenths = (scaled + den / 2) / den;
  std::int64_t whole = static_cast<std::int64_t>(tenths / 10);
  std::int64_t frac = static_cast<std::int64_t>(tenths % 10);
  std::string out;
  if (negative && (whole != 0 || frac != 0)) out += '-';
  out += std::to_string(whole);
  out += '.';
  out += std::to_string(frac);
  return out;
}

/// Rounds half away from zero to a whole percent: 35/44 -> 80, 36/44 -> 82.
inline int percent(const Rational& value) {
  __int128 scaled = static_cast<__int128>(value.num) * 100;
  __int128 den = value.den;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  __int128 rounded = (scaled + den / 2) / den;
  int out = static_cast<int>(rounded);
  return negative ? -out : out;
}

}  // namespace mutagoal
