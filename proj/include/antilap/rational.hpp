#pragma once

// Exact rational arithmetic used throughout the coefficient and term algebra.
//
// Rational is Boost.Multiprecision's cpp_rational: arbitrary precision,
// always reduced, denominator positive. This header adds the string form
// used by the JSON interfaces ("p/q") and a few conversions.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <string>
#include <string_view>

#include "antilap/errors.hpp"

namespace antilap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

// Always "p/q", including integers ("3/1") so the wire format is uniform.
inline std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

// Accepts "p/q", "p" and an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("malformed rational: '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed rational: '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_zero(const Rational& q) { return q == 0; }

}  // namespace antilap
