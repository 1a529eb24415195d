#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fingeo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

/// Closed rational enclosure [lo, hi] of a real number; lo == hi when exact.
struct Interval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  bool certainly_nonnegative() const { return lo >= 0; }
  bool certainly_negative() const { return hi < 0; }
};

/// "a/b" when exact, "[lo,hi]" otherwise.
std::string to_string(const Interval& iv);

/// Enclosure of sqrt(n) with width 10^-digits (exact for perfect squares).
Interval sqrt_enclosure(const BigInt& n, unsigned digits = 20);

}  // namespace fingeo
