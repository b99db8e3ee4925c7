#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace mg {

// All lengths, coordinates and norms are exact rationals; floating point
// only appears at the very edge of the API (lp_norm and friends).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_of(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

inline Integer ceil_of(const Rational& r) { return -floor_of(-r); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// Lowest-terms decimal-free text form: "p/q", or just "p" for integers.
std::string to_string(const Rational& r);

// Accepts an optionally signed integer or "p/q" with q > 0 after parsing.
// Returns nullopt on any other shape (including floats).
std::optional<Rational> try_parse_rational(std::string_view text);

}  // namespace mg
