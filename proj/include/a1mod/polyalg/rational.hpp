#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace a1mod::polyalg {

// Exact rational scalar. Always stored reduced with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical form "p/q" with q omitted when 1, e.g. "-3/2", "7", "0".
std::string rat_str(const Rational& r);

// Parses "p", "-p", "p/q"; throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

}  // namespace a1mod::polyalg
