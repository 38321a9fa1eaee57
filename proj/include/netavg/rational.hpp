#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace netavg {

// Exact arithmetic for the quantized protocol. The mixing weights, the
// division-precision grid and the quantized node states all stay rational,
// so the finite-value-set and mass-conservation properties hold with zero
// floating error.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt floor_rat(const Rat& x);
BigInt ceil_rat(const Rat& x);
BigInt round_half_up_rat(const Rat& x);  // floor(x + 1/2)

double to_double(const Rat& x);
Rat rat_from_double_exact(double x);  // every finite double is a rational

// Accepts "p/q", plain integers, and decimal literals ("0.1" -> 1/10).
Rat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

}  // namespace netavg
