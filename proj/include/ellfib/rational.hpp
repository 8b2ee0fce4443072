#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ellfib {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need; nothing in
// the library ever touches floating point.
using Rational = boost::multiprecision::cpp_rational;

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

// Inverse of rational_str. Accepts an optional leading '-'.
Rational rational_parse(const std::string& text);

// r^e for e >= 0 (e == 0 gives 1, also for r == 0).
Rational rational_pow(const Rational& r, std::int64_t e);

}  // namespace ellfib
