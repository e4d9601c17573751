#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace braid3 {

// Exponents and delta-powers are arbitrary precision: normalization of long
// inputs accumulates delta-powers and exponent sums that must never wrap.
using BigInt = boost::multiprecision::cpp_int;

inline std::string toString(const BigInt& x) { return x.str(); }

// Checked narrowing for places where a value has to be materialized
// letter-by-letter (loop bounds, vector sizes).
long long toLongChecked(const BigInt& x, const char* what);

}  // namespace braid3
