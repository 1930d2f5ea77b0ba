#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace roofcalc {

/// Arbitrary precision integer used for representation dimensions,
/// multiplicities and Hodge numbers.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace roofcalc
