#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace agqss {

/// Exact arbitrary-precision rational. Operator entries and entropies are
/// ratios of element counts; nothing in this codebase ever rounds.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace agqss
