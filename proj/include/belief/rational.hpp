#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace belt {

// All probabilities and thresholds are exact rationals; no floating point
// appears anywhere in the core.
using Rat = boost::multiprecision::cpp_rational;

// Parses "a/b", "a", or a terminating decimal like "0.25" (converted
// exactly). Throws Error{ErrKind::Syntax} on malformed input and
// Error{ErrKind::Schema} on zero denominators.
Rat parse_rational(std::string_view text);

// "a/b" with b > 0 in lowest terms; integers render without the "/1".
std::string rat_to_string(const Rat& r);

// Always "a/b", as used in serialized documents.
std::string rat_to_fraction_string(const Rat& r);

}  // namespace belt
