#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chtilde {

/// Arbitrary-precision signed integer used for every coefficient and
/// multiplicity in the library.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// Parses a base-10 integer with optional leading '-'. Throws
/// std::invalid_argument on malformed input.
BigInt parse_decimal(std::string_view text);

}  // namespace chtilde
