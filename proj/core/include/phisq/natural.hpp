#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace phisq {

/// Arbitrary-precision non-negative integer.
using Natural = boost::multiprecision::cpp_int;

/// Signed exponent of a prime in a factored value. INT64_MIN is never stored.
using Exponent = std::int64_t;

inline std::string to_string(const Natural& n) { return n.str(); }

/// Parses a run of decimal digits. Throws ParseError on anything else.
Natural parse_natural(std::string_view digits);

/// Returns the value as uint64 when it fits.
inline std::optional<std::uint64_t> to_u64(const Natural& n) {
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return n.convert_to<std::uint64_t>();
}

}  // namespace phisq
