#pragma once

#include "phisq/factored.hpp"

#include <string_view>

namespace phisq {

/// Parses "<nat>", "<nat>/<nat>" or a factored literal
/// `p1^e1 * p2^e2 ...` into canonical factored form.
///
/// The fraction need not be reduced. Literal primes must be distinct primes
/// and exponents nonzero. Throws ParseError, ZeroValue, or the
/// UnsupportedScale family (propagated from factorization).
FactoredRational parse_rational(std::string_view text);

/// Parses a positive integer given either in decimal or as a factored
/// literal with positive exponents.
FactoredInteger parse_integer(std::string_view text);

}  // namespace phisq
