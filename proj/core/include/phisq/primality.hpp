#pragma once

#include "phisq/natural.hpp"

#include <cstdint>

namespace phisq {

/// Largest bound (exclusive) below which is_prime is proven exact: Miller-Rabin
/// with the first 13 prime bases has no pseudoprime under 3317044064679887385961981.
Natural deterministic_primality_bound();

/// Deterministic primality test for 64-bit values.
bool is_prime(std::uint64_t n);

/// Exact primality test.
///
/// Exact for every n below deterministic_primality_bound(). Above it a
/// Miller-Rabin witness still proves compositeness and false is returned;
/// if no witness is found PrimalityUnsupported is thrown rather than
/// reporting a probable prime as prime.
bool is_prime(const Natural& n);

}  // namespace phisq
