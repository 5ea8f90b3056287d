#pragma once

#include "phisq/factored.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace phisq {

/// Primes up to `limit`, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Draws a rational whose exponent at every prime <= max_prime is uniform in
/// [-max_abs_exponent, max_abs_exponent]; zero draws leave the prime out.
FactoredRational random_rational(std::mt19937_64& rng, std::uint64_t max_prime,
                                 Exponent max_abs_exponent);

}  // namespace phisq
