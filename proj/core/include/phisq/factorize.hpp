#pragma once

#include "phisq/factored.hpp"
#include "phisq/natural.hpp"

#include <cstdint>

namespace phisq {

/// Effort budget for splitting cofactors that survive trial division.
struct FactorOptions {
    /// Trial division runs over every prime up to this bound.
    std::uint64_t trial_division_bound = 1'000'000;
    /// Pollard-Brent iterations per attempt.
    std::uint64_t rho_iterations = 1u << 20;
    /// Independent attempts (different polynomial constants) per cofactor.
    unsigned rho_attempts = 4;
};

/// Prime factorization of n >= 1.
///
/// Trial division by all primes up to the configured bound, then Pollard-Brent
/// on remaining composite cofactors; every key is certified by is_prime.
/// Throws ZeroValue for n = 0 and FactorizationFailure when a cofactor
/// exhausts the budget or its primality cannot be certified.
FactoredInteger factor(const Natural& n, const FactorOptions& options = {});
FactoredInteger factor(std::uint64_t n);

}  // namespace phisq
