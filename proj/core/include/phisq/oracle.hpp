#pragma once

#include "phisq/factored.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace phisq {

/// Largest bound accepted by the brute-force routines.
inline constexpr std::uint64_t max_oracle_bound = 10'000'000;

struct SearchResult {
    bool found = false;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> n;
    std::uint64_t bound = 0;
};

/// Euler's phi for 0..limit by linear sieve; phi[0] = 0.
std::vector<std::uint64_t> totient_table(std::uint64_t limit);

/// Exhaustive search for the solution of phi(m^2) q = phi(n^2) p (r = p/q
/// in lowest terms) with m, n <= bound, minimal under (max(m, n), m).
///
/// The max(m, n) range is split into blocks scanned by `workers` threads;
/// the answer is the global minimum regardless of the worker count.
/// Throws std::invalid_argument for bound outside [1, max_oracle_bound].
SearchResult brute_force_minimal(const FactoredRational& r, std::uint64_t bound,
                                 unsigned workers = 1);

/// First pair m < n <= limit with phi(m^2) = phi(n^2), scanning n upward and
/// evaluating each value through factor and totient_of_square.
std::optional<std::pair<std::uint64_t, std::uint64_t>> injectivity_scan(std::uint64_t limit);

/// [phi(1^2), ..., phi(limit^2)] from a linear sieve.
std::vector<std::uint64_t> phi_square_sequence(std::uint64_t limit);

}  // namespace phisq
