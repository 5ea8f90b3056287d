#include "phisq/oracle.hpp"

#include "phisq/totient.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace phisq {
namespace {

__extension__ typedef unsigned __int128 u128;

void check_bound(std::uint64_t bound, const char* what) {
    if (bound < 1 || bound > max_oracle_bound)
        throw std::invalid_argument(std::string(what) + " must be in [1, " +
                                    std::to_string(max_oracle_bound) + "]");
}

struct Hit {
    std::uint64_t m;
    std::uint64_t n;
};

// First hit under (max(m, n), m) with max(m, n) in [lo, hi).
std::optional<Hit> scan_block(const std::vector<std::uint64_t>& phi_sq, std::uint64_t p,
                              std::uint64_t q, std::uint64_t lo, std::uint64_t hi) {
    auto matches = [&](std::uint64_t m, std::uint64_t n) {
        return static_cast<u128>(phi_sq[m]) * q == static_cast<u128>(phi_sq[n]) * p;
    };
    for (std::uint64_t s = lo; s < hi; ++s) {
        for (std::uint64_t m = 1; m < s; ++m)
            if (matches(m, s)) return Hit{m, s};
        for (std::uint64_t n = 1; n <= s; ++n)
            if (matches(s, n)) return Hit{s, n};
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::uint64_t> totient_table(std::uint64_t limit) {
    std::vector<std::uint64_t> phi(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    if (limit >= 1) phi[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (std::uint64_t p : primes) {
            const std::uint64_t j = i * p;
            if (j > limit) break;
            if (i % p == 0) {
                phi[j] = phi[i] * p;
                break;
            }
            phi[j] = phi[i] * (p - 1);
        }
    }
    return phi;
}

std::vector<std::uint64_t> phi_square_sequence(std::uint64_t limit) {
    check_bound(limit, "sequence limit");
    const auto phi = totient_table(limit);
    std::vector<std::uint64_t> out;
    out.reserve(limit);
    for (std::uint64_t k = 1; k <= limit; ++k) out.push_back(k * phi[k]);
    return out;
}

SearchResult brute_force_minimal(const FactoredRational& r, std::uint64_t bound, unsigned workers) {
    check_bound(bound, "search bound");
    SearchResult result;
    result.bound = bound;

    // p | phi(m^2) <= bound^2, likewise q; anything larger has no solution here.
    const Natural ceiling = Natural(bound) * bound;
    const Natural p_big = expand(r.numerator());
    const Natural q_big = expand(r.denominator());
    if (p_big > ceiling || q_big > ceiling) return result;
    const auto p = p_big.convert_to<std::uint64_t>();
    const auto q = q_big.convert_to<std::uint64_t>();

    const auto phi = totient_table(bound);
    std::vector<std::uint64_t> phi_sq(bound + 1, 0);
    for (std::uint64_t k = 1; k <= bound; ++k) phi_sq[k] = k * phi[k];

    workers = std::max(1u, workers);
    const std::uint64_t block = std::max<std::uint64_t>(64, bound / (8 * workers) + 1);
    std::uint64_t next = 1;
    while (next <= bound) {
        // One wave: consecutive blocks, one per worker; the lowest block with a hit wins.
        std::vector<std::optional<Hit>> hits(workers);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = next + w * block;
            if (lo > bound) break;
            const std::uint64_t hi = std::min(bound + 1, lo + block);
            if (workers == 1) {
                hits[w] = scan_block(phi_sq, p, q, lo, hi);
            } else {
                threads.emplace_back([&, w, lo, hi] { hits[w] = scan_block(phi_sq, p, q, lo, hi); });
            }
        }
        for (auto& t : threads) t.join();
        for (const auto& hit : hits) {
            if (hit) {
                result.found = true;
                result.m = hit->m;
                result.n = hit->n;
                return result;
            }
        }
        next += static_cast<std::uint64_t>(workers) * block;
    }
    return result;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> injectivity_scan(std::uint64_t limit) {
    check_bound(limit, "injectivity limit");
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    seen.reserve(limit);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const auto value = phi_square_value(Natural(n)).convert_to<std::uint64_t>();
        auto [it, inserted] = seen.emplace(value, n);
        if (!inserted) return std::pair{it->second, n};
    }
    return std::nullopt;
}

}  // namespace phisq
