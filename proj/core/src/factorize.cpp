#include "phisq/factorize.hpp"

#include "phisq/errors.hpp"
#include "phisq/primality.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <vector>

namespace phisq {
namespace {

__extension__ typedef unsigned __int128 u128;

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

// Primes up to at least `limit`. The shared table grows geometrically and
// never shrinks; callers keep their snapshot alive while iterating.
std::shared_ptr<const std::vector<std::uint32_t>> trial_primes(std::uint64_t limit) {
    static std::mutex mutex;
    static std::shared_ptr<const std::vector<std::uint32_t>> primes;
    static std::uint64_t covered = 0;
    std::lock_guard lock(mutex);
    if (!primes || limit > covered) {
        covered = std::max<std::uint64_t>({limit, 2 * covered, 1024});
        primes = std::make_shared<const std::vector<std::uint32_t>>(sieve_primes(covered));
    }
    return primes;
}

void add_factor(FactorMap& out, const Natural& p, Exponent e = 1) {
    auto [it, inserted] = out.try_emplace(p, e);
    if (!inserted) it->second = detail::checked_add(it->second, e);
}

std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t x0, std::uint64_t max_iter) {
    auto f = [&](std::uint64_t x) {
        return static_cast<std::uint64_t>((static_cast<u128>(x) * x + c) % n);
    };
    // Brent's cycle detection with batched gcds.
    constexpr std::uint64_t batch = 128;
    std::uint64_t y = x0, x = x0, ys = x0, q = 1, g = 1;
    std::uint64_t r = 1, iter = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                std::uint64_t diff = x > y ? x - y : y - x;
                q = static_cast<std::uint64_t>(static_cast<u128>(q) * diff % n);
            }
            g = std::gcd(q, n);
            k += batch;
        }
        iter += r;
        r *= 2;
        if (iter > max_iter) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

Natural rho_big(const Natural& n, const Natural& c, const Natural& x0, std::uint64_t max_iter) {
    auto f = [&](const Natural& x) { return (x * x + c) % n; };
    constexpr std::uint64_t batch = 128;
    Natural y = x0, x = x0, ys = x0, q = 1, g = 1;
    std::uint64_t r = 1, iter = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
                y = f(y);
                q = q * (x > y ? Natural(x - y) : Natural(y - x)) % n;
            }
            g = boost::multiprecision::gcd(q, n);
            k += batch;
        }
        iter += r;
        r *= 2;
        if (iter > max_iter) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = boost::multiprecision::gcd(x > ys ? Natural(x - ys) : Natural(ys - x), n);
        } while (g == 1);
    }
    return g == n ? Natural(0) : g;
}

// Nontrivial divisor of composite n (odd, free of primes up to the trial bound).
Natural split(const Natural& n, const FactorOptions& options, std::mt19937_64& rng) {
    if ((n & 1) == 0) return 2;
    for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
        if (auto small = to_u64(n)) {
            std::uniform_int_distribution<std::uint64_t> dist(1, *small - 1);
            if (auto d = rho_u64(*small, dist(rng), dist(rng), options.rho_iterations); d != 0)
                return d;
        } else {
            Natural c = rng(), x0 = rng();
            if (auto d = rho_big(n, c % n, x0 % n, options.rho_iterations); d != 0) return d;
        }
    }
    throw FactorizationFailure("could not split " + n.str() + " within the effort budget (" +
                               std::to_string(options.rho_attempts) + " attempts of " +
                               std::to_string(options.rho_iterations) + " iterations)");
}

void factor_cofactor(const Natural& n, const FactorOptions& options, std::mt19937_64& rng,
                     FactorMap& out) {
    if (n == 1) return;
    bool prime = false;
    try {
        prime = is_prime(n);
    } catch (const PrimalityUnsupported& e) {
        throw FactorizationFailure(e.what());
    }
    if (prime) {
        add_factor(out, n);
        return;
    }
    const Natural d = split(n, options, rng);
    factor_cofactor(d, options, rng, out);
    factor_cofactor(n / d, options, rng, out);
}

// Divides out every prime up to `bound`. Returns true when what is left of
// `rest` is 1 or a prime.
template <class Int>
bool trial_divide(Int& rest, std::uint64_t bound, FactorMap& out) {
    // Past sqrt(rest) the loop exits early, so a smaller table suffices.
    std::uint64_t needed = bound;
    if (Natural(rest) < Natural(bound) * bound)
        needed = boost::multiprecision::sqrt(Natural(rest)).template convert_to<std::uint64_t>() + 1;
    const auto primes = trial_primes(needed);
    for (std::uint32_t p : *primes) {
        if (p > bound) break;
        if (Int(p) * p > rest) return true;
        if (rest % p != 0) continue;
        Exponent e = 0;
        do {
            rest /= p;
            ++e;
        } while (rest % p == 0);
        out.emplace(p, e);
    }
    // No prime factor up to bound remains, so a composite rest exceeds bound^2.
    return Natural(rest) <= Natural(bound) * bound;
}

}  // namespace

FactoredInteger factor(std::uint64_t n) { return factor(Natural(n)); }

FactoredInteger factor(const Natural& n, const FactorOptions& options) {
    if (n == 0) throw ZeroValue("cannot factor 0");
    if (n < 0) throw std::invalid_argument("cannot factor a negative value");
    FactorMap out;
    Natural rest;
    bool rest_is_prime = false;
    if (auto small = to_u64(n)) {
        std::uint64_t r = *small;
        rest_is_prime = trial_divide(r, options.trial_division_bound, out);
        rest = r;
    } else {
        rest = n;
        rest_is_prime = trial_divide(rest, options.trial_division_bound, out);
    }
    if (rest > 1) {
        if (rest_is_prime) {
            add_factor(out, rest);
        } else {
            std::mt19937_64 rng(0x5eed);
            factor_cofactor(rest, options, rng, out);
        }
    }
    return FactoredInteger(detail::trusted, std::move(out));
}

}  // namespace phisq
