#include "phisq/sampling.hpp"

#include "phisq/primality.hpp"

namespace phisq {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t k = 2; k <= limit; ++k)
        if (is_prime(k)) primes.push_back(k);
    return primes;
}

FactoredRational random_rational(std::mt19937_64& rng, std::uint64_t max_prime,
                                 Exponent max_abs_exponent) {
    std::uniform_int_distribution<Exponent> exponent(-max_abs_exponent, max_abs_exponent);
    FactorMap factors;
    for (std::uint64_t p : primes_up_to(max_prime))
        if (const Exponent e = exponent(rng); e != 0) factors.emplace(p, e);
    return FactoredRational(detail::trusted, std::move(factors));
}

}  // namespace phisq
