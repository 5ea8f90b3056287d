#include "phisq/primality.hpp"

#include "phisq/errors.hpp"

#include <array>

namespace phisq {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// True when `a` proves n composite. n odd, n - 1 = d * 2^s.
bool is_witness(std::uint64_t a, std::uint64_t n, std::uint64_t d, int s) {
    a %= n;
    if (a == 0) return false;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

bool is_witness(const Natural& a, const Natural& n, const Natural& d, unsigned s) {
    Natural x = boost::multiprecision::powm(a, d, n);
    const Natural n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n_minus_1) return false;
    }
    return true;
}

constexpr std::array<std::uint64_t, 12> small_primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Sinclair's set: no strong pseudoprime below 2^64 passes all seven.
constexpr std::array<std::uint64_t, 7> bases_u64{2, 325, 9375, 28178, 450775, 9780504, 1795265022};

constexpr std::array<unsigned, 13> bases_psi13{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

Natural deterministic_primality_bound() {
    static const Natural bound("3317044064679887385961981");
    return bound;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (auto p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 37 * 37) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases_u64)
        if (is_witness(a, n, d, s)) return false;
    return true;
}

bool is_prime(const Natural& n) {
    if (auto small = to_u64(n)) return is_prime(*small);
    if ((n & 1) == 0) return false;
    Natural d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases_psi13)
        if (is_witness(Natural(a), n, d, s)) return false;
    if (n < deterministic_primality_bound()) return true;
    throw PrimalityUnsupported("primality of " + n.str() +
                               " cannot be certified: above the deterministic Miller-Rabin bound " +
                               deterministic_primality_bound().str());
}

}  // namespace phisq
