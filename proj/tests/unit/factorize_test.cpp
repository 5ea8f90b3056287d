#include "doctest.h"
#include "phisq/errors.hpp"
#include "phisq/factorize.hpp"
#include "phisq/primality.hpp"
#include "support/oracles.hpp"

using namespace phisq;
using testing::integer;

namespace {

bool canonical(const FactoredInteger& f) {
    for (const auto& [p, e] : f.factors())
        if (e < 1 || !is_prime(p)) return false;
    return true;  // std::map keeps keys strictly increasing
}

}  // namespace

TEST_CASE("factor matches the worked examples") {
    CHECK(factor(39330) == integer({{2, 1}, {3, 2}, {5, 1}, {19, 1}, {23, 1}}));
    CHECK(factor(20010) == integer({{2, 1}, {3, 1}, {5, 1}, {23, 1}, {29, 1}}));
    CHECK(factor(55836) == integer({{2, 2}, {3, 3}, {11, 1}, {47, 1}}));
    CHECK(factor(14476) == integer({{2, 2}, {7, 1}, {11, 1}, {47, 1}}));
    CHECK(factor(1).is_one());
}

TEST_CASE("expand inverts factor on [1, 10^6]") {
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
        const auto f = factor(n);
        REQUIRE(expand(f) == n);
    }
}

TEST_CASE("factor output is canonical on a sample") {
    for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(canonical(factor(n)));
}

TEST_CASE("cofactors beyond trial division are split") {
    // Two primes just above 10^9, both past the trial bound.
    const auto f = factor(Natural("1000000016000000063"));
    CHECK(f == integer({{Natural(1000000007), 1}, {Natural(1000000009), 1}}));
    // 2^64 + 1 = 274177 * 67280421310721
    CHECK(factor(Natural("18446744073709551617")) ==
          integer({{274177, 1}, {Natural("67280421310721"), 1}}));
    // Past 64 bits: (2^61 - 1) * 1000003 * 1000033
    const Natural big = Natural("2305843009213693951") * 1000003 * 1000033;
    CHECK(expand(factor(big)) == big);
    CHECK(factor(big).size() == 3);
}

TEST_CASE("factor of a prime power above the trial bound") {
    const Natural p = 1000003;
    const auto f = factor(p * p * p);
    CHECK(f == integer({{p, 3}}));
}

TEST_CASE("factor errors") {
    CHECK_THROWS_AS(factor(Natural(0)), ZeroValue);
    CHECK_THROWS_AS(factor(std::uint64_t{0}), ZeroValue);

    FactorOptions tiny;
    tiny.trial_division_bound = 100;
    tiny.rho_iterations = 1;
    tiny.rho_attempts = 1;
    CHECK_THROWS_AS(factor(Natural("1000000016000000063"), tiny), FactorizationFailure);

    // A prime above the deterministic bound cannot be certified.
    CHECK_THROWS_AS(factor(Natural("618970019642690137449562111")), FactorizationFailure);
}
