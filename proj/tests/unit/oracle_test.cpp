#include "doctest.h"
#include "phisq/factorize.hpp"
#include "phisq/oracle.hpp"
#include "phisq/representation.hpp"
#include "phisq/totient.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace phisq;
using testing::rational;

namespace {

// Pair-by-pair scan in (max(m, n), m) order with values from trial division.
std::optional<std::pair<std::uint64_t, std::uint64_t>> naive_minimal(std::uint64_t p, std::uint64_t q,
                                                                     std::uint64_t bound) {
    std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> hits;
    for (std::uint64_t m = 1; m <= bound; ++m)
        for (std::uint64_t n = 1; n <= bound; ++n)
            if (m * testing::totient_by_trial(m) * q == n * testing::totient_by_trial(n) * p)
                hits.emplace(std::max(m, n), m, n);
    if (hits.empty()) return std::nullopt;
    const auto& [s, m, n] = *hits.begin();
    return std::pair{m, n};
}

}  // namespace

TEST_CASE("brute_force_minimal examples") {
    auto three = brute_force_minimal(rational({{3, 1}}), 10);
    CHECK(three.found);
    CHECK(three.m == 3u);
    CHECK(three.n == 2u);
    CHECK(three.bound == 10u);

    auto one = brute_force_minimal(FactoredRational{}, 10);
    CHECK(one.m == 1u);
    CHECK(one.n == 1u);

    auto two = brute_force_minimal(rational({{2, 1}}), 10);
    CHECK(two.m == 2u);
    CHECK(two.n == 1u);

    auto unit_bound = brute_force_minimal(FactoredRational{}, 1);
    CHECK(unit_bound.found);

    auto none = brute_force_minimal(rational({{19, 1}, {47, -1}}), 100);
    CHECK_FALSE(none.found);
    CHECK_FALSE(none.m.has_value());
}

TEST_CASE("brute_force_minimal agrees with a naive pair scan") {
    for (std::uint64_t p = 1; p <= 8; ++p) {
        for (std::uint64_t q = 1; q <= 8; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto r = divide(factor(p), factor(q));
            const auto fast = brute_force_minimal(r, 60);
            const auto slow = naive_minimal(p, q, 60);
            REQUIRE(fast.found == slow.has_value());
            if (slow) {
                REQUIRE(fast.m == slow->first);
                REQUIRE(fast.n == slow->second);
            }
        }
    }
}

TEST_CASE("brute_force_minimal is independent of the worker count") {
    for (std::uint64_t p = 1; p <= 10; ++p) {
        for (std::uint64_t q = 1; q <= 10; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto r = divide(factor(p), factor(q));
            const auto serial = brute_force_minimal(r, 300, 1);
            for (unsigned w : {2u, 3u, 8u}) {
                const auto parallel = brute_force_minimal(r, 300, w);
                REQUIRE(parallel.found == serial.found);
                REQUIRE(parallel.m == serial.m);
                REQUIRE(parallel.n == serial.n);
            }
        }
    }
}

TEST_CASE("brute_force_minimal rejects out-of-range bounds") {
    CHECK_THROWS_AS(brute_force_minimal({}, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_minimal({}, max_oracle_bound + 1), std::invalid_argument);
}

TEST_CASE("ratios out of reach of the bound short-circuit") {
    const auto r = rational({{Natural("2305843009213693951"), 1}});
    CHECK_FALSE(brute_force_minimal(r, 1000).found);
}

TEST_CASE("injectivity_scan") {
    CHECK_FALSE(injectivity_scan(2).has_value());
    CHECK_FALSE(injectivity_scan(100).has_value());
    CHECK_FALSE(injectivity_scan(10'000).has_value());
}

TEST_CASE("phi_square_sequence") {
    CHECK(phi_square_sequence(10) == std::vector<std::uint64_t>{1, 2, 6, 8, 20, 12, 42, 32, 54, 40});
    CHECK(phi_square_sequence(1) == std::vector<std::uint64_t>{1});
    CHECK(phi_square_sequence(3) == std::vector<std::uint64_t>{1, 2, 6});
}

TEST_CASE("sieve sequence equals the per-value factored path up to 10^4") {
    const auto seq = phi_square_sequence(10'000);
    REQUIRE(seq.size() == 10'000);
    for (std::uint64_t k = 1; k <= 10'000; ++k) REQUIRE(phi_square_value(k) == seq[k - 1]);
}

TEST_CASE("totient_table matches trial division") {
    const auto phi = totient_table(5000);
    CHECK(phi[0] == 0);
    for (std::uint64_t k = 1; k <= 5000; ++k) REQUIRE(phi[k] == testing::totient_by_trial(k));
}
