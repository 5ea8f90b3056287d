#include "phisq/representation.hpp"

#include "phisq/factorize.hpp"
#include "phisq/totient.hpp"

#include <algorithm>

namespace phisq {
namespace {

FactoredInteger power_of(const Natural& p, Exponent e) {
    if (e == 0) return {};
    return FactoredInteger(detail::trusted, FactorMap{{p, e}});
}

FactoredRational without(const FactoredRational& r, const Natural& p) {
    FactorMap rest = r.factors();
    rest.erase(p);
    return FactoredRational(detail::trusted, std::move(rest));
}

struct Pair {
    FactoredInteger m;
    FactoredInteger n;
    std::size_t depth = 0;
};

Pair build(const FactoredRational& r) {
    if (r.is_one()) return {};

    const auto& [q, a] = *r.factors().rbegin();

    if (q == 2) {
        auto [m, n] = represent_power_of_two(a);
        return {std::move(m), std::move(n), 1};
    }

    if (a % 2 == 0) {
        // phi(m0^2 q^2b) / phi(n0^2 q^2c) = r0 q^(2(b-c)), b, c >= 1.
        Pair sub = build(without(r, q));
        const Exponent half = a / 2;
        const Exponent c = std::max<Exponent>(1, 1 - half);
        const Exponent b = c + half;
        return {mul(sub.m, power_of(q, b)), mul(sub.n, power_of(q, c)), sub.depth + 1};
    }

    if (a > 0) {
        // phi(m0^2 q^(a+1)) / phi(n0^2) = r0 q^a (q - 1).
        const FactoredInteger removed = mul(power_of(q, a), factor(Natural(q - 1)));
        Pair sub = build(mul(r, inverse(as_rational(removed))));
        return {mul(sub.m, power_of(q, a / 2 + 1)), std::move(sub.n), sub.depth + 1};
    }

    Pair flipped = build(inverse(r));
    return {std::move(flipped.n), std::move(flipped.m), flipped.depth};
}

}  // namespace

std::pair<FactoredInteger, FactoredInteger> represent_power_of_two(Exponent a) {
    const Natural two = 2;
    if (a == 0) return {};
    if (a % 2 == 0) {
        // 2^(2t) = phi(2^(2(t+b))) / phi(2^(2b)).
        const Exponent t = a / 2;
        const Exponent b = std::max<Exponent>(1, 1 - t);
        return {power_of(two, t + b), power_of(two, b)};
    }
    // a = 2t + 1.
    const Exponent t = (a - 1) / 2;
    if (a > 0) return {power_of(two, t + 1), {}};
    return {{}, power_of(two, -t)};
}

Representation represent(const FactoredRational& r) {
    Pair pair = build(r);
    return {std::move(pair.m), std::move(pair.n), r, pair.depth};
}

VerificationReport verify(const FactoredInteger& m, const FactoredInteger& n,
                          const FactoredRational& r) {
    VerificationReport report;
    const TotientValue phi_m = totient_of_square(m);
    const TotientValue phi_n = totient_of_square(n);
    report.lhs = divide(phi_m, phi_n);
    report.expected = r;
    report.holds = report.lhs == report.expected;
    if (report.holds) {
        // q divides phi(n^2) because phi(m^2) / phi(n^2) = p / q in lowest terms.
        const FactoredRational shared = divide(phi_n, r.denominator());
        report.common_value = expand(shared.numerator());
    }
    return report;
}

}  // namespace phisq
