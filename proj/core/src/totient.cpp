#include "phisq/totient.hpp"

#include "phisq/factorize.hpp"

namespace phisq {
namespace {

// prod p^(power(a)) (p - 1) over the factors of f.
template <class PowerOf>
TotientValue totient_with(const FactoredInteger& f, PowerOf power) {
    FactoredInteger result;
    for (const auto& [p, a] : f.factors()) {
        const Exponent kept = power(a);
        if (kept > 0) result = mul(result, FactoredInteger(detail::trusted, FactorMap{{p, kept}}));
        result = mul(result, factor(Natural(p - 1)));
    }
    return result;
}

}  // namespace

TotientValue totient(const FactoredInteger& f) {
    return totient_with(f, [](Exponent a) { return a - 1; });
}

TotientValue totient_of_square(const FactoredInteger& f) {
    return totient_with(f, [](Exponent a) { return detail::checked_add(detail::checked_mul(2, a), -1); });
}

Natural phi_square_value(const Natural& n) { return expand(totient_of_square(factor(n))); }

}  // namespace phisq
