#include "phisq/factored.hpp"

#include "phisq/errors.hpp"
#include "phisq/primality.hpp"

#include <limits>
#include <stdexcept>

namespace phisq {

namespace detail {

Exponent checked_add(Exponent a, Exponent b) {
    Exponent sum;
    if (__builtin_add_overflow(a, b, &sum) || sum == std::numeric_limits<Exponent>::min())
        throw ExponentOverflow("exponent overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return sum;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent product;
    if (__builtin_mul_overflow(a, b, &product) ||
        product == std::numeric_limits<Exponent>::min())
        throw ExponentOverflow("exponent overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return product;
}

}  // namespace detail

namespace {

void check_prime_key(const Natural& p) {
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("factor key " + p.str() + " is not prime");
}

std::optional<Natural> last_key(const FactorMap& m) {
    if (m.empty()) return std::nullopt;
    return m.rbegin()->first;
}

Exponent lookup(const FactorMap& m, const Natural& p) {
    auto it = m.find(p);
    return it == m.end() ? 0 : it->second;
}

// Adds b's exponents into a, dropping entries that cancel to zero.
void accumulate(FactorMap& a, const FactorMap& b) {
    for (const auto& [p, e] : b) {
        auto [it, inserted] = a.try_emplace(p, e);
        if (inserted) continue;
        it->second = detail::checked_add(it->second, e);
        if (it->second == 0) a.erase(it);
    }
}

std::string render(const FactorMap& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : m) {
        if (!out.empty()) out += " * ";
        out += p.str();
        out += '^';
        out += std::to_string(e);
    }
    return out;
}

}  // namespace

FactoredInteger::FactoredInteger(FactorMap factors) : factors_(std::move(factors)) {
    for (const auto& [p, e] : factors_) {
        check_prime_key(p);
        if (e < 1) throw std::invalid_argument("exponent of " + p.str() + " must be >= 1");
    }
}

FactoredInteger FactoredInteger::prime_power(const Natural& p, Exponent e) {
    return FactoredInteger(FactorMap{{p, e}});
}

Exponent FactoredInteger::exponent_of(const Natural& p) const { return lookup(factors_, p); }

std::optional<Natural> FactoredInteger::largest_prime() const { return last_key(factors_); }

FactoredRational::FactoredRational(FactorMap factors) : factors_(std::move(factors)) {
    for (const auto& [p, e] : factors_) {
        check_prime_key(p);
        if (e == 0) throw std::invalid_argument("exponent of " + p.str() + " must be nonzero");
        if (e == std::numeric_limits<Exponent>::min())
            throw ExponentOverflow("exponent of " + p.str() + " out of range");
    }
}

Exponent FactoredRational::exponent_of(const Natural& p) const { return lookup(factors_, p); }

std::optional<Natural> FactoredRational::largest_prime() const { return last_key(factors_); }

FactoredInteger FactoredRational::numerator() const {
    FactorMap out;
    for (const auto& [p, e] : factors_)
        if (e > 0) out.emplace_hint(out.end(), p, e);
    return FactoredInteger(detail::trusted, std::move(out));
}

FactoredInteger FactoredRational::denominator() const {
    FactorMap out;
    for (const auto& [p, e] : factors_)
        if (e < 0) out.emplace_hint(out.end(), p, -e);
    return FactoredInteger(detail::trusted, std::move(out));
}

FactoredRational as_rational(const FactoredInteger& f) {
    return FactoredRational(detail::trusted, f.factors());
}

Natural expand(const FactoredInteger& f) {
    Natural result = 1;
    for (const auto& [p, e] : f.factors()) {
        if (e > static_cast<Exponent>(std::numeric_limits<unsigned>::max()))
            throw UnsupportedScale("cannot expand " + p.str() + "^" + std::to_string(e));
        result *= boost::multiprecision::pow(p, static_cast<unsigned>(e));
    }
    return result;
}

FactoredInteger mul(const FactoredInteger& a, const FactoredInteger& b) {
    FactorMap out = a.factors();
    accumulate(out, b.factors());
    return FactoredInteger(detail::trusted, std::move(out));
}

FactoredRational mul(const FactoredRational& a, const FactoredRational& b) {
    FactorMap out = a.factors();
    accumulate(out, b.factors());
    return FactoredRational(detail::trusted, std::move(out));
}

FactoredRational inverse(const FactoredRational& a) {
    FactorMap out = a.factors();
    for (auto& [p, e] : out) e = -e;
    return FactoredRational(detail::trusted, std::move(out));
}

FactoredRational divide(const FactoredInteger& a, const FactoredInteger& b) {
    return mul(as_rational(a), inverse(as_rational(b)));
}

std::string to_string(const FactoredInteger& f) { return render(f.factors()); }
std::string to_string(const FactoredRational& r) { return render(r.factors()); }

}  // namespace phisq
