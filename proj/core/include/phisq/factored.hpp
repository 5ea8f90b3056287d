#pragma once

#include "phisq/natural.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace phisq {

using FactorMap = std::map<Natural, Exponent>;

namespace detail {
/// Tag for constructors that skip validation; only for maps built from
/// already-valid factored values.
struct trusted_t {
    explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

/// a + b, throwing ExponentOverflow instead of wrapping. INT64_MIN counts as overflow.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
}  // namespace detail

/// Positive integer held as prime -> positive exponent. Empty denotes 1.
class FactoredInteger {
public:
    FactoredInteger() = default;

    /// Validates every key for primality and every exponent for >= 1.
    /// Throws std::invalid_argument on violation.
    explicit FactoredInteger(FactorMap factors);
    FactoredInteger(detail::trusted_t, FactorMap factors) : factors_(std::move(factors)) {}

    /// p^e for prime p, e >= 1.
    static FactoredInteger prime_power(const Natural& p, Exponent e);

    const FactorMap& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }
    Exponent exponent_of(const Natural& p) const;
    std::optional<Natural> largest_prime() const;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    FactorMap factors_;
};

/// Positive rational held as prime -> nonzero signed exponent. Empty denotes 1.
class FactoredRational {
public:
    FactoredRational() = default;

    /// Validates primality of keys and nonzero exponents.
    explicit FactoredRational(FactorMap factors);
    FactoredRational(detail::trusted_t, FactorMap factors) : factors_(std::move(factors)) {}

    const FactorMap& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }
    Exponent exponent_of(const Natural& p) const;
    std::optional<Natural> largest_prime() const;

    /// Positive-exponent part and the negated negative-exponent part.
    FactoredInteger numerator() const;
    FactoredInteger denominator() const;

    friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

private:
    FactorMap factors_;
};

FactoredRational as_rational(const FactoredInteger& f);

Natural expand(const FactoredInteger& f);

FactoredInteger mul(const FactoredInteger& a, const FactoredInteger& b);
FactoredRational mul(const FactoredRational& a, const FactoredRational& b);
FactoredRational inverse(const FactoredRational& a);

/// Quotient a / b as a factored rational.
FactoredRational divide(const FactoredInteger& a, const FactoredInteger& b);

/// Renders in factored-literal form ("2^1 * 3^2"); the unit renders as "1".
std::string to_string(const FactoredInteger& f);
std::string to_string(const FactoredRational& r);

}  // namespace phisq
