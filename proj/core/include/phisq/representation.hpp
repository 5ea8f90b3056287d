#pragma once

#include "phisq/factored.hpp"
#include "phisq/natural.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace phisq {

/// A pair (m, n) with phi(m^2) / phi(n^2) equal to ratio.
struct Representation {
    FactoredInteger m;
    FactoredInteger n;
    FactoredRational ratio;
    /// Number of prime-elimination steps taken. Inverting a rational whose
    /// top exponent is odd and negative is a re-dispatch, not a step.
    std::size_t depth = 0;
};

struct VerificationReport {
    bool holds = false;
    /// phi(m^2) / phi(n^2) as computed.
    FactoredRational lhs;
    FactoredRational expected;
    /// When holds and expected = p/q in lowest terms: phi(n^2) / q, so that
    /// phi(m^2) = p * common_value and phi(n^2) = q * common_value.
    std::optional<Natural> common_value;
};

/// Builds (m, n) with phi(m^2)/phi(n^2) = r and no prime of m*n above the
/// largest prime of r.
///
/// The largest prime q of r (exponent a) is eliminated per step:
///   - q = 2 is the base case, see represent_power_of_two;
///   - a even: recurse on r / q^a, then multiply m by q^b and n by q^c with
///     c = max(1, 1 - a/2), b = c + a/2;
///   - a odd, positive: recurse on r / ((q-1) q^a), then multiply m by q^((a+1)/2);
///   - a odd, negative: represent 1/r and swap the pair.
/// Throws ExponentOverflow if an intermediate exponent leaves int64 range.
Representation represent(const FactoredRational& r);

/// Base case for r = 2^a.
std::pair<FactoredInteger, FactoredInteger> represent_power_of_two(Exponent a);

VerificationReport verify(const FactoredInteger& m, const FactoredInteger& n,
                          const FactoredRational& r);

}  // namespace phisq
