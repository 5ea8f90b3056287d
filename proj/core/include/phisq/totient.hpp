#pragma once

#include "phisq/factored.hpp"
#include "phisq/natural.hpp"

namespace phisq {

/// A totient value kept in fully factored form, including the factorizations of each p - 1.
using TotientValue = FactoredInteger;

/// phi(n) = prod p^(a-1) (p-1).
TotientValue totient(const FactoredInteger& f);

/// phi(n^2) = prod p^(2a-1) (p-1) = n phi(n).
TotientValue totient_of_square(const FactoredInteger& f);

/// n phi(n) for n >= 1, via factor and totient_of_square.
Natural phi_square_value(const Natural& n);

}  // namespace phisq
