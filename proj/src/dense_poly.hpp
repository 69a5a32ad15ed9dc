#pragma once

// Internal dense univariate polynomials over Q, used for gcd and square-free
// decomposition. Coefficient index i is the coefficient of t^i.

#include <utility>
#include <vector>

#include "qsl2/laurent.hpp"

namespace qsl2::detail {

using Dense = std::vector<Rat>;

void trim(Dense& p);
bool is_zero(const Dense& p);
long deg(const Dense& p);  // -1 for zero

Dense dense_from_laurent_shifted(const LaurentPoly& p);  // divides out t^ord first
LaurentPoly laurent_from_dense(const Dense& p, long shift_t = 0);

Dense mul(const Dense& a, const Dense& b);
Dense sub(const Dense& a, const Dense& b);
/// (quotient, remainder) with deg(r) < deg(b); b nonzero
std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b);
/// exact division; throws if the remainder is nonzero
Dense divexact(const Dense& a, const Dense& b);
Dense derivative(const Dense& p);
/// monic gcd over Q (gcd(0,0) = 0)
Dense gcd(const Dense& a, const Dense& b);

/// Yun's algorithm: returns factors a_1, a_2, ... with p ~ prod a_i^i up to a
/// rational constant; each factor is primitive with integer coefficients and
/// positive leading coefficient.
std::vector<Dense> yun_squarefree(const Dense& p);

/// scales to primitive integer coefficients, positive leading coefficient
Dense primitivize(const Dense& p);

}  // namespace qsl2::detail
