#pragma once

#include <gmpxx.h>

#include <string>

#include "qsl2/halfint.hpp"

namespace qsl2 {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

Rat rat_pow(const Rat& base, long e);

/// "p/q" or "p" when q == 1.
std::string rat_str(const Rat& r);

/// Accepts optional sign, "p" or "p/q". Throws parse_error on anything else.
Rat parse_rat(const std::string& s);

/// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

bool is_perfect_square(const Int& n);

/// Splits a positive rational as x = root^2 * radicand with radicand a
/// square-free positive integer (1 for perfect squares). Square factors are
/// found by trial division; primes beyond the trial bound are assumed
/// square-free, which holds for every coefficient produced by q-number
/// arithmetic at the scales this library targets.
struct SqfreeSplit {
  Rat root;
  Int radicand;
};
SqfreeSplit squarefree_split(const Rat& x);

}  // namespace qsl2
