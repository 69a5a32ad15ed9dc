#pragma once

#include "qsl2/qscalar.hpp"

namespace qsl2 {

/// Result of evaluating a QScalar at a rational point 0 < q0 < 1: an exact
/// rational within 10^-digits of the true value.
struct Numeric {
  Rat value;
  long digits = 0;

  double as_double() const { return value.get_d(); }
  /// fixed-point decimal with `digits` places, trailing zeros trimmed
  std::string decimal() const;
};

/// square root of a nonnegative rational, absolute error below 10^-digits
Rat approx_sqrt(const Rat& x, long digits);

/// Evaluates s at q = q0 (0 < q0 < 1 required). Every kernel must be
/// positive at q0, otherwise a domain_error is raised.
Numeric eval_numeric(const QScalar& s, const Rat& q0, long digits);

}  // namespace qsl2
