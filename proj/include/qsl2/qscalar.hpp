#pragma once

#include <vector>

#include "qsl2/qratfunc.hpp"

namespace qsl2 {

/// One summand coeff * sqrt(kernel). Kernels are canonical: square-free,
/// content a square-free positive integer, ordinary-polynomial part shifted
/// to a nonzero constant term with at most one leftover factor of q^(1/2),
/// trailing coefficient positive. kernel == 1 encodes a rational value.
struct SqrtTerm {
  QRatFunc coeff;
  LaurentPoly kernel = LaurentPoly(Rat(1));
};

/// Element of the computation ring: a finite sum of SqrtTerms with pairwise
/// distinct kernels, kept sorted so equality is structural.
class QScalar {
public:
  QScalar() = default;  // zero
  QScalar(const Rat& c) : QScalar(QRatFunc(c)) {}
  QScalar(long c) : QScalar(QRatFunc(Rat(c))) {}
  QScalar(const QRatFunc& r);

  static QScalar q_power(HalfInt h) { return QScalar(QRatFunc::q_power(h)); }

  const std::vector<SqrtTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  /// true when the value lies in the rational-function subring
  bool is_rational() const;
  /// the rational-function value; throws when a kernel is nontrivial
  QRatFunc as_ratfunc() const;

  QScalar operator-() const;
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  friend QScalar operator*(const QRatFunc& c, const QScalar& s);

  QScalar pow(unsigned long e) const;

  /// reciprocal of a single-term value: 1/(c sqrt(k)) = (1/(c k)) sqrt(k).
  /// Throws for sums of several square classes.
  QScalar invert_single() const;

  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  static void append_term(std::vector<SqrtTerm>& acc, const SqrtTerm& t);
  static QScalar from_terms(std::vector<SqrtTerm> terms);

private:
  std::vector<SqrtTerm> terms_;
};

bool operator==(const SqrtTerm& a, const SqrtTerm& b);
inline bool operator!=(const SqrtTerm& a, const SqrtTerm& b) { return !(a == b); }

/// writes p = c^2 * k with k a canonical square-free kernel; requires the
/// trailing coefficient of p to be positive (values must be positive as
/// q -> 0+)
std::pair<QRatFunc, LaurentPoly> extract_sqrt(const LaurentPoly& p);

/// positive square root (near q -> 0+) of a rational function that is
/// nonnegative there; sqrt_of(0) = 0
QScalar sqrt_of(const QRatFunc& r);

/// Leading behavior as q -> 0+: for nonzero s,
///   s(q) = sign * sqrt(magnitude_squared) * q^exponent * (1 + o(1)).
struct LeadingBehavior {
  bool zero = true;
  HalfInt exponent{};
  int sign = 0;
  Rat magnitude_squared = 0;
};

LeadingBehavior leading(const QScalar& s);

struct LimitQ0 {
  enum class Kind { zero, finite, diverges };
  Kind kind = Kind::zero;
  int sign = 0;              // for finite limits
  Rat magnitude_squared = 0;  // limit value = sign * sqrt(magnitude_squared)
};

LimitQ0 limit_q0(const QScalar& s);

/// exact check that a finite limit equals sign/1 (used all over the crystal
/// checks: limits in this theory are 0 or +-1)
bool limit_is_pm_one(const LimitQ0& l, int sign);

}  // namespace qsl2
