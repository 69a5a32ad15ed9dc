#pragma once

#include "qsl2/laurent.hpp"

namespace qsl2 {

/// Rational function of q (Laurent numerator, ordinary-polynomial
/// denominator). Canonical form: gcd(num, den) = 1 after clearing powers of
/// q, den has a nonzero constant term normalized to +1, and the cleared
/// power of q lives in the numerator. Equality is plain structural
/// comparison.
class QRatFunc {
public:
  QRatFunc() = default;  // zero
  QRatFunc(const Rat& c) : num_(c) {}
  QRatFunc(long c) : num_(Rat(c)) {}
  QRatFunc(const LaurentPoly& num) : num_(num) {}
  QRatFunc(const LaurentPoly& num, const LaurentPoly& den) { assign(num, den); }

  static QRatFunc q_power(HalfInt h) { return QRatFunc(LaurentPoly::q_power(h)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QRatFunc operator-() const;
  friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b);
  friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b);
  friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b);
  friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b);
  QRatFunc& operator+=(const QRatFunc& o) { return *this = *this + o; }
  QRatFunc& operator-=(const QRatFunc& o) { return *this = *this - o; }
  QRatFunc& operator*=(const QRatFunc& o) { return *this = *this * o; }
  QRatFunc& operator/=(const QRatFunc& o) { return *this = *this / o; }

  QRatFunc inverse() const;
  QRatFunc pow(long e) const;

  friend bool operator==(const QRatFunc& a, const QRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRatFunc& a, const QRatFunc& b) { return !(a == b); }

  /// order at q -> 0 in t-units (t = q^(1/2)); throws on zero
  long ord_t() const { return num_.ord_t() - den_.ord_t(); }
  HalfInt ord_q() const { return HalfInt::from_twice(ord_t()); }
  /// coefficient of the lowest-order term of the q -> 0 expansion
  Rat leading_rat() const { return num_.trailing_coeff(); }

  /// exact value at t0 = sqrt(q0); throws if the denominator vanishes
  Rat eval_t(const Rat& t0) const;

private:
  void assign(const LaurentPoly& num, const LaurentPoly& den);

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(Rat(1));
};

/// the q-number [x] = (q^x - q^-x)/(q - q^-1); defined for half-integer x
QRatFunc qnum(HalfInt x);
inline QRatFunc qnum(long x) { return qnum(HalfInt(x)); }

/// [n]! = [1][2]...[n]; n >= 0
QRatFunc qfact(long n);

}  // namespace qsl2
