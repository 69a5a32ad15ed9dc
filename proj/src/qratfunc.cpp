#include "qsl2/qratfunc.hpp"

#include "dense_poly.hpp"

namespace qsl2 {

void QRatFunc::assign(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(Rat(1));
    return;
  }
  long num_ord = num.ord_t();
  long den_ord = den.ord_t();
  detail::Dense n0 = detail::dense_from_laurent_shifted(num);
  detail::Dense d0 = detail::dense_from_laurent_shifted(den);
  detail::Dense g = detail::gcd(n0, d0);
  if (detail::deg(g) > 0) {
    n0 = detail::divexact(n0, g);
    d0 = detail::divexact(d0, g);
  }
  // lowest-degree coefficient of the denominator becomes +1
  Rat tc = d0.front();
  for (auto& c : d0) c /= tc;
  for (auto& c : n0) c /= tc;
  num_ = detail::laurent_from_dense(n0, num_ord - den_ord);
  den_ = detail::laurent_from_dense(d0, 0);
}

QRatFunc QRatFunc::operator-() const {
  QRatFunc out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
  return QRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) {
  return QRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
  return QRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) {
  if (b.is_zero()) throw domain_error("division by zero rational function");
  return QRatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

QRatFunc QRatFunc::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero rational function");
  return QRatFunc(den_, num_);
}

QRatFunc QRatFunc::pow(long e) const {
  if (e == 0) return QRatFunc(Rat(1));
  QRatFunc base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  QRatFunc acc(Rat(1));
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rat QRatFunc::eval_t(const Rat& t0) const {
  Rat d = den_.eval_t(t0);
  if (sgn(d) == 0) throw domain_error("rational function pole at evaluation point");
  if (num_.is_zero()) return Rat(0);
  return num_.eval_t(t0) / d;
}

QRatFunc qnum(HalfInt x) {
  if (x.twice() == 0) return QRatFunc();
  LaurentPoly num = LaurentPoly::q_power(x) - LaurentPoly::q_power(-x);
  LaurentPoly den = LaurentPoly::q_power(HalfInt(1)) - LaurentPoly::q_power(HalfInt(-1));
  return QRatFunc(num, den);
}

QRatFunc qfact(long n) {
  if (n < 0) throw domain_error("q-factorial of negative integer");
  QRatFunc acc(Rat(1));
  for (long k = 1; k <= n; ++k) acc *= qnum(k);
  return acc;
}

}  // namespace qsl2
