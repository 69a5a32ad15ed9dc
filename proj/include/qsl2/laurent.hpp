#pragma once

#include <map>
#include <string>

#include "qsl2/rat.hpp"

namespace qsl2 {

/// Sparse Laurent polynomial in q with half-integer exponents permitted.
/// Internally a Laurent polynomial in t = q^(1/2): the stored exponent is
/// twice the q-exponent, exactly the HalfInt convention. No zero
/// coefficients are kept, so the representation is canonical.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rat& c) {
    if (sgn(c) != 0) terms_[0] = c;
  }
  LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

  static LaurentPoly monomial(const Rat& c, HalfInt qexp);
  /// q^qexp
  static LaurentPoly q_power(HalfInt qexp) { return monomial(Rat(1), qexp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// map keyed by t-exponent (= twice the q-exponent)
  const std::map<long, Rat>& terms_t() const { return terms_; }

  long ord_t() const;  // least t-exponent; throws on zero
  long deg_t() const;  // greatest t-exponent; throws on zero
  HalfInt ord_q() const { return HalfInt::from_twice(ord_t()); }
  HalfInt deg_q() const { return HalfInt::from_twice(deg_t()); }

  Rat coeff_t(long texp) const;
  Rat coeff_q(HalfInt qexp) const { return coeff_t(qexp.twice()); }
  /// coefficient at the least exponent; throws on zero
  Rat trailing_coeff() const;

  /// true when every exponent is an integer power of q
  bool has_integer_exponents() const;

  void add_term_t(long texp, const Rat& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

  LaurentPoly pow(unsigned long e) const;
  /// multiply by t^k
  LaurentPoly shift_t(long k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// total order used to keep QScalar term lists canonical
  static int cmp(const LaurentPoly& a, const LaurentPoly& b);

  /// exact value at t = t0 (t0 != 0)
  Rat eval_t(const Rat& t0) const;

  /// positive gcd of all coefficients (content); throws on zero
  Rat content() const;

private:
  std::map<long, Rat> terms_;
};

}  // namespace qsl2
