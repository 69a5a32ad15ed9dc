#include "qsl2/laurent.hpp"

namespace qsl2 {

LaurentPoly LaurentPoly::monomial(const Rat& c, HalfInt qexp) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_[qexp.twice()] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::ord_t() const {
  if (terms_.empty()) throw domain_error("ord of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::deg_t() const {
  if (terms_.empty()) throw domain_error("deg of zero polynomial");
  return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff_t(long texp) const {
  auto it = terms_.find(texp);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::trailing_coeff() const {
  if (terms_.empty()) throw domain_error("trailing coefficient of zero polynomial");
  return terms_.begin()->second;
}

bool LaurentPoly::has_integer_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

void LaurentPoly::add_term_t(long texp, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(texp);
  if (it == terms_.end()) {
    terms_[texp] = c;
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term_t(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term_t(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term_t(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) {
  LaurentPoly out;
  if (sgn(c) == 0) return out;
  for (const auto& [e, k] : p.terms_) out.terms_[e] = c * k;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly acc(Rat(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::shift_t(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

int LaurentPoly::cmp(const LaurentPoly& a, const LaurentPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

Rat LaurentPoly::eval_t(const Rat& t0) const {
  if (sgn(t0) == 0) throw domain_error("Laurent polynomial evaluated at 0");
  Rat acc(0);
  for (const auto& [e, c] : terms_) acc += c * rat_pow(t0, e);
  return acc;
}

Rat LaurentPoly::content() const {
  if (terms_.empty()) throw domain_error("content of zero polynomial");
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    Int n = c.get_num();
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    Int d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  return make_rat(num_gcd, den_lcm);
}

}  // namespace qsl2
