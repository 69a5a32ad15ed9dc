#include "qsl2/numeric.hpp"

namespace qsl2 {

Rat approx_sqrt(const Rat& x, long digits) {
  if (sgn(x) < 0) throw domain_error("square root of a negative number");
  if (sgn(x) == 0) return Rat(0);
  // sqrt(n/d) = sqrt(n*d)/d
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int nd = x.get_num() * x.get_den();
  Int r = isqrt_floor(nd * scale * scale);
  return make_rat(r, x.get_den() * scale);
}

std::string Numeric::decimal() const {
  Rat r = value;
  bool neg = sgn(r) < 0;
  if (neg) r = -r;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  Int scaled = (r.get_num() * scale * 2 + r.get_den()) / (r.get_den() * 2);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = (neg && (sgn(whole) != 0 || sgn(frac) != 0)) ? "-" : "";
  out += whole.get_str();
  std::string fracs = frac.get_str();
  if (fracs.size() < static_cast<std::size_t>(digits))
    fracs.insert(fracs.begin(), static_cast<std::size_t>(digits) - fracs.size(), '0');
  while (!fracs.empty() && fracs.back() == '0') fracs.pop_back();
  if (!fracs.empty()) out += "." + fracs;
  return out;
}

Numeric eval_numeric(const QScalar& s, const Rat& q0, long digits) {
  if (!(sgn(q0) > 0 && q0 < 1)) throw domain_error("eval_numeric requires 0 < q0 < 1");
  if (digits < 1) throw domain_error("eval_numeric requires at least one digit");
  // guard digits absorb the accumulated error of the approximate sqrt(q0)
  long guard = digits + 64;
  Rat t0 = approx_sqrt(q0, guard);
  Rat acc(0);
  for (const auto& term : s.terms()) {
    Rat c = term.coeff.eval_t(t0);
    Rat k = term.kernel.eval_t(t0);
    if (sgn(k) < 0) throw domain_error("kernel negative at evaluation point");
    acc += c * approx_sqrt(k, guard);
  }
  Numeric out;
  out.value = acc;
  out.digits = digits;
  return out;
}

}  // namespace qsl2
