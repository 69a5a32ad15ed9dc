#include "qsl2/qscalar.hpp"

#include <algorithm>
#include <map>

#include "dense_poly.hpp"

namespace qsl2 {

bool operator==(const SqrtTerm& a, const SqrtTerm& b) {
  return a.coeff == b.coeff && a.kernel == b.kernel;
}

QScalar::QScalar(const QRatFunc& r) {
  if (!r.is_zero()) terms_.push_back(SqrtTerm{r, LaurentPoly(Rat(1))});
}

bool QScalar::is_rational() const {
  for (const auto& t : terms_)
    if (!t.kernel.is_one()) return false;
  return true;
}

QRatFunc QScalar::as_ratfunc() const {
  if (terms_.empty()) return QRatFunc();
  if (terms_.size() == 1 && terms_[0].kernel.is_one()) return terms_[0].coeff;
  throw domain_error("QScalar is not a rational function");
}

void QScalar::append_term(std::vector<SqrtTerm>& acc, const SqrtTerm& t) {
  if (t.coeff.is_zero()) return;
  auto it = std::lower_bound(acc.begin(), acc.end(), t, [](const SqrtTerm& a, const SqrtTerm& b) {
    return LaurentPoly::cmp(a.kernel, b.kernel) < 0;
  });
  if (it != acc.end() && it->kernel == t.kernel) {
    it->coeff += t.coeff;
    if (it->coeff.is_zero()) acc.erase(it);
  } else {
    acc.insert(it, t);
  }
}

QScalar QScalar::from_terms(std::vector<SqrtTerm> terms) {
  QScalar out;
  for (const auto& t : terms) append_term(out.terms_, t);
  return out;
}

QScalar QScalar::operator-() const {
  QScalar out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  QScalar out = a;
  for (const auto& t : b.terms_) QScalar::append_term(out.terms_, t);
  return out;
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      QRatFunc c = ta.coeff * tb.coeff;
      if (ta.kernel == tb.kernel) {
        QScalar::append_term(out.terms_, SqrtTerm{c * QRatFunc(ta.kernel), LaurentPoly(Rat(1))});
      } else if (ta.kernel.is_one()) {
        QScalar::append_term(out.terms_, SqrtTerm{c, tb.kernel});
      } else if (tb.kernel.is_one()) {
        QScalar::append_term(out.terms_, SqrtTerm{c, ta.kernel});
      } else {
        auto [extra, kernel] = extract_sqrt(ta.kernel * tb.kernel);
        QScalar::append_term(out.terms_, SqrtTerm{c * extra, kernel});
      }
    }
  }
  return out;
}

QScalar operator*(const QRatFunc& c, const QScalar& s) {
  if (c.is_zero()) return QScalar();
  std::vector<SqrtTerm> terms;
  for (const auto& t : s.terms_) terms.push_back(SqrtTerm{c * t.coeff, t.kernel});
  return QScalar::from_terms(std::move(terms));
}

QScalar QScalar::pow(unsigned long e) const {
  QScalar acc(Rat(1));
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

QScalar QScalar::invert_single() const {
  if (terms_.size() != 1)
    throw domain_error("reciprocal of a QScalar with several square classes");
  const SqrtTerm& t = terms_[0];
  QRatFunc c = t.coeff * QRatFunc(t.kernel);
  QScalar out;
  out.terms_.push_back(SqrtTerm{c.inverse(), t.kernel});
  return out;
}

std::pair<QRatFunc, LaurentPoly> extract_sqrt(const LaurentPoly& p) {
  if (p.is_zero()) throw domain_error("square root of the zero polynomial");
  if (sgn(p.trailing_coeff()) < 0)
    throw domain_error("square root of a value negative near q = 0");
  long s = p.ord_t();
  detail::Dense p0 = detail::dense_from_laurent_shifted(p);
  detail::Dense pp = detail::primitivize(p0);
  // p0 = CU * pp with CU a rational constant
  Rat cu = p0.front() / pp.front();

  detail::Dense sq{Rat(1)};
  detail::Dense rad{Rat(1)};
  if (detail::deg(pp) > 0) {
    auto factors = detail::yun_squarefree(pp);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      unsigned long mult = static_cast<unsigned long>(i) + 1;
      for (unsigned long k = 0; k < mult / 2; ++k) sq = detail::mul(sq, factors[i]);
      if (mult % 2) rad = detail::mul(rad, factors[i]);
    }
    // fold the constant lost to primitivization of the factors back in
    detail::Dense recon = detail::mul(detail::mul(sq, sq), rad);
    detail::Dense u = detail::divexact(pp, recon);
    if (detail::deg(u) != 0) throw error("internal: square-free reconstruction failed");
    cu *= u.front();
  }
  if (sgn(rad.front()) < 0) {
    for (auto& c : rad) c = -c;
    cu = -cu;
  }
  if (sgn(sq.front()) < 0)
    for (auto& c : sq) c = -c;
  if (sgn(cu) <= 0) throw error("internal: sqrt extraction produced a negative constant");

  SqfreeSplit split = squarefree_split(cu);
  long eps = ((s % 2) + 2) % 2;
  long half = (s - eps) / 2;

  QRatFunc coeff(split.root * detail::laurent_from_dense(sq, half));
  LaurentPoly kernel = Rat(split.radicand) * detail::laurent_from_dense(rad, eps);
  return {coeff, kernel};
}

QScalar sqrt_of(const QRatFunc& r) {
  if (r.is_zero()) return QScalar();
  auto [coeff, kernel] = extract_sqrt(r.num() * r.den());
  QRatFunc full = coeff / QRatFunc(r.den());
  return QScalar::from_terms({SqrtTerm{full, kernel}});
}

// ---- leading behavior via exact Puiseux expansion -------------------------

namespace {

// truncated power series over Q, coefficient i belongs to t^i
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n, Rat(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inv(const detail::Dense& d, std::size_t n) {
  Series out(n, Rat(0));
  out[0] = Rat(1) / d[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rat acc(0);
    for (std::size_t j = 1; j <= i && j < d.size(); ++j) acc += d[j] * out[i - j];
    out[i] = -acc / d[0];
  }
  return out;
}

// sqrt of a series with w[0] == 1
Series series_sqrt(const Series& w, std::size_t n) {
  Series out(n, Rat(0));
  out[0] = Rat(1);
  for (std::size_t i = 1; i < n; ++i) {
    Rat acc = i < w.size() ? w[i] : Rat(0);
    for (std::size_t j = 1; j < i; ++j) acc -= out[j] * out[i - j];
    out[i] = acc / 2;
  }
  return out;
}

struct TermExpansion {
  Int square_class;   // square-free positive integer v with term ~ series * sqrt(v)
  long base_quarter;  // exponent offset in quarter powers of q
  detail::Dense n0, d0, k0norm;  // k0norm has constant term 1
  Rat prefactor;                 // root part of the kernel's trailing coefficient
};

TermExpansion prepare(const SqrtTerm& t) {
  TermExpansion ex;
  const LaurentPoly& n = t.coeff.num();
  const LaurentPoly& d = t.coeff.den();
  const LaurentPoly& k = t.kernel;
  long on = n.ord_t(), od = d.ord_t(), ok = k.ord_t();
  ex.base_quarter = 2 * (on - od) + ok;
  ex.n0 = detail::dense_from_laurent_shifted(n);
  ex.d0 = detail::dense_from_laurent_shifted(d);
  detail::Dense k0 = detail::dense_from_laurent_shifted(k);
  Rat kappa = k0.front();
  if (sgn(kappa) <= 0) throw domain_error("kernel negative near q = 0");
  SqfreeSplit split = squarefree_split(kappa);
  ex.square_class = split.radicand;
  ex.prefactor = split.root;
  ex.k0norm.resize(k0.size());
  for (std::size_t i = 0; i < k0.size(); ++i) ex.k0norm[i] = k0[i] / kappa;
  return ex;
}

Series expand(const TermExpansion& ex, std::size_t n) {
  Series s(ex.n0.begin(), ex.n0.end());
  s.resize(std::max<std::size_t>(n, s.size()), Rat(0));
  Series acc = series_mul(s, series_inv(ex.d0, n), n);
  acc = series_mul(acc, series_sqrt(Series(ex.k0norm.begin(), ex.k0norm.end()), n), n);
  for (auto& c : acc) c *= ex.prefactor;
  return acc;
}

}  // namespace

LeadingBehavior leading(const QScalar& s) {
  LeadingBehavior out;
  if (s.is_zero()) return out;

  std::vector<TermExpansion> terms;
  long min_base = 0;
  bool first = true;
  for (const auto& t : s.terms()) {
    terms.push_back(prepare(t));
    if (first || terms.back().base_quarter < min_base) min_base = terms.back().base_quarter;
    first = false;
  }

  for (std::size_t order = 16; order <= 8192; order *= 2) {
    // class -> (quarter exponent -> coefficient), complete up to the window end
    std::map<Int, std::map<long, Rat>> classes;
    long window_end = min_base + 2 * (static_cast<long>(order) - 1);
    for (const auto& ex : terms) {
      Series ser = expand(ex, order);
      auto& target = classes[ex.square_class];
      for (std::size_t i = 0; i < ser.size(); ++i) {
        long quarter = ex.base_quarter + 2 * static_cast<long>(i);
        if (quarter > window_end) break;
        if (sgn(ser[i]) == 0) continue;
        auto [it, inserted] = target.emplace(quarter, ser[i]);
        if (!inserted) {
          it->second += ser[i];
          if (sgn(it->second) == 0) target.erase(it);
        }
      }
    }
    long best = window_end + 1;
    const Int* best_class = nullptr;
    Rat best_coeff;
    bool tie = false;
    for (const auto& [cls, coeffs] : classes) {
      if (coeffs.empty()) continue;
      long q = coeffs.begin()->first;
      if (q < best) {
        best = q;
        best_class = &cls;
        best_coeff = coeffs.begin()->second;
        tie = false;
      } else if (q == best) {
        tie = true;
      }
    }
    if (best_class == nullptr) continue;  // cancellation beyond window; expand further
    if (tie)
      throw domain_error("leading behavior spans several square classes");
    if (best % 2 != 0)
      throw domain_error("leading exponent is not a half-integer");
    out.zero = false;
    out.exponent = HalfInt::from_twice(best / 2);
    out.sign = sgn(best_coeff);
    out.magnitude_squared = best_coeff * best_coeff * Rat(*best_class);
    return out;
  }
  throw error("internal: leading-order cancellation exceeded the expansion bound");
}

LimitQ0 limit_q0(const QScalar& s) {
  LimitQ0 out;
  LeadingBehavior lb = leading(s);
  if (lb.zero || lb.exponent.twice() > 0) {
    out.kind = LimitQ0::Kind::zero;
    return out;
  }
  if (lb.exponent.twice() == 0) {
    out.kind = LimitQ0::Kind::finite;
    out.sign = lb.sign;
    out.magnitude_squared = lb.magnitude_squared;
    return out;
  }
  out.kind = LimitQ0::Kind::diverges;
  return out;
}

bool limit_is_pm_one(const LimitQ0& l, int sign) {
  return l.kind == LimitQ0::Kind::finite && l.sign == sign && l.magnitude_squared == 1;
}

}  // namespace qsl2
