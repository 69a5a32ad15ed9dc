#include "dense_poly.hpp"

namespace qsl2::detail {

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool is_zero(const Dense& p) { return p.empty(); }

long deg(const Dense& p) { return static_cast<long>(p.size()) - 1; }

Dense dense_from_laurent_shifted(const LaurentPoly& p) {
  Dense out;
  if (p.is_zero()) return out;
  long o = p.ord_t();
  out.assign(static_cast<std::size_t>(p.deg_t() - o + 1), Rat(0));
  for (const auto& [e, c] : p.terms_t()) out[static_cast<std::size_t>(e - o)] = c;
  return out;
}

LaurentPoly laurent_from_dense(const Dense& p, long shift_t) {
  LaurentPoly out;
  for (std::size_t i = 0; i < p.size(); ++i)
    out.add_term_t(static_cast<long>(i) + shift_t, p[i]);
  return out;
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Dense sub(const Dense& a, const Dense& b) {
  Dense out = a;
  if (out.size() < b.size()) out.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b) {
  if (b.empty()) throw domain_error("polynomial division by zero");
  Dense r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Dense q(r.size() - b.size() + 1, Rat(0));
  const Rat lead = b.back();
  for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
    if (sgn(r[static_cast<std::size_t>(i)]) == 0) continue;
    Rat f = r[static_cast<std::size_t>(i)] / lead;
    long shift = i - (static_cast<long>(b.size()) - 1);
    q[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[static_cast<std::size_t>(shift) + j] -= f * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

Dense divexact(const Dense& a, const Dense& b) {
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) throw domain_error("inexact polynomial division");
  return q;
}

Dense derivative(const Dense& p) {
  Dense out;
  if (p.size() <= 1) return out;
  out.resize(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = Rat(static_cast<long>(i)) * p[i];
  trim(out);
  return out;
}

static Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Dense gcd(const Dense& a, const Dense& b) {
  Dense x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    auto [q, r] = divmod(x, y);
    (void)q;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(std::move(x));
}

Dense primitivize(const Dense& p) {
  Dense out = p;
  trim(out);
  if (out.empty()) return out;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& c : out) {
    Int n = c.get_num();
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    Int d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rat scale = make_rat(den_lcm, num_gcd);
  if (sgn(out.back()) < 0) scale = -scale;
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<Dense> yun_squarefree(const Dense& p) {
  std::vector<Dense> factors;
  Dense f = p;
  trim(f);
  if (f.empty()) throw domain_error("square-free decomposition of zero");
  if (deg(f) == 0) return factors;
  Dense fp = derivative(f);
  Dense g = gcd(f, fp);
  if (deg(g) == 0) {
    factors.push_back(primitivize(f));
    return factors;
  }
  Dense w = divexact(f, g);
  Dense y = divexact(fp, g);
  while (deg(w) > 0) {
    Dense z = sub(y, derivative(w));
    Dense a = gcd(w, z);
    factors.push_back(primitivize(a));
    w = divexact(w, a);
    y = is_zero(z) ? Dense{} : divexact(z, a);
  }
  return factors;
}

}  // namespace qsl2::detail
