#include "qsl2/rat.hpp"

#include <cctype>

namespace qsl2 {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (sgn(base) == 0) {
    if (e < 0) throw domain_error("0 raised to a negative power");
    return Rat(0);
  }
  Rat b = e < 0 ? Rat(1) / base : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw parse_error("bad rational: '" + s + "'");
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' || std::isdigit(static_cast<unsigned char>(c))) continue;
    throw parse_error("bad rational: '" + s + "'");
  }
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational: '" + s + "'");
  }
}

Int isqrt_floor(const Int& n) {
  if (sgn(n) < 0) throw domain_error("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SqfreeSplit squarefree_split(const Rat& x) {
  if (sgn(x) <= 0) throw domain_error("squarefree_split of non-positive rational");
  // x = n/d = (n*d)/d^2, so only the integer n*d needs factoring.
  Int n = x.get_num() * x.get_den();
  Int root = 1;
  Int rad = 1;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int mult = 0;
    while (m % p == 0) {
      m /= p;
      ++mult;
    }
    for (int k = 0; k < mult / 2; ++k) root *= p;
    if (mult % 2) rad *= p;
    if (p > 100000) break;  // remaining cofactor handled below
  }
  if (m > 1) {
    if (is_perfect_square(m)) {
      root *= isqrt_floor(m);
    } else {
      rad *= m;
    }
  }
  SqfreeSplit out;
  out.root = make_rat(root, x.get_den());
  out.radicand = rad;
  return out;
}

HalfInt HalfInt::parse(const std::string& s) {
  auto bad = [&] { return parse_error("bad half-integer: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size()) throw bad();
      return HalfInt(v);
    }
    std::size_t pos = 0;
    long num = std::stol(s.substr(0, slash), &pos);
    if (pos != slash) throw bad();
    std::string denpart = s.substr(slash + 1);
    if (denpart != "2") throw bad();
    if (num % 2 == 0) throw bad();  // not lowest terms
    return HalfInt::from_twice(num);
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

}  // namespace qsl2
