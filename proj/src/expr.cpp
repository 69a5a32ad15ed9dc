#include "qsl2/expr.hpp"

#include <cctype>
#include <vector>

namespace qsl2 {

namespace {

std::string q_power_int(long e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

std::string monomial_expr(const Rat& c, long qexp) {
  if (qexp == 0) return rat_str(c);
  if (c == 1) return q_power_int(qexp);
  if (c == -1) return "-" + q_power_int(qexp);
  return rat_str(c) + "*" + q_power_int(qexp);
}

void join_plus(std::string& out, const std::string& piece) {
  if (!out.empty() && !piece.empty() && piece[0] != '-') out += "+";
  out += piece;
}

}  // namespace

std::string laurent_expr(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  if (!p.has_integer_exponents())
    throw domain_error("Laurent rendering requires integer powers of q");
  std::string out;
  // descending exponent, as in "q^2+1+q^-2"
  const auto& terms = p.terms_t();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    join_plus(out, monomial_expr(it->second, it->first / 2));
  return out;
}

std::string to_expr(const QScalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& term : s.terms()) {
    std::string suffix;
    if (!term.kernel.is_one()) suffix += "*sqrt(" + laurent_expr(term.kernel) + ")";
    if (!term.coeff.den().is_one()) suffix += "/(" + laurent_expr(term.coeff.den()) + ")";
    const auto& monos = term.coeff.num().terms_t();
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
      std::string piece = rat_str(it->second);
      if (it->first != 0) piece += "*q^(" + HalfInt::from_twice(it->first).str() + ")";
      join_plus(out, piece + suffix);
    }
  }
  return out;
}

std::string to_expr(const QRatFunc& r) { return to_expr(QScalar(r)); }

// ---- parsing ---------------------------------------------------------------

namespace {

struct Lexer {
  std::string text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("scalar expression: " + msg + " at position " + std::to_string(pos) +
                      " in '" + text + "'");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  /// unsigned rational p or p/q
  Rat unsigned_rational() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected number");
    Int num(text.substr(start, pos - start));
    if (pos < text.size() && text[pos] == '/' && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      Int den(text.substr(dstart, pos - dstart));
      return make_rat(num, den);
    }
    return Rat(num);
  }

  HalfInt halfint() {
    long num = integer();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      long den = integer();
      if (den != 2 || num % 2 == 0) fail("half-integers use denominator 2 in lowest terms");
      return HalfInt::from_twice(num);
    }
    return HalfInt(num);
  }
};

/// one laurent monomial: [rational '*'] ['q' ['^' int]] | rational
LaurentPoly parse_laurent_monomial(Lexer& lx, int sign) {
  Rat coeff(sign);
  bool have_number = false;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coeff *= lx.unsigned_rational();
    have_number = true;
  }
  bool star = have_number && lx.accept('*');
  if (lx.peek() == 'q') {
    ++lx.pos;
    long e = 1;
    if (lx.accept('^')) e = lx.integer();
    return LaurentPoly::monomial(coeff, HalfInt(e));
  }
  if (star) lx.fail("expected q after '*'");
  if (!have_number) lx.fail("expected monomial");
  return LaurentPoly(coeff);
}

LaurentPoly parse_laurent(Lexer& lx) {
  LaurentPoly acc;
  int sign = 1;
  if (lx.accept('-'))
    sign = -1;
  else
    lx.accept('+');
  acc += parse_laurent_monomial(lx, sign);
  while (true) {
    if (lx.accept('+'))
      sign = 1;
    else if (lx.accept('-'))
      sign = -1;
    else
      break;
    acc += parse_laurent_monomial(lx, sign);
  }
  return acc;
}

QScalar parse_term(Lexer& lx, int sign) {
  Rat coeff(sign);
  bool have_factor = false;
  HalfInt qexp(0);
  LaurentPoly kernel(Rat(1));
  LaurentPoly den(Rat(1));
  bool have_sqrt = false;

  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coeff *= lx.unsigned_rational();
    have_factor = true;
  }
  while (true) {
    if (have_factor && !lx.accept('*')) break;
    if (lx.accept_word("sqrt")) {
      if (have_sqrt) lx.fail("repeated sqrt factor");
      lx.expect('(');
      kernel = parse_laurent(lx);
      lx.expect(')');
      have_sqrt = true;
      have_factor = true;
    } else if (lx.peek() == 'q') {
      ++lx.pos;
      if (lx.accept('^')) {
        lx.expect('(');
        qexp += lx.halfint();
        lx.expect(')');
      } else {
        qexp += HalfInt(1);
      }
      have_factor = true;
    } else if (have_factor) {
      lx.fail("expected factor after '*'");
    } else {
      lx.fail("expected term");
    }
  }
  if (lx.accept('/')) {
    lx.expect('(');
    den = parse_laurent(lx);
    lx.expect(')');
    if (den.is_zero()) lx.fail("zero denominator");
  }

  QRatFunc base(LaurentPoly::monomial(coeff, qexp), den);
  if (!have_sqrt) return QScalar(base);
  if (kernel.is_zero()) return QScalar();
  return QScalar(base) * sqrt_of(QRatFunc(kernel));
}

}  // namespace

QScalar parse_scalar(const std::string& text) {
  Lexer lx{text};
  if (lx.eof()) throw parse_error("empty scalar expression");
  QScalar acc;
  int sign = 1;
  if (lx.accept('-'))
    sign = -1;
  else
    lx.accept('+');
  acc += parse_term(lx, sign);
  while (!lx.eof()) {
    if (lx.accept('+'))
      sign = 1;
    else if (lx.accept('-'))
      sign = -1;
    else
      lx.fail("expected '+' or '-'");
    acc += parse_term(lx, sign);
  }
  return acc;
}

}  // namespace qsl2
