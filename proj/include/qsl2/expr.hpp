#pragma once

#include <string>

#include "qsl2/qscalar.hpp"

namespace qsl2 {

/// Renders a QScalar in the textual scalar grammar:
///   scalar := term ('+' term)*
///   term   := rational ['*' 'q^(' halfint ')'] ['*' 'sqrt(' laurent ')']
///             ['/' '(' laurent ')']
///   laurent:= sum of rational 'q^' int monomials, e.g. "q^2+1+q^-2"
/// The denominator suffix extends the base grammar: normalized coefficients
/// of coupled states are rational functions whose denominators cannot be
/// folded into a finite Laurent sum. Output is canonical, so
/// parse(print(x)) == x and printing is idempotent.
std::string to_expr(const QScalar& s);
std::string to_expr(const QRatFunc& r);

/// Laurent polynomial with integer q-exponents only (kernel / denominator
/// rendering); throws domain_error on half-integer exponents.
std::string laurent_expr(const LaurentPoly& p);

QScalar parse_scalar(const std::string& text);

}  // namespace qsl2
