#pragma once

#include "nilhyp/polynomial.hpp"

#include <vector>

namespace nilhyp {

/// Gcd of the integer numerators after clearing denominators (always > 0 for
/// nonzero p).
Rational content(const PolynomialQ& p);
/// p scaled to coprime integer coefficients with positive leading coefficient.
PolynomialQ primitive_part(const PolynomialQ& p);
/// True when every coefficient is an integer.
bool has_integer_coefficients(const PolynomialQ& p);

/// Primitive gcd over Q, positive leading coefficient. Throws
/// std::invalid_argument when both inputs are zero.
PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b);

/// p / gcd(p, p').
PolynomialQ square_free_part(const PolynomialQ& p);

/// x^deg(p) * p(1/x) with the zero roots of p dropped; i.e. the reversed
/// coefficient sequence with leading zeros stripped. Not normalized.
PolynomialQ reciprocal(const PolynomialQ& p);

/// Sturm chain of the square-free part of p.
std::vector<PolynomialQ> sturm_chain(const PolynomialQ& p);
/// Sign changes of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<PolynomialQ>& chain, const Rational& x);
/// Sign changes at +infinity (upper = true) or -infinity.
int sign_variations_at_infinity(const std::vector<PolynomialQ>& chain, bool upper);

/// Distinct real roots in the open interval (lo, hi).
int count_real_roots_in(const PolynomialQ& p, const Rational& lo, const Rational& hi);
/// Distinct real roots on the whole line.
int count_real_roots(const PolynomialQ& p);

/// For g with g(x) = x^{2n} g(1/x) (degree 2n), returns t of degree n with
/// g(z) = z^n t(z + 1/z). Throws std::invalid_argument when g is not
/// palindromic of even degree.
PolynomialQ inversion_transform(const PolynomialQ& g);

/// True iff p has a complex root of modulus exactly 1.
bool has_unit_circle_root(const PolynomialQ& p);

}  // namespace nilhyp
