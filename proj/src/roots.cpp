#include "nilhyp/roots.hpp"

namespace nilhyp {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

PolynomialQ scale_positive(const PolynomialQ& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / content(p));
}

}  // namespace

Rational content(const PolynomialQ& p) {
  if (p.is_zero()) return Rational(0);
  Integer lcm_den(1);
  for (const auto& c : p.coefficients())
    if (c != 0) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(c)));
  Integer g(0);
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    const Integer scaled = Integer(numerator(c)) * (lcm_den / Integer(denominator(c)));
    g = boost::multiprecision::gcd(g, Integer(abs(scaled)));
  }
  return Rational(g, lcm_den);
}

PolynomialQ primitive_part(const PolynomialQ& p) {
  if (p.is_zero()) return p;
  PolynomialQ out = p * Rational(1 / content(p));
  if (out.leading() < 0) out = -out;
  return out;
}

bool has_integer_coefficients(const PolynomialQ& p) {
  for (const auto& c : p.coefficients())
    if (!is_integral(c)) return false;
  return true;
}

PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs are zero");
  PolynomialQ x = primitive_part(a);
  PolynomialQ y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    PolynomialQ r = divmod(x, y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

PolynomialQ square_free_part(const PolynomialQ& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
  if (p.degree() <= 0) return PolynomialQ::constant(Rational(1));
  return primitive_part(divmod(p, poly_gcd(p, p.derivative())).first);
}

PolynomialQ reciprocal(const PolynomialQ& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocal: zero polynomial");
  std::vector<Rational> c(p.coefficients().rbegin(), p.coefficients().rend());
  return PolynomialQ(std::move(c));
}

std::vector<PolynomialQ> sturm_chain(const PolynomialQ& p) {
  std::vector<PolynomialQ> chain;
  chain.push_back(square_free_part(p));
  if (chain[0].degree() <= 0) return chain;
  chain.push_back(scale_positive(chain[0].derivative()));
  while (true) {
    PolynomialQ r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(scale_positive(-r));
  }
  return chain;
}

int sign_variations(const std::vector<PolynomialQ>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    const int v = sign(s(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

int sign_variations_at_infinity(const std::vector<PolynomialQ>& chain, bool upper) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    int v = sign(s.leading());
    if (!upper && s.degree() % 2 == 1) v = -v;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

int count_real_roots_in(const PolynomialQ& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots_in: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_real_roots_in: empty interval");
  const auto chain = sturm_chain(p);
  // Sturm counts (lo, hi]; drop hi when it is itself a root.
  const int at_hi = chain[0](hi) == 0 ? 1 : 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi) - at_hi;
}

int count_real_roots(const PolynomialQ& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  const auto chain = sturm_chain(p);
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

PolynomialQ inversion_transform(const PolynomialQ& g) {
  const int d = g.degree();
  if (d < 0 || d % 2 != 0 || reciprocal(g) != g)
    throw std::invalid_argument("inversion_transform: polynomial is not palindromic of even degree");
  const int n = d / 2;
  // z^j + z^-j as a polynomial in w = z + 1/z
  PolynomialQ prev = PolynomialQ::constant(Rational(2));
  PolynomialQ cur = PolynomialQ::x();
  PolynomialQ t = PolynomialQ::constant(g.coefficient(n));
  for (int j = 1; j <= n; ++j) {
    t += cur * g.coefficient(n + j);
    PolynomialQ next = PolynomialQ::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return t;
}

bool has_unit_circle_root(const PolynomialQ& p) {
  if (p.is_zero()) throw std::invalid_argument("has_unit_circle_root: zero polynomial");
  if (p(Rational(1)) == 0 || p(Rational(-1)) == 0) return true;

  // A unit-circle root z has 1/z = conj(z), again a root of the real
  // polynomial p, so every such root lies in gcd(p, reciprocal(p)).
  PolynomialQ g = poly_gcd(p, reciprocal(p));
  for (int guard = 0; g.degree() > 0 && primitive_part(reciprocal(g)) != g; ++guard) {
    if (guard > g.degree()) throw std::logic_error("has_unit_circle_root: inversion closure did not stabilize");
    g = poly_gcd(g, reciprocal(g));
  }
  if (g.degree() <= 0) return false;
  // g has no roots at +-1, so it is palindromic (not anti-palindromic) of even degree.
  const PolynomialQ t = inversion_transform(g);
  return count_real_roots_in(t, Rational(-2), Rational(2)) > 0;
}

}  // namespace nilhyp
