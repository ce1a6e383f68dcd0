#pragma once

#include "nilhyp/exact.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilhyp {

/// Dense univariate polynomial, coefficients lowest degree first. The
/// representation is normalized: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient list and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(Scalar v) { return Polynomial(std::vector<Scalar>{std::move(v)}); }
  static Polynomial monomial(Scalar v, int degree) {
    std::vector<Scalar> c(static_cast<size_t>(degree) + 1, Scalar(0));
    c.back() = std::move(v);
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  Scalar coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Scalar(0);
  }
  const Scalar& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  template <typename T>
  T operator()(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const Scalar& v = p.c_[static_cast<size_t>(i)];
      if (v == 0) continue;
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      const Scalar mag = v < 0 ? Scalar(-v) : v;
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << "x";
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using PolynomialQ = Polynomial<Rational>;

/// Quotient and remainder over a field.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quo(static_cast<size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar f = rem[static_cast<size_t>(i)] / lead;
    quo[static_cast<size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b.coefficient(j);
  }
  rem.resize(static_cast<size_t>(db));
  return {Polynomial<Scalar>(std::move(quo)), Polynomial<Scalar>(std::move(rem))};
}

/// det(xI - m), exact. Similarity reduction to upper Hessenberg form followed
/// by the standard Hessenberg determinant recurrence; O(n^3) field operations.
template <typename Derived>
Polynomial<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Poly = Polynomial<Scalar>;
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> h = m;

  for (Index col = 0; col + 2 < n; ++col) {
    const Index target = col + 1;
    Index p = target;
    while (p < n && h(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != target) {
      h.row(p).swap(h.row(target));
      h.col(p).swap(h.col(target));
    }
    for (Index j = target + 1; j < n; ++j) {
      if (h(j, col) == 0) continue;
      const Scalar u = h(j, col) / h(target, col);
      h.row(j) -= u * h.row(target);
      h.col(target) += u * h.col(j);
    }
  }

  std::vector<Poly> p;
  p.reserve(static_cast<size_t>(n) + 1);
  p.push_back(Poly::constant(Scalar(1)));
  for (Index k = 0; k < n; ++k) {
    Poly next = (Poly::x() - Poly::constant(h(k, k))) * p[static_cast<size_t>(k)];
    Scalar t(1);
    for (Index i = k - 1; i >= 0; --i) {
      t *= h(i + 1, i);
      if (t == 0) break;
      next -= p[static_cast<size_t>(i)] * Scalar(t * h(i, k));
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

}  // namespace nilhyp
