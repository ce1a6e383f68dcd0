#include "nilhyp/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <Eigen/Eigenvalues>

#include <limits>
#include <type_traits>

namespace nilhyp {

namespace {

using Float50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

template <typename Real>
Real to_real(const Rational& r) {
  if constexpr (std::is_same_v<Real, double>) {
    return r.convert_to<double>();
  } else {
    return Real(boost::multiprecision::numerator(r).str()) / Real(boost::multiprecision::denominator(r).str());
  }
}

template <typename Real>
Real gap_in(const MatrixQ& m) {
  Matrix<Real> a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a(i, j) = to_real<Real>(m(i, j));
  Eigen::EigenSolver<Matrix<Real>> solver(a, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
  Real best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    using std::abs;
    const Real g = abs(Real(abs(solver.eigenvalues()(i))) - Real(1));
    if (g < best) best = g;
  }
  return best;
}

}  // namespace

double unit_modulus_gap(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("unit_modulus_gap: matrix is not square");
  if (m.rows() == 0) return std::numeric_limits<double>::infinity();
  const double coarse = gap_in<double>(m);
  if (coarse >= 1e-3) return coarse;
  return gap_in<Float50>(m).convert_to<double>();
}

MatrixQ companion_matrix(const PolynomialQ& p) {
  if (p.degree() < 1) throw std::invalid_argument("companion_matrix: degree must be at least 1");
  const PolynomialQ monic = p * Rational(1 / p.leading());
  const Index n = p.degree();
  MatrixQ c = MatrixQ::Zero(n, n);
  for (Index i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (Index i = 0; i < n; ++i) c(i, n - 1) = -monic.coefficient(static_cast<int>(i));
  return c;
}

double unit_modulus_gap(const PolynomialQ& p) { return unit_modulus_gap(companion_matrix(p)); }

}  // namespace nilhyp
