#pragma once

// Exact scalar and dense matrix substrate.
//
// Every algebraic object in the library lives over the rationals. Scalars are
// GMP integers/rationals wrapped by Boost.Multiprecision with expression
// templates disabled (Eigen does not cope with them), so Eigen's dense
// containers and products work unchanged. Elimination routines are templates
// over the scalar type and assume an exact field: no pivot is ever chosen by
// magnitude, only by being nonzero.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilhyp {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

/// Raised when a request would exceed the desk-scale size envelope.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Scalars

/// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& r);
/// Accepts "p", "p/q", optional sign, surrounding whitespace. Throws
/// std::invalid_argument on anything else (decimals included).
Rational parse_rational(std::string_view text);

/// num/den with the sign moved onto the numerator. The two-argument GMP
/// constructor reads a negative denominator as unsigned.
Rational ratio(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_integral(Rational(m(i, j)))) return false;
  return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline MatrixQ identity(Index n) { return MatrixQ::Identity(n, n); }

/// Block-diagonal assembly (blocks need not be square).
MatrixQ block_diagonal(const std::vector<MatrixQ>& blocks);

// ---------------------------------------------------------------------------
// Elimination

/// Reduced row-echelon form of a matrix together with the row operations that
/// produced it: `reduced = transform * source`, rows of `reduced` span the row
/// space of `source`, and `pivots[r]` is the leading column of row r.
template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  Matrix<Scalar> transform;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& source) {
  using Scalar = typename Derived::Scalar;
  const Index rows = source.rows();
  const Index cols = source.cols();
  Matrix<Scalar> work = source;
  Matrix<Scalar> ops = Matrix<Scalar>::Identity(rows, rows);
  std::vector<Index> pivots;

  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && work(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      work.row(p).swap(work.row(r));
      ops.row(p).swap(ops.row(r));
    }
    const Scalar inv = Scalar(1) / work(r, c);
    work.row(r) *= inv;
    ops.row(r) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || work(i, c) == 0) continue;
      const Scalar f = work(i, c);
      work.row(i) -= f * work.row(r);
      ops.row(i) -= f * ops.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {work.topRows(r), ops.topRows(r), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Fraction-free (Bareiss) determinant. Valid over any integral domain whose
/// exact division is `/`.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign(1);
  Scalar prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Exact inverse via Gauss-Jordan; throws std::domain_error when singular.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  auto ech = row_echelon(m);
  if (ech.rank() != m.rows()) throw std::domain_error("inverse: matrix is singular");
  return Matrix<Scalar>(ech.transform);
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols() || !is_integral(m)) return false;
  const auto d = determinant(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Subspaces

/// A subspace of Q^n held as its reduced row-echelon basis. Rows can be
/// inserted incrementally; membership and coordinates are exact.
class Subspace {
 public:
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}
  /// Row span of `rows`.
  static Subspace span(const MatrixQ& rows);

  Index ambient() const { return ambient_; }
  Index dimension() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its component along the pivot columns: zero iff v is contained.
  VectorQ reduce(const VectorQ& v) const;
  bool contains(const VectorQ& v) const;
  /// Coefficients of v on basis() rows, or nullopt when v is not contained.
  std::optional<VectorQ> coordinates(const VectorQ& v) const;
  /// Returns true when v enlarged the space.
  bool insert(const VectorQ& v);

  bool contains(const Subspace& other) const;

 private:
  void subtract_row(VectorQ& v, const Rational& f, Index r) const;

  Index ambient_;
  MatrixQ basis_;
  std::vector<Index> pivots_;
};

/// Coefficients c with c^T * rows == v, for linearly independent rows.
/// Returns nullopt when v is outside the row span.
std::optional<VectorQ> solve_in_row_span(const MatrixQ& rows, const VectorQ& v);

}  // namespace nilhyp
