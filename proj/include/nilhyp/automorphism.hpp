#pragma once

#include "nilhyp/polynomial.hpp"
#include "nilhyp/quotient.hpp"

namespace nilhyp {

/// Linear automorphism of a (graded or filtered) nilpotent algebra induced by
/// an invertible q x q matrix acting on the generators. Matrices act on
/// column coordinate vectors.
struct GradedAutomorphism {
  std::shared_ptr<const NilpotentAlgebra> algebra;
  MatrixQ base;
  /// Matrix on the whole algebra. Block diagonal by grade for graded
  /// algebras, block triangular for filtered quotients.
  MatrixQ full;

  /// Diagonal block of `full` on grade m (1-based).
  MatrixQ grade_matrix(int m) const;
  int grade_count() const { return algebra->top_grade(); }
};

/// Unique bracket-compatible extension of `base` to the free algebra: the
/// grade-m block is the m-fold tensor power of base restricted to the Lie
/// elements of length m. Throws std::domain_error for singular base.
GradedAutomorphism extend(const FreeNilpotentAlgebra& algebra, const MatrixQ& base);

/// Index of the first ideal basis row whose image leaves the ideal.
std::optional<Index> ideal_violation(const GradedAutomorphism& automorphism, const Ideal& ideal);
/// Membership in the stabilizer of the ideal: extend(base) maps the ideal into itself.
bool preserves_ideal(const FreeNilpotentAlgebra& algebra, const Ideal& ideal, const MatrixQ& base);

/// Induced map on a quotient. Throws std::invalid_argument naming the first
/// ideal row that is not preserved.
GradedAutomorphism induce(const QuotientAlgebra& quotient, const GradedAutomorphism& automorphism);

/// Characteristic data of an automorphism, grade by grade.
struct EigenvalueData {
  /// char poly of the grade-m diagonal block, index m - 1
  std::vector<PolynomialQ> grade_char_polys;
  /// grade-m block has an eigenvalue of modulus 1
  std::vector<bool> unit_root_in_grade;
  /// Symbolic eigenvalues: for each basis element, the multiset of base
  /// eigenvalue indices whose product it carries for a diagonalizable base.
  std::vector<std::vector<std::vector<int>>> product_indices;
  /// No eigenvalue of modulus 1 anywhere on the algebra.
  bool hyperbolic = false;
};

EigenvalueData eigen_data(const GradedAutomorphism& automorphism);

/// Lattice Z w_1 + ... + Z w_d; the rows of `basis` are the w_i in ambient
/// coordinates.
struct LatticeSpec {
  MatrixQ basis;

  Index ambient_dimension() const { return basis.cols(); }
  Index rank() const { return basis.rows(); }
  /// Throws std::invalid_argument when the rows are dependent.
  void validate() const;
};

/// Matrix of m restricted to the lattice span, in the lattice basis
/// (m w_j = sum_i R_ij w_i), or nullopt when m does not stabilize the span.
std::optional<MatrixQ> lattice_action(const MatrixQ& m, const LatticeSpec& lattice);
/// m stabilizes the span and acts there by an integral matrix of
/// determinant +-1 in the lattice basis.
bool preserves_lattice(const MatrixQ& m, const LatticeSpec& lattice);

struct ConjugatedPair {
  MatrixQ alpha;
  LatticeSpec lattice;
};

/// alpha' = g alpha g^-1, lattice' = rho_g(lattice), with rho_g the action of
/// g on the lattice's ambient space.
ConjugatedPair conjugate_certificate(const MatrixQ& alpha, const MatrixQ& g, const LatticeSpec& lattice,
                                     const MatrixQ& rho_g);

}  // namespace nilhyp
