#pragma once

#include "nilhyp/free_algebra.hpp"

namespace nilhyp {

/// Ideal of an ambient algebra, held as its reduced row-echelon basis in
/// ambient coordinates.
struct Ideal {
  std::shared_ptr<const NilpotentAlgebra> ambient;
  Subspace span;

  const MatrixQ& basis_matrix() const { return span.basis(); }
  Index dimension() const { return span.dimension(); }
  /// Every basis row lies in a single grade.
  bool homogeneous() const;
};

/// Smallest ideal containing the generators: iterated bracketing with the
/// ambient basis until the span stops growing.
Ideal ideal_closure(std::shared_ptr<const NilpotentAlgebra> ambient, const std::vector<VectorQ>& generators);
Ideal ideal_closure(const FreeNilpotentAlgebra& ambient, const std::vector<VectorQ>& generators);

bool is_ideal(const NilpotentAlgebra& ambient, const Subspace& span);

/// N = ambient / ideal. The quotient basis is the set of ambient basis
/// vectors on the non-pivot columns of the ideal's echelon form; because
/// ambient columns are ordered by grade, this basis is adapted to the grading
/// (or, for non-homogeneous ideals, to the induced filtration).
struct QuotientAlgebra {
  std::shared_ptr<const NilpotentAlgebra> algebra;
  Ideal ideal;
  /// quotient coordinates = projection * ambient coordinates
  MatrixQ projection;
  /// ambient representatives of the quotient basis, one per column
  MatrixQ section;
};

/// Throws std::invalid_argument when the ideal meets grade 1, since the q
/// generators would then no longer be independent in the quotient.
QuotientAlgebra quotient(const FreeNilpotentAlgebra& ambient, const Ideal& ideal);
QuotientAlgebra quotient(std::shared_ptr<const NilpotentAlgebra> ambient, const Ideal& ideal);

}  // namespace nilhyp
