#pragma once

#include "nilhyp/exact.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilhyp {

/// Sparse coordinate vector, sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<Index, Rational>>;

SparseVector to_sparse(const VectorQ& v);
VectorQ to_dense(const SparseVector& v, Index dimension);

/// Brackets of basis elements. Setting (i, j) also sets (j, i) to the
/// negative, so the table is antisymmetric by construction.
class StructureTable {
 public:
  explicit StructureTable(Index dimension);

  Index dimension() const { return dim_; }
  void set(Index i, Index j, SparseVector value);
  const SparseVector& operator()(Index i, Index j) const { return entries_[static_cast<size_t>(i * dim_ + j)]; }

 private:
  Index dim_;
  std::vector<SparseVector> entries_;
};

struct BasisElement {
  std::string label;
  /// Bracket length for graded algebras; filtration degree otherwise.
  int grade = 1;
  /// Sorted generator indices (0-based) whose product is this element's
  /// eigenvalue under a diagonal base map.
  std::vector<int> weight;
};

/// Finite-dimensional nilpotent Lie algebra given by a basis ordered by
/// nondecreasing grade and an exact structure-constant table. The lower
/// central series is computed once at construction.
class NilpotentAlgebra {
 public:
  NilpotentAlgebra(std::vector<BasisElement> basis, StructureTable table, bool graded);

  Index dimension() const { return static_cast<Index>(basis_.size()); }
  const BasisElement& element(Index i) const { return basis_[static_cast<size_t>(i)]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::vector<std::string> labels() const;

  /// True when the grades are a genuine grading ([grade a, grade b] lands in
  /// grade a + b); false for filtrations inherited from non-homogeneous quotients.
  bool graded() const { return graded_; }
  int top_grade() const { return basis_.empty() ? 0 : basis_.back().grade; }
  Index grade_offset(int grade) const;
  Index grade_dimension(int grade) const;
  /// Dimensions of grades 1..top_grade().
  std::vector<Index> grade_dimensions() const;

  const StructureTable& table() const { return table_; }
  const SparseVector& structure(Index i, Index j) const { return table_(i, j); }

  VectorQ bracket(const VectorQ& x, const VectorQ& y) const;
  /// [basis element i, y]
  VectorQ bracket_basis(Index i, const VectorQ& y) const;

  /// N = N^1, N^2 = [N, N], ..., the nonzero terms of the lower central series.
  const std::vector<Subspace>& central_series() const { return central_series_; }
  /// Nilpotency step: number of nonzero central-series terms.
  int step() const { return static_cast<int>(central_series_.size()); }

 private:
  std::vector<BasisElement> basis_;
  StructureTable table_;
  bool graded_;
  std::vector<Subspace> central_series_;
};

/// Free-standing forms of the core operations.
VectorQ bracket(const NilpotentAlgebra& algebra, const VectorQ& x, const VectorQ& y);
const std::vector<Subspace>& central_series(const NilpotentAlgebra& algebra);

/// Recomputes the lower central series from the bracket table alone. Throws
/// std::invalid_argument if the series stabilizes at a nonzero term.
std::vector<Subspace> compute_central_series(const NilpotentAlgebra& algebra);

/// First ordered basis triple (i, j, l) with [x,[y,z]] + [y,[z,x]] + [z,[x,y]] != 0.
std::optional<std::array<Index, 3>> jacobi_violation(const NilpotentAlgebra& algebra);
/// First pair (i, j) with [x, y] != -[y, x] (or [x, x] != 0).
std::optional<std::array<Index, 2>> antisymmetry_violation(const NilpotentAlgebra& algebra);

}  // namespace nilhyp
