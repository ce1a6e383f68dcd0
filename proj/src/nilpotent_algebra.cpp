#include "nilhyp/nilpotent_algebra.hpp"

#include <algorithm>

namespace nilhyp {

SparseVector to_sparse(const VectorQ& v) {
  SparseVector out;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out.emplace_back(i, v(i));
  return out;
}

VectorQ to_dense(const SparseVector& v, Index dimension) {
  VectorQ out = VectorQ::Zero(dimension);
  for (const auto& [i, c] : v) out(i) = c;
  return out;
}

StructureTable::StructureTable(Index dimension)
    : dim_(dimension), entries_(static_cast<size_t>(dimension * dimension)) {}

void StructureTable::set(Index i, Index j, SparseVector value) {
  if (i == j) {
    if (!value.empty()) throw std::invalid_argument("StructureTable: [x, x] must vanish");
    return;
  }
  SparseVector negated = value;
  for (auto& entry : negated) entry.second = -entry.second;
  entries_[static_cast<size_t>(i * dim_ + j)] = std::move(value);
  entries_[static_cast<size_t>(j * dim_ + i)] = std::move(negated);
}

NilpotentAlgebra::NilpotentAlgebra(std::vector<BasisElement> basis, StructureTable table, bool graded)
    : basis_(std::move(basis)), table_(std::move(table)), graded_(graded) {
  if (table_.dimension() != dimension())
    throw std::invalid_argument("NilpotentAlgebra: table dimension does not match basis");
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].grade < 1) throw std::invalid_argument("NilpotentAlgebra: grades start at 1");
    if (i > 0 && basis_[i].grade < basis_[i - 1].grade)
      throw std::invalid_argument("NilpotentAlgebra: basis must be ordered by grade");
  }
  central_series_ = compute_central_series(*this);
}

std::vector<std::string> NilpotentAlgebra::labels() const {
  std::vector<std::string> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.label);
  return out;
}

Index NilpotentAlgebra::grade_offset(int grade) const {
  Index i = 0;
  while (i < dimension() && basis_[static_cast<size_t>(i)].grade < grade) ++i;
  return i;
}

Index NilpotentAlgebra::grade_dimension(int grade) const {
  return static_cast<Index>(std::count_if(basis_.begin(), basis_.end(),
                                          [grade](const BasisElement& b) { return b.grade == grade; }));
}

std::vector<Index> NilpotentAlgebra::grade_dimensions() const {
  std::vector<Index> dims;
  for (int m = 1; m <= top_grade(); ++m) dims.push_back(grade_dimension(m));
  return dims;
}

VectorQ NilpotentAlgebra::bracket_basis(Index i, const VectorQ& y) const {
  if (y.size() != dimension()) throw std::invalid_argument("bracket: dimension mismatch");
  VectorQ out = VectorQ::Zero(dimension());
  for (Index j = 0; j < dimension(); ++j) {
    if (y(j) == 0) continue;
    for (const auto& [l, c] : table_(i, j)) out(l) += y(j) * c;
  }
  return out;
}

VectorQ NilpotentAlgebra::bracket(const VectorQ& x, const VectorQ& y) const {
  if (x.size() != dimension() || y.size() != dimension())
    throw std::invalid_argument("bracket: dimension mismatch");
  VectorQ out = VectorQ::Zero(dimension());
  for (Index i = 0; i < dimension(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dimension(); ++j) {
      if (y(j) == 0) continue;
      const Rational f = x(i) * y(j);
      for (const auto& [l, c] : table_(i, j)) out(l) += f * c;
    }
  }
  return out;
}

VectorQ bracket(const NilpotentAlgebra& algebra, const VectorQ& x, const VectorQ& y) {
  return algebra.bracket(x, y);
}

const std::vector<Subspace>& central_series(const NilpotentAlgebra& algebra) {
  return algebra.central_series();
}

std::vector<Subspace> compute_central_series(const NilpotentAlgebra& algebra) {
  const Index n = algebra.dimension();
  std::vector<Subspace> series;
  if (n == 0) return series;
  series.push_back(Subspace::span(identity(n)));
  while (true) {
    const Subspace& previous = series.back();
    Subspace next(n);
    for (Index r = 0; r < previous.dimension(); ++r) {
      const VectorQ v = previous.basis().row(r).transpose();
      const SparseVector support = to_sparse(v);
      for (Index i = 0; i < n; ++i) {
        // most brackets vanish for grading reasons; skip them before going dense
        const bool any = std::any_of(support.begin(), support.end(),
                                     [&](const auto& e) { return !algebra.structure(i, e.first).empty(); });
        if (any) next.insert(algebra.bracket_basis(i, v));
      }
    }
    if (next.dimension() == 0) break;
    if (next.dimension() == previous.dimension())
      throw std::invalid_argument("central series stabilizes at a nonzero term: algebra is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::array<Index, 3>> jacobi_violation(const NilpotentAlgebra& algebra) {
  const Index n = algebra.dimension();
  std::vector<VectorQ> pair(static_cast<size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) pair[static_cast<size_t>(i * n + j)] = to_dense(algebra.structure(i, j), n);
  auto br = [&](Index i, Index j) -> const VectorQ& { return pair[static_cast<size_t>(i * n + j)]; };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        const VectorQ sum =
            algebra.bracket_basis(i, br(j, l)) + algebra.bracket_basis(j, br(l, i)) + algebra.bracket_basis(l, br(i, j));
        if (!is_zero(sum)) return std::array<Index, 3>{i, j, l};
      }
  return std::nullopt;
}

std::optional<std::array<Index, 2>> antisymmetry_violation(const NilpotentAlgebra& algebra) {
  const Index n = algebra.dimension();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const VectorQ a = to_dense(algebra.structure(i, j), n);
      const VectorQ b = to_dense(algebra.structure(j, i), n);
      if (!is_zero(VectorQ(a + b))) return std::array<Index, 2>{i, j};
    }
  return std::nullopt;
}

}  // namespace nilhyp
