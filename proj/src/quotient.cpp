#include "nilhyp/quotient.hpp"

namespace nilhyp {

bool Ideal::homogeneous() const {
  const MatrixQ& rows = span.basis();
  for (Index r = 0; r < rows.rows(); ++r) {
    int grade = 0;
    for (Index c = 0; c < rows.cols(); ++c) {
      if (rows(r, c) == 0) continue;
      const int g = ambient->element(c).grade;
      if (grade != 0 && g != grade) return false;
      grade = g;
    }
  }
  return true;
}

Ideal ideal_closure(std::shared_ptr<const NilpotentAlgebra> ambient, const std::vector<VectorQ>& generators) {
  const Index n = ambient->dimension();
  Subspace span(n);
  std::vector<VectorQ> pending;
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("ideal_closure: generator dimension mismatch");
    if (span.insert(g)) pending.push_back(g);
  }
  // Brackets of a new element with the basis are all that can enlarge the span.
  while (!pending.empty()) {
    const VectorQ v = std::move(pending.back());
    pending.pop_back();
    for (Index i = 0; i < n; ++i) {
      VectorQ w = ambient->bracket_basis(i, v);
      if (span.insert(w)) pending.push_back(std::move(w));
    }
  }
  return Ideal{std::move(ambient), std::move(span)};
}

Ideal ideal_closure(const FreeNilpotentAlgebra& ambient, const std::vector<VectorQ>& generators) {
  return ideal_closure(ambient.algebra_ptr(), generators);
}

bool is_ideal(const NilpotentAlgebra& ambient, const Subspace& span) {
  for (Index r = 0; r < span.dimension(); ++r) {
    const VectorQ v = span.basis().row(r).transpose();
    for (Index i = 0; i < ambient.dimension(); ++i)
      if (!span.contains(ambient.bracket_basis(i, v))) return false;
  }
  return true;
}

QuotientAlgebra quotient(std::shared_ptr<const NilpotentAlgebra> ambient, const Ideal& ideal) {
  const Index n = ambient->dimension();
  if (ideal.span.ambient() != n) throw std::invalid_argument("quotient: ideal lives in a different algebra");
  if (!is_ideal(*ambient, ideal.span)) throw std::invalid_argument("quotient: subspace is not an ideal");
  for (Index p : ideal.span.pivots())
    if (ambient->element(p).grade == 1)
      throw std::invalid_argument("quotient: ideal meets grade 1 (pivot at generator " + ambient->element(p).label +
                                  "); the generators would collapse");

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : ideal.span.pivots()) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Index> kept;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) kept.push_back(c);
  const Index d = static_cast<Index>(kept.size());

  MatrixQ projection(d, n);
  for (Index c = 0; c < n; ++c) {
    const VectorQ residual = ideal.span.reduce(VectorQ::Unit(n, c));
    for (Index r = 0; r < d; ++r) projection(r, c) = residual(kept[static_cast<size_t>(r)]);
  }
  MatrixQ section = MatrixQ::Zero(n, d);
  for (Index r = 0; r < d; ++r) section(kept[static_cast<size_t>(r)], r) = 1;

  std::vector<BasisElement> basis;
  for (Index c : kept) basis.push_back(ambient->element(c));
  StructureTable table(d);
  for (Index a = 0; a < d; ++a)
    for (Index b = a + 1; b < d; ++b) {
      const VectorQ br = to_dense(ambient->structure(kept[static_cast<size_t>(a)], kept[static_cast<size_t>(b)]), n);
      table.set(a, b, to_sparse(projection * br));
    }

  const bool graded = ambient->graded() && ideal.homogeneous();
  auto algebra = std::make_shared<const NilpotentAlgebra>(std::move(basis), std::move(table), graded);
  return QuotientAlgebra{std::move(algebra), ideal, std::move(projection), std::move(section)};
}

QuotientAlgebra quotient(const FreeNilpotentAlgebra& ambient, const Ideal& ideal) {
  return quotient(ambient.algebra_ptr(), ideal);
}

}  // namespace nilhyp
