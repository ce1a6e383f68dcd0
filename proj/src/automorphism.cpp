#include "nilhyp/automorphism.hpp"

#include "nilhyp/roots.hpp"

namespace nilhyp {

namespace {

// In-place action of base (x) ... (x) base on a dense rank-m tensor.
void apply_tensor_power(const MatrixQ& base, int rank, std::vector<Rational>& t) {
  const auto q = static_cast<std::uint64_t>(base.rows());
  std::vector<Rational> scratch(t.size());
  std::uint64_t stride = 1;  // stride of the axis being transformed
  for (int axis = 0; axis < rank; ++axis) {
    const std::uint64_t block = stride * q;
    std::fill(scratch.begin(), scratch.end(), Rational(0));
    for (std::uint64_t outer = 0; outer < t.size(); outer += block)
      for (std::uint64_t inner = 0; inner < stride; ++inner)
        for (std::uint64_t j = 0; j < q; ++j) {
          const Rational& v = t[outer + j * stride + inner];
          if (v == 0) continue;
          for (std::uint64_t i = 0; i < q; ++i) {
            const Rational& a = base(static_cast<Index>(i), static_cast<Index>(j));
            if (a != 0) scratch[outer + i * stride + inner] += a * v;
          }
        }
    t.swap(scratch);
    stride = block;
  }
}

}  // namespace

MatrixQ GradedAutomorphism::grade_matrix(int m) const {
  const Index off = algebra->grade_offset(m);
  const Index d = algebra->grade_dimension(m);
  return full.block(off, off, d, d);
}

GradedAutomorphism extend(const FreeNilpotentAlgebra& algebra, const MatrixQ& base) {
  const int q = algebra.generators();
  if (base.rows() != q || base.cols() != q)
    throw std::invalid_argument("extend: base must be " + std::to_string(q) + "x" + std::to_string(q));
  if (determinant(base) == 0) throw std::domain_error("extend: base matrix is singular");

  const HallBasis& hall = algebra.hall();
  const Index n = algebra.dimension();
  MatrixQ full = MatrixQ::Zero(n, n);
  std::vector<Rational> t;
  for (Index b = 0; b < n; ++b) {
    const int m = static_cast<int>(hall.word(b).size());
    t.assign(hall.tensor_dimension(m), Rational(0));
    for (const auto& [key, c] : hall.expansion(b)) t[key] = c;
    apply_tensor_power(base, m, t);
    auto coords = hall.solve_dense(m, t);
    if (!coords) throw std::logic_error("extend: image of a Lie element left the Lie span");
    for (const auto& [i, c] : *coords) full(i, b) = c;
  }
  return GradedAutomorphism{algebra.algebra_ptr(), base, std::move(full)};
}

std::optional<Index> ideal_violation(const GradedAutomorphism& automorphism, const Ideal& ideal) {
  const MatrixQ& rows = ideal.basis_matrix();
  if (rows.cols() != automorphism.full.cols()) throw std::invalid_argument("ideal_violation: dimension mismatch");
  for (Index r = 0; r < rows.rows(); ++r)
    if (!ideal.span.contains(VectorQ(automorphism.full * rows.row(r).transpose()))) return r;
  return std::nullopt;
}

bool preserves_ideal(const FreeNilpotentAlgebra& algebra, const Ideal& ideal, const MatrixQ& base) {
  return !ideal_violation(extend(algebra, base), ideal).has_value();
}

GradedAutomorphism induce(const QuotientAlgebra& quotient, const GradedAutomorphism& automorphism) {
  if (auto bad = ideal_violation(automorphism, quotient.ideal))
    throw std::invalid_argument("induce: automorphism does not preserve the ideal (basis row " +
                                std::to_string(*bad) + " leaves it)");
  MatrixQ full = quotient.projection * automorphism.full * quotient.section;
  return GradedAutomorphism{quotient.algebra, automorphism.base, std::move(full)};
}

EigenvalueData eigen_data(const GradedAutomorphism& automorphism) {
  EigenvalueData data;
  data.hyperbolic = true;
  const NilpotentAlgebra& alg = *automorphism.algebra;
  for (int m = 1; m <= alg.top_grade(); ++m) {
    PolynomialQ p = char_poly(automorphism.grade_matrix(m));
    const bool unit = has_unit_circle_root(p);
    data.grade_char_polys.push_back(std::move(p));
    data.unit_root_in_grade.push_back(unit);
    if (unit) data.hyperbolic = false;

    std::vector<std::vector<int>> products;
    for (Index i = alg.grade_offset(m); i < alg.grade_offset(m) + alg.grade_dimension(m); ++i)
      products.push_back(alg.element(i).weight);
    data.product_indices.push_back(std::move(products));
  }
  return data;
}

void LatticeSpec::validate() const {
  if (nilhyp::rank(basis) != basis.rows()) throw std::invalid_argument("lattice generators are linearly dependent");
}

std::optional<MatrixQ> lattice_action(const MatrixQ& m, const LatticeSpec& lattice) {
  if (m.rows() != m.cols() || m.cols() != lattice.ambient_dimension())
    throw std::invalid_argument("lattice_action: matrix does not act on the lattice's ambient space");
  const Index d = lattice.rank();
  MatrixQ action(d, d);
  for (Index j = 0; j < d; ++j) {
    const VectorQ image = m * lattice.basis.row(j).transpose();
    auto coords = solve_in_row_span(lattice.basis, image);
    if (!coords) return std::nullopt;
    action.col(j) = *coords;
  }
  return action;
}

bool preserves_lattice(const MatrixQ& m, const LatticeSpec& lattice) {
  const auto action = lattice_action(m, lattice);
  return action && is_unimodular(*action);
}

ConjugatedPair conjugate_certificate(const MatrixQ& alpha, const MatrixQ& g, const LatticeSpec& lattice,
                                     const MatrixQ& rho_g) {
  if (g.rows() != alpha.rows() || g.cols() != alpha.cols())
    throw std::invalid_argument("conjugate_certificate: g and alpha differ in size");
  if (rho_g.rows() != lattice.ambient_dimension() || rho_g.cols() != lattice.ambient_dimension())
    throw std::invalid_argument("conjugate_certificate: rho_g does not act on the lattice's ambient space");
  const MatrixQ g_inv = inverse(g);  // throws on singular g
  return ConjugatedPair{g * alpha * g_inv, LatticeSpec{lattice.basis * rho_g.transpose()}};
}

}  // namespace nilhyp
