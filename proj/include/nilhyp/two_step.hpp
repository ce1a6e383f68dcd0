#pragma once

// Two-step algebras of type (p, q): R^q + W with W spanned by skew basis
// elements e_ij = E_ij - E_ji (i < j) of so(q), and the second compound
// representation of GL(q) on so(q).

#include "nilhyp/automorphism.hpp"

namespace nilhyp {

/// Index pair i < j, 0-based.
struct SkewPair {
  int i = 0;
  int j = 1;

  friend auto operator<=>(const SkewPair&, const SkewPair&) = default;
};

inline Index skew_dimension(int q) { return static_cast<Index>(q) * (q - 1) / 2; }
/// Position of (i, j) in the lexicographic enumeration of pairs.
Index skew_position(SkewPair pair, int q);
SkewPair skew_pair(Index position, int q);
std::vector<SkewPair> skew_pairs(int q);
/// "e12" for q < 10, "e1.12" style otherwise (1-based).
std::string skew_label(SkewPair pair, int q);

/// Span of a set of skew basis elements, pairs kept in lexicographic order.
class StandardSubspace {
 public:
  StandardSubspace(int q, std::vector<SkewPair> pairs);
  static StandardSubspace all(int q) { return StandardSubspace(q, skew_pairs(q)); }

  int q() const { return q_; }
  Index p() const { return static_cast<Index>(pairs_.size()); }
  const std::vector<SkewPair>& pairs() const { return pairs_; }
  /// Positions of the pairs in the full so(q) enumeration.
  std::vector<Index> positions() const;
  bool contains(SkewPair pair) const;

 private:
  int q_;
  std::vector<SkewPair> pairs_;
};

/// Second compound matrix: entry ((a,b), (c,d)) is the 2x2 minor
/// g_ac g_bd - g_bc g_ad, i.e. the matrix of w -> g w g^T on so(q).
template <typename Derived>
Matrix<typename Derived::Scalar> second_compound(const Eigen::MatrixBase<Derived>& g) {
  using Scalar = typename Derived::Scalar;
  if (g.rows() != g.cols()) throw std::invalid_argument("second_compound: matrix is not square");
  const int q = static_cast<int>(g.rows());
  if (q < 2) throw std::invalid_argument("second_compound: size must be at least 2");
  const Index d = skew_dimension(q);
  Matrix<Scalar> out(d, d);
  Index r = 0;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b, ++r) {
      Index c = 0;
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j, ++c) out(r, c) = g(a, i) * g(b, j) - g(b, i) * g(a, j);
    }
  return out;
}

/// First (source pair in W, target pair outside W) with a nonzero entry of
/// second_compound(g), i.e. a witness that g w g^T leaves W.
std::optional<std::pair<SkewPair, SkewPair>> subspace_violation(const MatrixQ& g, const StandardSubspace& w);
/// g w g^T stays in W for every w in W.
bool preserves_standard_subspace(const MatrixQ& g, const StandardSubspace& w);

/// R^q + W with [e_i, e_j] = e_ij for (i, j) in W and 0 otherwise.
struct MetricAlgebra {
  StandardSubspace subspace;
  std::shared_ptr<const NilpotentAlgebra> algebra;
};

MetricAlgebra build_metric(const StandardSubspace& w);

/// (v, w) -> (g v, g w g^T). Throws std::invalid_argument, naming the
/// offending pair, when g does not preserve W.
GradedAutomorphism metric_automorphism(const MetricAlgebra& algebra, const MatrixQ& g);

}  // namespace nilhyp
