#include "nilhyp/two_step.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace nilhyp;
using namespace nilhyp::testing;

namespace {

StandardSubspace so3_w(int q) { return StandardSubspace(q, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST(SkewBasis, PositionsAreLexicographicBijection) {
  for (int q = 2; q <= 9; ++q) {
    const auto pairs = skew_pairs(q);
    ASSERT_EQ(static_cast<Index>(pairs.size()), skew_dimension(q));
    for (size_t r = 0; r < pairs.size(); ++r) {
      EXPECT_EQ(skew_position(pairs[r], q), static_cast<Index>(r));
      EXPECT_EQ(skew_pair(static_cast<Index>(r), q), pairs[r]);
      if (r > 0) EXPECT_LT(pairs[r - 1], pairs[r]);
    }
  }
  EXPECT_EQ(skew_label({0, 2}, 6), "e13");
  EXPECT_EQ(skew_label({0, 11}, 12), "e1.12");
  EXPECT_THROW(skew_position({2, 1}, 4), std::invalid_argument);
  EXPECT_THROW(skew_pair(6, 4), std::invalid_argument);
}

TEST(SecondCompound, Examples) {
  EXPECT_EQ(second_compound(identity(4)), identity(6));
  EXPECT_EQ(second_compound(mat({{2, 7}, {1, 5}})), mat({{3}}));
  MatrixQ shear = identity(3);
  shear(0, 1) = 1;
  EXPECT_EQ(second_compound(shear), rho_by_expansion(shear));
  // I + E12 sends e2 to e1 + e2, so e23 -> e13 + e23
  EXPECT_EQ(MatrixQ(second_compound(shear).col(2)), mat({{0}, {1}, {1}}));
  EXPECT_THROW(second_compound(MatrixQ(2, 3)), std::invalid_argument);
  EXPECT_THROW(second_compound(identity(1)), std::invalid_argument);
}

TEST(SecondCompound, MatchesDirectExpansion) {
  Rng rng(61);
  for (int q = 3; q <= 6; ++q)
    for (int trial = 0; trial < 100; ++trial) {
      const MatrixQ g = random_integer_matrix(rng, q, q, 5);
      ASSERT_EQ(second_compound(g), rho_by_expansion(g));
    }
}

TEST(SecondCompound, HomomorphismTransposeDeterminant) {
  Rng rng(67);
  int pairs = 0;
  for (int q = 2; q <= 6; ++q)
    for (int trial = 0; trial < 25; ++trial, ++pairs) {
      const MatrixQ g = random_unimodular(rng, q), h = random_unimodular(rng, q);
      EXPECT_EQ(second_compound(MatrixQ(g * h)), MatrixQ(second_compound(g) * second_compound(h)));
      const MatrixQ r = random_integer_matrix(rng, q, q, 4);
      EXPECT_EQ(second_compound(MatrixQ(r.transpose())), MatrixQ(second_compound(r).transpose()));
      if (q <= 5) {
        Rational expected(1);
        const Rational d = determinant(r);
        for (int i = 0; i < q - 1; ++i) expected *= d;
        EXPECT_EQ(determinant(second_compound(r)), expected);
      }
    }
  EXPECT_GE(pairs, 100);
}

TEST(StandardSubspace, Validation) {
  EXPECT_THROW(StandardSubspace(4, {}), std::invalid_argument);
  EXPECT_THROW(StandardSubspace(4, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(StandardSubspace(4, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(StandardSubspace(4, {{0, 4}}), std::invalid_argument);
  const StandardSubspace w(4, {{2, 3}, {0, 1}});
  EXPECT_EQ(w.pairs().front(), (SkewPair{0, 1}));
  EXPECT_EQ(w.positions(), (std::vector<Index>{0, 5}));
}

TEST(GWMembership, Examples) {
  Rng rng(71);
  const auto all = StandardSubspace::all(5);
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(preserves_standard_subspace(random_integer_matrix(rng, 5, 5, 3), all));

  const auto w = so3_w(6);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ g = block_diagonal({random_unimodular(rng, 3), random_unimodular(rng, 3)});
    EXPECT_TRUE(preserves_standard_subspace(g, w));
  }
  MatrixQ swap = identity(6);
  swap(2, 2) = swap(3, 3) = 0;
  swap(2, 3) = swap(3, 2) = 1;
  EXPECT_FALSE(preserves_standard_subspace(swap, w));
  const auto bad = subspace_violation(swap, w);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->first, (SkewPair{0, 2}));
  EXPECT_EQ(bad->second, (SkewPair{0, 3}));
}

TEST(Metric, Examples) {
  const auto heis = build_metric(StandardSubspace(2, {{0, 1}}));
  EXPECT_EQ(heis.algebra->grade_dimensions(), (std::vector<Index>{2, 1}));
  EXPECT_EQ(bracket(*heis.algebra, VectorQ::Unit(3, 0), VectorQ::Unit(3, 1)), VectorQ(VectorQ::Unit(3, 2)));

  const auto so3 = build_metric(so3_w(6));
  EXPECT_EQ(so3.algebra->grade_dimensions(), (std::vector<Index>{6, 3}));
  EXPECT_EQ(so3.algebra->labels()[6], "[e1,e2]");
  EXPECT_EQ(so3.algebra->step(), 2);
  EXPECT_TRUE(bracket(*so3.algebra, VectorQ::Unit(9, 0), VectorQ::Unit(9, 4)).isZero());
  EXPECT_EQ(bracket(*so3.algebra, VectorQ::Unit(9, 2), VectorQ::Unit(9, 1)), VectorQ(-VectorQ::Unit(9, 8)));
}

TEST(Metric, JacobiAndCentralSeries) {
  Rng rng(73);
  for (int q = 2; q <= 6; ++q)
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<SkewPair> chosen;
      for (const auto& p : skew_pairs(q))
        if (rng.coin()) chosen.push_back(p);
      if (chosen.empty()) chosen.push_back({0, 1});
      const auto m = build_metric(StandardSubspace(q, chosen));
      EXPECT_FALSE(jacobi_violation(*m.algebra).has_value());
      EXPECT_FALSE(antisymmetry_violation(*m.algebra).has_value());
      EXPECT_EQ(dense_lie_identity_failure(*m.algebra), std::nullopt);
      ASSERT_EQ(m.algebra->step(), 2);
      EXPECT_EQ(m.algebra->central_series()[1].dimension(), static_cast<Index>(chosen.size()));
    }
}

TEST(Metric, AllPairsIsFreeTwoStep) {
  for (int q = 2; q <= 5; ++q) {
    const auto m = build_metric(StandardSubspace::all(q));
    const auto f = build_free(q, 2);
    ASSERT_EQ(m.algebra->dimension(), f.dimension());
    EXPECT_EQ(m.algebra->labels(), f.algebra().labels());
    for (Index i = 0; i < f.dimension(); ++i)
      for (Index j = 0; j < f.dimension(); ++j) EXPECT_EQ(m.algebra->structure(i, j), f.algebra().structure(i, j));
    Rng rng(79 + static_cast<unsigned>(q));
    for (int trial = 0; trial < 5; ++trial) {
      const MatrixQ g = random_rational_sl(rng, q);
      EXPECT_EQ(metric_automorphism(m, g).full, extend(f, g).full);
    }
  }
}

TEST(MetricAutomorphism, Examples) {
  const auto so3 = build_metric(so3_w(6));
  EXPECT_EQ(metric_automorphism(so3, identity(6)).full, identity(9));
  MatrixQ swap = identity(6);
  swap(2, 2) = swap(3, 3) = 0;
  swap(2, 3) = swap(3, 2) = 1;
  try {
    metric_automorphism(so3, swap);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("e13"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("e14"), std::string::npos);
  }
  MatrixQ singular = identity(6);
  singular(5, 5) = 0;
  EXPECT_THROW(metric_automorphism(so3, singular), std::domain_error);
}

TEST(MetricAutomorphism, GradeTwoDependsOnlyOnFirstBlock) {
  const auto so3 = build_metric(so3_w(6));
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ a = random_unimodular(rng, 3);
    const MatrixQ b1 = random_unimodular(rng, 3), b2 = random_unimodular(rng, 3);
    const auto m1 = metric_automorphism(so3, block_diagonal({a, b1}));
    const auto m2 = metric_automorphism(so3, block_diagonal({a, b2}));
    EXPECT_EQ(m1.grade_matrix(2), m2.grade_matrix(2));
    EXPECT_EQ(m1.grade_matrix(2), second_compound(a));
  }
}

TEST(MetricAutomorphism, AdjugateRelationInRankThree) {
  // for 3x3 A with det 1, second_compound(A) = (A^-1)^T after reordering e13 -> -e31:
  // in the basis (e23, -e13, e12) the compound is exactly the cofactor matrix
  const auto m = build_metric(StandardSubspace::all(3));
  Rng rng(89);
  MatrixQ reorder = MatrixQ::Zero(3, 3);
  reorder(0, 2) = 1;
  reorder(1, 1) = -1;
  reorder(2, 0) = 1;
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ a = random_rational_sl(rng, 3);
    const MatrixQ grade2 = metric_automorphism(m, a).grade_matrix(2);
    EXPECT_EQ(MatrixQ(reorder * grade2 * inverse(reorder)), MatrixQ(inverse(a).transpose()));
  }
}

TEST(MetricAutomorphism, GradeTwoCharPolyDividesRhoCharPoly) {
  const auto so3 = build_metric(so3_w(6));
  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ g = block_diagonal({random_unimodular(rng, 3), random_unimodular(rng, 3)});
    const auto grade2 = char_poly(metric_automorphism(so3, g).grade_matrix(2));
    const auto full = char_poly(second_compound(g));
    EXPECT_TRUE(divmod(full, grade2).second.is_zero());
  }
}

TEST(MetricAutomorphism, BracketCompatible) {
  const auto so3 = build_metric(so3_w(7));
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ g = block_diagonal({random_rational_sl(rng, 3), random_rational_sl(rng, 4)});
    const auto aut = metric_automorphism(so3, g);
    const Index n = so3.algebra->dimension();
    VectorQ x(n), y(n);
    for (Index i = 0; i < n; ++i) x(i) = rng.uniform(-3, 3), y(i) = rng.uniform(-3, 3);
    EXPECT_EQ(VectorQ(aut.full * bracket(*so3.algebra, x, y)),
              bracket(*so3.algebra, VectorQ(aut.full * x), VectorQ(aut.full * y)));
  }
}
