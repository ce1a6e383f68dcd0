#pragma once

// Floating-point eigenvalue cross-checks. Nothing in the exact pipeline
// depends on these; they exist to confirm exact verdicts independently.

#include "nilhyp/polynomial.hpp"

namespace nilhyp {

/// min over eigenvalues of | |lambda| - 1 |. Computed in double precision and
/// recomputed with 50 significant digits whenever the double result is below
/// 1e-3, so clustered or defective eigenvalues near the circle do not
/// masquerade as decisive.
double unit_modulus_gap(const MatrixQ& m);

/// Same, for the roots of p (via its companion matrix). p must have degree >= 1.
double unit_modulus_gap(const PolynomialQ& p);

/// Companion matrix with ones on the subdiagonal and -c_0..-c_{n-1} in the
/// last column, for monic p of degree n.
MatrixQ companion_matrix(const PolynomialQ& p);

}  // namespace nilhyp
