#pragma once

// Independent oracles shared by the unit tests and the acceptance binary.
// None of these reuse the library's sparse or Hall-basis code paths.

#include "nilhyp/nilpotent_algebra.hpp"
#include "nilhyp/two_step.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilhyp::testing {

inline int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  return n > 1 ? -result : result;
}

/// (1/m) sum_{d | m} mu(d) q^{m/d}
inline long long witt_formula(int q, int m) {
  long long sum = 0;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) {
      long long power = 1;
      for (int i = 0; i < m / d; ++i) power *= q;
      sum += moebius(d) * power;
    }
  return sum / m;
}

/// Dense left-normed bracket [e_{w0},[e_{w1},[...]]] in the tensor algebra,
/// by recursion on the word.
inline std::vector<long> dense_left_normed(const std::vector<int>& w, int q) {
  if (w.size() == 1) {
    std::vector<long> v(static_cast<size_t>(q), 0);
    v[static_cast<size_t>(w[0])] = 1;
    return v;
  }
  const std::vector<long> rest = dense_left_normed(std::vector<int>(w.begin() + 1, w.end()), q);
  const size_t n = rest.size();
  std::vector<long> out(n * static_cast<size_t>(q), 0);
  const size_t a = static_cast<size_t>(w[0]);
  for (size_t i = 0; i < n; ++i) {
    out[a * n + i] += rest[i];                       // e_a (x) rest
    out[i * static_cast<size_t>(q) + a] -= rest[i];  // rest (x) e_a
  }
  return out;
}

/// Rank of the span of all q^m left-normed monomials of length m.
inline Index brute_force_grade_rank(int q, int m) {
  std::vector<std::vector<long>> rows;
  std::vector<int> w(static_cast<size_t>(m), 0);
  while (true) {
    rows.push_back(dense_left_normed(w, q));
    int pos = m - 1;
    while (pos >= 0 && w[static_cast<size_t>(pos)] == q - 1) w[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++w[static_cast<size_t>(pos)];
  }
  MatrixQ mat(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) mat(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
  return rank(mat);
}

/// Matrix of w -> g w g^T on the skew basis, by multiplying out g (E_ij - E_ji) g^T.
inline MatrixQ rho_by_expansion(const MatrixQ& g) {
  const int q = static_cast<int>(g.rows());
  const auto pairs = skew_pairs(q);
  MatrixQ out(static_cast<Index>(pairs.size()), static_cast<Index>(pairs.size()));
  for (size_t c = 0; c < pairs.size(); ++c) {
    MatrixQ e = MatrixQ::Zero(q, q);
    e(pairs[c].i, pairs[c].j) = 1;
    e(pairs[c].j, pairs[c].i) = -1;
    const MatrixQ image = g * e * g.transpose();
    for (size_t r = 0; r < pairs.size(); ++r) out(static_cast<Index>(r), static_cast<Index>(c)) = image(pairs[r].i, pairs[r].j);
  }
  return out;
}

/// Exact antisymmetry and Jacobi over all basis pairs and triples, on a dense
/// copy of the structure constants. Returns the first failure.
inline std::optional<std::string> dense_lie_identity_failure(const NilpotentAlgebra& alg) {
  const Index n = alg.dimension();
  std::vector<MatrixQ> c(static_cast<size_t>(n), MatrixQ::Zero(n, n));  // c[k](i, j) = coefficient of e_k in [e_i, e_j]
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, v] : alg.structure(i, j)) c[static_cast<size_t>(k)](i, j) = v;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (c[static_cast<size_t>(k)](i, j) != -c[static_cast<size_t>(k)](j, i))
          return "antisymmetry fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]], coordinate t
  auto nested = [&](Index a, Index b, Index d, Index t) {
    Rational s = 0;
    for (Index m = 0; m < n; ++m) {
      const Rational& inner = c[static_cast<size_t>(m)](b, d);
      if (inner != 0) s += inner * c[static_cast<size_t>(t)](a, m);
    }
    return s;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k)
        for (Index t = 0; t < n; ++t)
          if (nested(i, j, k, t) + nested(j, k, i, t) + nested(k, i, j, t) != 0)
            return "Jacobi fails on (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
  return std::nullopt;
}

}  // namespace nilhyp::testing
