#include "nilhyp/two_step.hpp"

#include <algorithm>

namespace nilhyp {

namespace {

bool valid_pair(SkewPair p, int q) { return p.i >= 0 && p.i < p.j && p.j < q; }

std::string pair_text(SkewPair p) { return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")"; }

}  // namespace

Index skew_position(SkewPair pair, int q) {
  if (!valid_pair(pair, q)) throw std::invalid_argument("skew_position: invalid pair " + pair_text(pair));
  // pairs (a, *) for a < i come first: sum_{a<i} (q-1-a)
  return static_cast<Index>(pair.i) * (2 * q - pair.i - 1) / 2 + (pair.j - pair.i - 1);
}

SkewPair skew_pair(Index position, int q) {
  if (position < 0 || position >= skew_dimension(q)) throw std::invalid_argument("skew_pair: position out of range");
  int i = 0;
  while (position >= q - 1 - i) {
    position -= q - 1 - i;
    ++i;
  }
  return SkewPair{i, i + 1 + static_cast<int>(position)};
}

std::vector<SkewPair> skew_pairs(int q) {
  std::vector<SkewPair> out;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) out.push_back({i, j});
  return out;
}

std::string skew_label(SkewPair pair, int q) {
  if (q < 10) return "e" + std::to_string(pair.i + 1) + std::to_string(pair.j + 1);
  return "e" + std::to_string(pair.i + 1) + "." + std::to_string(pair.j + 1);
}

StandardSubspace::StandardSubspace(int q, std::vector<SkewPair> pairs) : q_(q), pairs_(std::move(pairs)) {
  if (q < 2) throw std::invalid_argument("standard subspace needs q >= 2");
  if (pairs_.empty()) throw std::invalid_argument("standard subspace needs at least one pair");
  for (const auto& p : pairs_)
    if (!valid_pair(p, q)) throw std::invalid_argument("invalid skew pair " + pair_text(p) + " for q = " + std::to_string(q));
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
    throw std::invalid_argument("standard subspace lists a pair twice");
}

std::vector<Index> StandardSubspace::positions() const {
  std::vector<Index> out;
  for (const auto& p : pairs_) out.push_back(skew_position(p, q_));
  return out;
}

bool StandardSubspace::contains(SkewPair pair) const { return std::binary_search(pairs_.begin(), pairs_.end(), pair); }

std::optional<std::pair<SkewPair, SkewPair>> subspace_violation(const MatrixQ& g, const StandardSubspace& w) {
  if (g.rows() != w.q() || g.cols() != w.q())
    throw std::invalid_argument("subspace_violation: matrix size does not match q");
  const MatrixQ rho = second_compound(g);
  const int q = w.q();
  for (const auto& source : w.pairs()) {
    const Index c = skew_position(source, q);
    for (Index r = 0; r < rho.rows(); ++r) {
      const SkewPair target = skew_pair(r, q);
      if (rho(r, c) != 0 && !w.contains(target)) return std::make_pair(source, target);
    }
  }
  return std::nullopt;
}

bool preserves_standard_subspace(const MatrixQ& g, const StandardSubspace& w) {
  return !subspace_violation(g, w).has_value();
}

MetricAlgebra build_metric(const StandardSubspace& w) {
  const int q = w.q();
  const Index n = q + w.p();
  std::vector<BasisElement> basis;
  for (int i = 0; i < q; ++i) basis.push_back({"e" + std::to_string(i + 1), 1, {i}});
  for (const auto& p : w.pairs())
    basis.push_back({"[e" + std::to_string(p.i + 1) + ",e" + std::to_string(p.j + 1) + "]", 2, {p.i, p.j}});
  StructureTable table(n);
  for (Index r = 0; r < w.p(); ++r) {
    const SkewPair p = w.pairs()[static_cast<size_t>(r)];
    table.set(p.i, p.j, SparseVector{{q + r, Rational(1)}});
  }
  return MetricAlgebra{w, std::make_shared<const NilpotentAlgebra>(std::move(basis), std::move(table), true)};
}

GradedAutomorphism metric_automorphism(const MetricAlgebra& algebra, const MatrixQ& g) {
  const StandardSubspace& w = algebra.subspace;
  if (auto bad = subspace_violation(g, w))
    throw std::invalid_argument("metric_automorphism: g moves " + skew_label(bad->first, w.q()) + " onto " +
                                skew_label(bad->second, w.q()) + " outside W");
  if (determinant(g) == 0) throw std::domain_error("metric_automorphism: g is singular");
  const MatrixQ rho = second_compound(g);
  const std::vector<Index> pos = w.positions();
  MatrixQ restricted(w.p(), w.p());
  for (Index r = 0; r < w.p(); ++r)
    for (Index c = 0; c < w.p(); ++c) restricted(r, c) = rho(pos[static_cast<size_t>(r)], pos[static_cast<size_t>(c)]);
  return GradedAutomorphism{algebra.algebra, g, block_diagonal({g, restricted})};
}

}  // namespace nilhyp
