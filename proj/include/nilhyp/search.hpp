#pragma once

// Realized algebras from a serializable spec, candidate streams, and the
// witness search.

#include "nilhyp/two_step.hpp"

#include <cstdint>
#include <variant>

namespace nilhyp {

/// Serializable description of an algebra: free (q, k), a quotient of free
/// (q, k) by the ideal generated by rational vectors in Hall coordinates, or
/// the metric algebra R^q + W for a standard subspace W.
struct AlgebraSpec {
  enum class Kind { free, quotient, metric };
  Kind kind = Kind::free;
  int q = 2;
  int k = 2;
  std::vector<VectorQ> ideal_generators;
  std::vector<SkewPair> w_pairs;

  static AlgebraSpec free_algebra(int q, int k) { return {Kind::free, q, k, {}, {}}; }
  static AlgebraSpec metric(int q, std::vector<SkewPair> pairs) { return {Kind::metric, q, 2, {}, std::move(pairs)}; }
  /// W = span(e12, e13, e23) inside so(q).
  static AlgebraSpec so3_metric(int q) { return metric(q, {{0, 1}, {0, 2}, {1, 2}}); }
};

std::string kind_name(AlgebraSpec::Kind kind);

/// The algebra a spec describes, with the matching notion of automorphism.
class RealizedAlgebra {
 public:
  explicit RealizedAlgebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const NilpotentAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const NilpotentAlgebra>& algebra_ptr() const { return algebra_; }
  int generators() const { return spec_.q; }
  Index dimension() const { return algebra_->dimension(); }

  /// Why `base` is not in the automorphism group (free: invertible; quotient:
  /// extension preserves the ideal; metric: g W g^T = W), or nullopt.
  std::optional<std::string> membership_violation(const MatrixQ& base) const;
  /// Throws std::invalid_argument when membership fails.
  GradedAutomorphism automorphism(const MatrixQ& base) const;

  /// Last nonzero term of the lower central series.
  const Subspace& top_term() const { return algebra_->central_series().back(); }
  /// Integer span of the echelon basis of the top term (for the metric
  /// algebras this is the span of the W basis).
  LatticeSpec standard_lattice() const;
  /// First lattice row outside the top term, if any.
  std::optional<Index> lattice_outside_top_term(const LatticeSpec& lattice) const;

 private:
  AlgebraSpec spec_;
  std::optional<FreeNilpotentAlgebra> free_;
  std::optional<QuotientAlgebra> quotient_;
  std::optional<MetricAlgebra> metric_;
  std::shared_ptr<const NilpotentAlgebra> algebra_;
};

// ---------------------------------------------------------------------------
// Candidates

struct CandidateSource {
  enum class Kind { words, companion, explicit_list };
  Kind kind = Kind::companion;
  std::vector<int> block_sizes;
  int word_length = 12;
  long entry_bound = 5;
  std::uint64_t seed = 1;
  std::vector<MatrixQ> explicit_list;

  /// Throws std::invalid_argument when the blocks do not tile q (or the
  /// explicit matrices are not q x q).
  void validate(int q) const;
};

std::string kind_name(CandidateSource::Kind kind);

struct Candidate {
  Index index = 0;
  MatrixQ matrix;
  /// Human-readable reconstruction recipe, e.g. the block polynomials.
  std::string description;
};

/// Candidate `index` of the stream. Each index draws from its own generator
/// seeded by (seed, index), so any entry can be regenerated in isolation.
/// Explicit lists are indexed directly. All outputs are integral with
/// determinant 1 (explicit entries are returned as given).
Candidate generate_candidate(const CandidateSource& source, int q, Index index);
std::vector<Candidate> generate_candidates(const CandidateSource& source, int q, Index count);

/// Default source for a spec: companion blocks (3, q - 3) for the metric
/// algebra on W = span(e12, e13, e23) with q >= 4, elementary words on a
/// single block otherwise.
CandidateSource default_source(const AlgebraSpec& spec, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Search

struct Verdicts {
  bool in_automorphism_group = false;
  bool hyperbolic = false;
  bool preserves_lattice = false;

  bool all() const { return in_automorphism_group && hyperbolic && preserves_lattice; }
  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

/// Everything recomputed for one candidate.
struct Evaluation {
  Verdicts verdicts;
  std::optional<std::string> membership_failure;
  std::optional<EigenvalueData> eigen;
  std::optional<GradedAutomorphism> automorphism;
};

/// Membership, then hyperbolicity on the whole algebra, then preservation of
/// the lattice; later checks are skipped once membership fails.
Evaluation evaluate(const RealizedAlgebra& algebra, const LatticeSpec& lattice, const MatrixQ& alpha);

struct SearchReport {
  Index examined = 0;
  Index group_failures = 0;
  Index hyperbolic_failures = 0;
  Index lattice_failures = 0;
  /// candidates with a unit-modulus eigenvalue in grade m, index m - 1
  std::vector<Index> unit_root_by_grade;
};

struct SearchResult {
  std::optional<Candidate> witness;
  std::optional<Evaluation> evaluation;
  SearchReport report;
};

/// First candidate in stream order passing all three checks, within `budget`
/// candidates (or the explicit list's length). Throws std::invalid_argument
/// up front when the lattice does not lie in the top central-series term.
SearchResult search(const RealizedAlgebra& algebra, const LatticeSpec& lattice, const CandidateSource& source,
                    Index budget);

}  // namespace nilhyp
