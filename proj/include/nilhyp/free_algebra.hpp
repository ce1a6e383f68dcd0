#pragma once

#include "nilhyp/nilpotent_algebra.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>

namespace nilhyp {

/// Word over the generator alphabet {0, ..., q-1}.
using Word = std::vector<int>;

/// Left-normed bracket [e_{i1}, [e_{i2}, [..., [e_{i(m-1)}, e_{im}]...]] with
/// 0-based generator indices.
struct Monomial {
  std::vector<int> indices;
};

/// Element of the rank-m tensor space (R^q)^{(x)m}, keyed by the base-q value
/// of the word; for a fixed length this order is the lexicographic one.
using SparseTensor = std::map<std::uint64_t, Rational>;

/// Largest tensor-space dimension q^k accepted.
inline constexpr std::uint64_t kMaxTensorDimension = 10'000'000;

/// Lyndon words of length 1..max_length over q letters, lexicographic order.
std::vector<Word> lyndon_words(int q, int max_length);
bool is_lyndon(const Word& w);
/// Split w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Witt number (1/m) sum_{d | m} mu(d) q^{m/d}.
Index witt_dimension(int q, int m);

SparseTensor tensor_commutator(const SparseTensor& a, int rank_a, const SparseTensor& b, int rank_b, int q);
SparseTensor left_normed_tensor(const Monomial& m, int q);

/// Lyndon-word basis of the free Lie algebra truncated at length k, each
/// element carrying its standard bracketing and its tensor expansion.
///
/// The expansion of a standard-bracketed Lyndon word w equals w plus words
/// lexicographically larger than w, so each grade's expansion matrix is
/// unitriangular on the Lyndon columns and coordinates are obtained by
/// forward substitution. The construction checks this property.
class HallBasis {
 public:
  HallBasis(int q, int k);

  int generators() const { return q_; }
  int step() const { return k_; }
  Index size() const { return static_cast<Index>(words_.size()); }
  Index grade_offset(int m) const { return offsets_[static_cast<size_t>(m - 1)]; }
  Index grade_dimension(int m) const {
    return offsets_[static_cast<size_t>(m)] - offsets_[static_cast<size_t>(m - 1)];
  }

  const Word& word(Index i) const { return words_[static_cast<size_t>(i)]; }
  const std::string& label(Index i) const { return labels_[static_cast<size_t>(i)]; }
  /// Indices of the standard factorization; (-1, -1) for generators.
  std::pair<Index, Index> factors(Index i) const { return factors_[static_cast<size_t>(i)]; }
  const SparseTensor& expansion(Index i) const { return expansions_[static_cast<size_t>(i)]; }
  std::uint64_t tensor_dimension(int m) const;

  /// Rows: grade-m basis elements; columns: the q^m words.
  MatrixQ expansion_matrix(int m) const;

  /// Coordinates (global basis indices) of a rank-m tensor, or nullopt when
  /// it is not a Lie element of grade m.
  std::optional<SparseVector> solve(int m, SparseTensor t) const;
  /// Same, for a dense tensor of length q^m (consumed).
  std::optional<SparseVector> solve_dense(int m, std::vector<Rational>& t) const;

 private:
  int q_, k_;
  std::vector<Word> words_;
  std::vector<std::string> labels_;
  std::vector<std::pair<Index, Index>> factors_;
  std::vector<SparseTensor> expansions_;
  std::vector<Index> offsets_;
  std::vector<std::unordered_map<std::uint64_t, Index>> leading_;
};

/// Free k-step nilpotent Lie algebra on q generators in the Hall basis.
class FreeNilpotentAlgebra {
 public:
  FreeNilpotentAlgebra(std::shared_ptr<const HallBasis> basis, std::shared_ptr<const NilpotentAlgebra> algebra)
      : basis_(std::move(basis)), algebra_(std::move(algebra)) {}

  int generators() const { return basis_->generators(); }
  int step() const { return basis_->step(); }
  const HallBasis& hall() const { return *basis_; }
  const NilpotentAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const NilpotentAlgebra>& algebra_ptr() const { return algebra_; }
  Index dimension() const { return algebra_->dimension(); }

 private:
  std::shared_ptr<const HallBasis> basis_;
  std::shared_ptr<const NilpotentAlgebra> algebra_;
};

/// Throws std::invalid_argument for q < 2 or k < 1 and ResourceError when
/// q^k exceeds kMaxTensorDimension.
FreeNilpotentAlgebra build_free(int q, int k);

/// Coordinates of a left-normed monomial in the Hall basis (full algebra
/// dimension, supported in the monomial's grade). Throws when the length
/// exceeds k or an index is out of range.
VectorQ expand_monomial(const FreeNilpotentAlgebra& algebra, const Monomial& m);

}  // namespace nilhyp
