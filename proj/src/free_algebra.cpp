#include "nilhyp/free_algebra.hpp"

#include <algorithm>

namespace nilhyp {

namespace {

std::uint64_t power(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::uint64_t word_index(const Word& w, int q) {
  std::uint64_t idx = 0;
  for (int letter : w) idx = idx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(letter);
  return idx;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::vector<Word> lyndon_words(int q, int max_length) {
  // Duval's generation in lexicographic order.
  std::vector<Word> out;
  if (q < 1 || max_length < 1) return out;
  Word w{-1};
  while (!w.empty()) {
    ++w.back();
    out.push_back(w);
    const size_t period = w.size();
    while (static_cast<int>(w.size()) < max_length) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == q - 1) w.pop_back();
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t s = 1; s < w.size(); ++s)
    if (!(w < Word(w.begin() + static_cast<std::ptrdiff_t>(s), w.end()))) return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: word of length < 2");
  for (size_t s = 1; s < w.size(); ++s) {
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    if (is_lyndon(suffix)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s)), suffix};
  }
  throw std::logic_error("standard_factorization: no Lyndon suffix");  // unreachable: last letter is Lyndon
}

Index witt_dimension(int q, int m) {
  Integer sum(0);
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Integer term = boost::multiprecision::pow(Integer(q), static_cast<unsigned>(m / d));
    sum += mu > 0 ? term : Integer(-term);
  }
  return static_cast<Index>(sum / m);
}

SparseTensor tensor_commutator(const SparseTensor& a, int rank_a, const SparseTensor& b, int rank_b, int q) {
  const std::uint64_t shift_a = power(static_cast<std::uint64_t>(q), rank_a);
  const std::uint64_t shift_b = power(static_cast<std::uint64_t>(q), rank_b);
  SparseTensor out;
  auto add = [&out](std::uint64_t key, const Rational& v) {
    auto [it, fresh] = out.try_emplace(key, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      const Rational f = ca * cb;
      add(ia * shift_b + ib, f);
      add(ib * shift_a + ia, -f);
    }
  return out;
}

SparseTensor left_normed_tensor(const Monomial& m, int q) {
  if (m.indices.empty()) throw std::invalid_argument("left_normed_tensor: empty monomial");
  const int len = static_cast<int>(m.indices.size());
  SparseTensor t{{static_cast<std::uint64_t>(m.indices.back()), Rational(1)}};
  int rank = 1;
  for (int r = len - 2; r >= 0; --r) {
    SparseTensor gen{{static_cast<std::uint64_t>(m.indices[static_cast<size_t>(r)]), Rational(1)}};
    t = tensor_commutator(gen, 1, t, rank, q);
    ++rank;
  }
  return t;
}

HallBasis::HallBasis(int q, int k) : q_(q), k_(k) {
  if (q < 2) throw std::invalid_argument("free algebra needs at least 2 generators");
  if (k < 1) throw std::invalid_argument("nilpotency step must be at least 1");
  if (power(static_cast<std::uint64_t>(q), k) > kMaxTensorDimension)
    throw ResourceError("tensor space q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                        " exceeds the supported size envelope");

  std::vector<Word> all = lyndon_words(q, k);
  std::stable_sort(all.begin(), all.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

  std::map<Word, Index> index_of;
  offsets_.assign(static_cast<size_t>(k) + 1, 0);
  leading_.resize(static_cast<size_t>(k));
  for (const Word& w : all) {
    const Index idx = static_cast<Index>(words_.size());
    const int m = static_cast<int>(w.size());
    index_of[w] = idx;
    SparseTensor expansion;
    std::pair<Index, Index> f{-1, -1};
    std::string label;
    if (m == 1) {
      expansion[static_cast<std::uint64_t>(w[0])] = Rational(1);
      label = "e" + std::to_string(w[0] + 1);
    } else {
      const auto [u, v] = standard_factorization(w);
      f = {index_of.at(u), index_of.at(v)};
      expansion = tensor_commutator(expansions_[static_cast<size_t>(f.first)], static_cast<int>(u.size()),
                                    expansions_[static_cast<size_t>(f.second)], static_cast<int>(v.size()), q);
      label = "[" + labels_[static_cast<size_t>(f.first)] + "," + labels_[static_cast<size_t>(f.second)] + "]";
    }
    const std::uint64_t key = word_index(w, q);
    if (expansion.empty() || expansion.begin()->first != key || expansion.begin()->second != 1)
      throw std::logic_error("Hall basis expansion is not unitriangular at " + label);
    leading_[static_cast<size_t>(m - 1)][key] = idx;
    words_.push_back(w);
    labels_.push_back(std::move(label));
    factors_.push_back(f);
    expansions_.push_back(std::move(expansion));
    offsets_[static_cast<size_t>(m)] = idx + 1;
  }
}

std::uint64_t HallBasis::tensor_dimension(int m) const { return power(static_cast<std::uint64_t>(q_), m); }

MatrixQ HallBasis::expansion_matrix(int m) const {
  const Index off = grade_offset(m);
  const Index rows = grade_dimension(m);
  MatrixQ out = MatrixQ::Zero(rows, static_cast<Index>(tensor_dimension(m)));
  for (Index r = 0; r < rows; ++r)
    for (const auto& [key, c] : expansion(off + r)) out(r, static_cast<Index>(key)) = c;
  return out;
}

std::optional<SparseVector> HallBasis::solve(int m, SparseTensor t) const {
  if (m < 1 || m > k_) throw std::invalid_argument("HallBasis::solve: grade out of range");
  const auto& lead = leading_[static_cast<size_t>(m - 1)];
  SparseVector out;
  while (!t.empty()) {
    const auto first = t.begin();
    const auto it = lead.find(first->first);
    if (it == lead.end()) return std::nullopt;
    const Rational c = first->second;
    out.emplace_back(it->second, c);
    for (const auto& [key, v] : expansions_[static_cast<size_t>(it->second)]) {
      auto [pos, fresh] = t.try_emplace(key, -c * v);
      if (!fresh) {
        pos->second -= c * v;
        if (pos->second == 0) t.erase(pos);
      }
    }
  }
  return out;
}

std::optional<SparseVector> HallBasis::solve_dense(int m, std::vector<Rational>& t) const {
  if (m < 1 || m > k_) throw std::invalid_argument("HallBasis::solve_dense: grade out of range");
  if (t.size() != tensor_dimension(m)) throw std::invalid_argument("HallBasis::solve_dense: wrong tensor length");
  const auto& lead = leading_[static_cast<size_t>(m - 1)];
  SparseVector out;
  for (std::uint64_t pos = 0; pos < t.size(); ++pos) {
    if (t[pos] == 0) continue;
    const auto it = lead.find(pos);
    if (it == lead.end()) return std::nullopt;
    const Rational c = t[pos];
    out.emplace_back(it->second, c);
    for (const auto& [key, v] : expansions_[static_cast<size_t>(it->second)]) t[key] -= c * v;
  }
  return out;
}

FreeNilpotentAlgebra build_free(int q, int k) {
  auto hall = std::make_shared<const HallBasis>(q, k);
  const Index n = hall->size();
  std::vector<BasisElement> elements;
  elements.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Word weight = hall->word(i);
    std::sort(weight.begin(), weight.end());
    elements.push_back({hall->label(i), static_cast<int>(hall->word(i).size()), std::move(weight)});
  }

  StructureTable table(n);
  for (Index i = 0; i < n; ++i) {
    const int gi = elements[static_cast<size_t>(i)].grade;
    for (Index j = i + 1; j < n; ++j) {
      const int gj = elements[static_cast<size_t>(j)].grade;
      if (gi + gj > k) break;  // grades are nondecreasing in j
      auto coords = hall->solve(gi + gj, tensor_commutator(hall->expansion(i), gi, hall->expansion(j), gj, q));
      if (!coords) throw std::logic_error("bracket of Hall elements is not in the Hall span");
      table.set(i, j, std::move(*coords));
    }
  }
  auto algebra = std::make_shared<const NilpotentAlgebra>(std::move(elements), std::move(table), true);
  return FreeNilpotentAlgebra(std::move(hall), std::move(algebra));
}

VectorQ expand_monomial(const FreeNilpotentAlgebra& algebra, const Monomial& m) {
  const int len = static_cast<int>(m.indices.size());
  if (len < 1) throw std::invalid_argument("expand_monomial: empty monomial");
  if (len > algebra.step())
    throw std::invalid_argument("expand_monomial: monomial of length " + std::to_string(len) +
                                " exceeds nilpotency step " + std::to_string(algebra.step()));
  for (int i : m.indices)
    if (i < 0 || i >= algebra.generators()) throw std::invalid_argument("expand_monomial: generator index out of range");
  auto coords = algebra.hall().solve(len, left_normed_tensor(m, algebra.generators()));
  if (!coords) throw std::logic_error("left-normed monomial is not a Lie element");
  return to_dense(*coords, algebra.dimension());
}

}  // namespace nilhyp
