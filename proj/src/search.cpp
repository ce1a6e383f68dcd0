#include "nilhyp/search.hpp"

#include <array>
#include <numeric>
#include <random>
#include <sstream>

namespace nilhyp {

std::string kind_name(AlgebraSpec::Kind kind) {
  switch (kind) {
    case AlgebraSpec::Kind::free: return "free";
    case AlgebraSpec::Kind::quotient: return "quotient";
    case AlgebraSpec::Kind::metric: return "metric";
  }
  return "?";
}

std::string kind_name(CandidateSource::Kind kind) {
  switch (kind) {
    case CandidateSource::Kind::words: return "words";
    case CandidateSource::Kind::companion: return "companion";
    case CandidateSource::Kind::explicit_list: return "explicit";
  }
  return "?";
}

RealizedAlgebra::RealizedAlgebra(AlgebraSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case AlgebraSpec::Kind::free:
      free_ = build_free(spec_.q, spec_.k);
      algebra_ = free_->algebra_ptr();
      break;
    case AlgebraSpec::Kind::quotient: {
      free_ = build_free(spec_.q, spec_.k);
      quotient_ = quotient(*free_, ideal_closure(*free_, spec_.ideal_generators));
      algebra_ = quotient_->algebra;
      break;
    }
    case AlgebraSpec::Kind::metric:
      spec_.k = 2;
      metric_ = build_metric(StandardSubspace(spec_.q, spec_.w_pairs));
      spec_.w_pairs = metric_->subspace.pairs();  // canonical order
      algebra_ = metric_->algebra;
      break;
  }
}

std::optional<std::string> RealizedAlgebra::membership_violation(const MatrixQ& base) const {
  if (base.rows() != spec_.q || base.cols() != spec_.q) return "matrix is not " + std::to_string(spec_.q) + "x" + std::to_string(spec_.q);
  if (determinant(base) == 0) return "matrix is singular";
  switch (spec_.kind) {
    case AlgebraSpec::Kind::free: return std::nullopt;
    case AlgebraSpec::Kind::quotient:
      if (auto row = ideal_violation(extend(*free_, base), quotient_->ideal))
        return "extension moves ideal basis row " + std::to_string(*row) + " out of the ideal";
      return std::nullopt;
    case AlgebraSpec::Kind::metric:
      if (auto bad = subspace_violation(base, metric_->subspace))
        return "g moves " + skew_label(bad->first, spec_.q) + " onto " + skew_label(bad->second, spec_.q) +
               " outside W";
      return std::nullopt;
  }
  return std::nullopt;
}

GradedAutomorphism RealizedAlgebra::automorphism(const MatrixQ& base) const {
  if (auto why = membership_violation(base)) throw std::invalid_argument("not an automorphism: " + *why);
  switch (spec_.kind) {
    case AlgebraSpec::Kind::free: return extend(*free_, base);
    case AlgebraSpec::Kind::quotient: return induce(*quotient_, extend(*free_, base));
    case AlgebraSpec::Kind::metric: return metric_automorphism(*metric_, base);
  }
  throw std::logic_error("unknown algebra kind");
}

LatticeSpec RealizedAlgebra::standard_lattice() const { return LatticeSpec{top_term().basis()}; }

std::optional<Index> RealizedAlgebra::lattice_outside_top_term(const LatticeSpec& lattice) const {
  if (lattice.ambient_dimension() != dimension())
    throw std::invalid_argument("lattice ambient dimension " + std::to_string(lattice.ambient_dimension()) +
                                " does not match algebra dimension " + std::to_string(dimension()));
  for (Index r = 0; r < lattice.rank(); ++r)
    if (!top_term().contains(VectorQ(lattice.basis.row(r).transpose()))) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

void CandidateSource::validate(int q) const {
  if (kind == Kind::explicit_list) {
    for (size_t i = 0; i < explicit_list.size(); ++i)
      if (explicit_list[i].rows() != q || explicit_list[i].cols() != q)
        throw std::invalid_argument("explicit candidate " + std::to_string(i) + " is not " + std::to_string(q) + "x" +
                                    std::to_string(q));
    return;
  }
  if (block_sizes.empty()) throw std::invalid_argument("candidate source needs at least one block");
  for (int b : block_sizes)
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
  if (std::accumulate(block_sizes.begin(), block_sizes.end(), 0) != q)
    throw std::invalid_argument("block sizes do not add up to q = " + std::to_string(q));
  if (entry_bound < 1) throw std::invalid_argument("entry bound must be at least 1");
  if (kind == Kind::words && word_length < 0) throw std::invalid_argument("word length must be nonnegative");
}

namespace {

struct Draw {
  // The whole configuration feeds the seed, so changing any parameter
  // changes every draw.
  Draw(const CandidateSource& source, Index index) {
    auto split64 = [](std::uint64_t v) { return std::array<std::uint32_t, 2>{static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32)}; };
    std::vector<std::uint32_t> words;
    for (std::uint64_t v : {source.seed, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(source.kind),
                            static_cast<std::uint64_t>(source.entry_bound),
                            static_cast<std::uint64_t>(source.kind == CandidateSource::Kind::words ? source.word_length : 0)})
      for (std::uint32_t w : split64(v)) words.push_back(w);
    for (int b : source.block_sizes) words.push_back(static_cast<std::uint32_t>(b));
    std::seed_seq seq(words.begin(), words.end());
    engine.seed(seq);
  }
  long uniform(long lo, long hi) { return lo + static_cast<long>(engine() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::mt19937_64 engine;
};

MatrixQ companion_block(Draw& draw, int s, long bound, std::string& text) {
  // monic x^s + c_{s-1} x^{s-1} + ... + c_1 x + c_0 with c_0 = (-1)^s, so det = (-1)^s c_0 = 1
  std::vector<Rational> c(static_cast<size_t>(s) + 1, Rational(0));
  c[static_cast<size_t>(s)] = 1;
  c[0] = s % 2 == 0 ? 1 : -1;
  for (int i = 1; i < s; ++i) c[static_cast<size_t>(i)] = draw.uniform(-bound, bound);
  std::ostringstream os;
  os << "companion(" << PolynomialQ(c) << ")";
  text = os.str();
  MatrixQ m = MatrixQ::Zero(s, s);
  for (int i = 1; i < s; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < s; ++i) m(i, s - 1) = -c[static_cast<size_t>(i)];
  return m;
}

MatrixQ word_block(Draw& draw, int s, int length, long bound, std::string& text) {
  MatrixQ m = MatrixQ::Identity(s, s);
  std::ostringstream os;
  os << "word(";
  bool any = false;
  if (s >= 2) {
    for (int step = 0; step < length; ++step) {
      const long i = draw.uniform(0, s - 1);
      long j = draw.uniform(0, s - 2);
      if (j >= i) ++j;
      const long sign = draw.uniform(0, 1) == 0 ? 1 : -1;
      // row_i += sign * row_j, i.e. left multiplication by I + sign E_ij
      Eigen::Matrix<Rational, 1, Eigen::Dynamic> row = m.row(i) + Rational(sign) * m.row(j);
      bool fits = true;
      for (Index c = 0; c < s; ++c)
        if (abs(row(c)) > bound) fits = false;
      if (!fits) continue;  // keep the entry bound: drop this letter
      m.row(i) = row;
      os << (any ? " " : "") << (sign > 0 ? "+" : "-") << "E" << (i + 1) << (j + 1);
      any = true;
    }
  }
  os << ")";
  text = os.str();
  return m;
}

}  // namespace

Candidate generate_candidate(const CandidateSource& source, int q, Index index) {
  if (index < 0) throw std::invalid_argument("candidate index must be nonnegative");
  if (source.kind == CandidateSource::Kind::explicit_list) {
    if (index >= static_cast<Index>(source.explicit_list.size()))
      throw std::out_of_range("explicit candidate list has no entry " + std::to_string(index));
    return Candidate{index, source.explicit_list[static_cast<size_t>(index)], "explicit[" + std::to_string(index) + "]"};
  }
  source.validate(q);
  Draw draw(source, index);
  std::vector<MatrixQ> blocks;
  std::string description;
  for (int s : source.block_sizes) {
    std::string text;
    blocks.push_back(source.kind == CandidateSource::Kind::companion
                         ? companion_block(draw, s, source.entry_bound, text)
                         : word_block(draw, s, source.word_length, source.entry_bound, text));
    description += (description.empty() ? "" : " (+) ") + text;
  }
  return Candidate{index, block_diagonal(blocks), description};
}

std::vector<Candidate> generate_candidates(const CandidateSource& source, int q, Index count) {
  std::vector<Candidate> out;
  if (source.kind == CandidateSource::Kind::explicit_list)
    count = std::min<Index>(count, static_cast<Index>(source.explicit_list.size()));
  for (Index i = 0; i < count; ++i) out.push_back(generate_candidate(source, q, i));
  return out;
}

CandidateSource default_source(const AlgebraSpec& spec, std::uint64_t seed) {
  CandidateSource src;
  src.seed = seed;
  const auto so3 = AlgebraSpec::so3_metric(spec.q);
  if (spec.kind == AlgebraSpec::Kind::metric && spec.q >= 4 &&
      StandardSubspace(spec.q, spec.w_pairs).pairs() == StandardSubspace(spec.q, so3.w_pairs).pairs()) {
    src.kind = CandidateSource::Kind::companion;
    src.block_sizes = {3, spec.q - 3};
    src.entry_bound = 5;
  } else {
    src.kind = CandidateSource::Kind::words;
    src.block_sizes = {spec.q};
    src.entry_bound = 5;
    src.word_length = 12;
  }
  return src;
}

// ---------------------------------------------------------------------------

Evaluation evaluate(const RealizedAlgebra& algebra, const LatticeSpec& lattice, const MatrixQ& alpha) {
  Evaluation ev;
  ev.membership_failure = algebra.membership_violation(alpha);
  if (ev.membership_failure) return ev;
  ev.verdicts.in_automorphism_group = true;
  ev.automorphism = algebra.automorphism(alpha);
  ev.eigen = eigen_data(*ev.automorphism);
  ev.verdicts.hyperbolic = ev.eigen->hyperbolic;
  ev.verdicts.preserves_lattice = preserves_lattice(ev.automorphism->full, lattice);
  return ev;
}

SearchResult search(const RealizedAlgebra& algebra, const LatticeSpec& lattice, const CandidateSource& source,
                    Index budget) {
  lattice.validate();
  if (auto row = algebra.lattice_outside_top_term(lattice))
    throw std::invalid_argument("lattice generator " + std::to_string(*row) +
                                " does not lie in the top central-series term");
  source.validate(algebra.generators());
  if (source.kind == CandidateSource::Kind::explicit_list)
    budget = std::min<Index>(budget, static_cast<Index>(source.explicit_list.size()));

  SearchResult result;
  result.report.unit_root_by_grade.assign(static_cast<size_t>(algebra.algebra().top_grade()), 0);
  for (Index i = 0; i < budget; ++i) {
    Candidate cand = generate_candidate(source, algebra.generators(), i);
    Evaluation ev = evaluate(algebra, lattice, cand.matrix);
    ++result.report.examined;
    if (!ev.verdicts.in_automorphism_group) {
      ++result.report.group_failures;
      continue;
    }
    for (size_t m = 0; m < ev.eigen->unit_root_in_grade.size(); ++m)
      if (ev.eigen->unit_root_in_grade[m]) ++result.report.unit_root_by_grade[m];
    if (!ev.verdicts.hyperbolic) {
      ++result.report.hyperbolic_failures;
      continue;
    }
    if (!ev.verdicts.preserves_lattice) {
      ++result.report.lattice_failures;
      continue;
    }
    result.witness = std::move(cand);
    result.evaluation = std::move(ev);
    break;
  }
  return result;
}

}  // namespace nilhyp
