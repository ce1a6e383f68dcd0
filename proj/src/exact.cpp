#include "nilhyp/exact.hpp"

#include <cctype>

namespace nilhyp {

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
  const Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  Rational r(Integer{std::string(num)}, d);
  return negative ? Rational(-r) : r;
}

MatrixQ block_diagonal(const std::vector<MatrixQ>& blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  MatrixQ out = MatrixQ::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Subspace Subspace::span(const MatrixQ& rows) {
  Subspace s(rows.cols());
  auto ech = row_echelon(rows);
  s.basis_ = std::move(ech.reduced);
  s.pivots_ = std::move(ech.pivots);
  return s;
}

VectorQ Subspace::reduce(const VectorQ& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector dimension mismatch");
  VectorQ out = v;
  for (Index r = 0; r < basis_.rows(); ++r) {
    const Rational f = out(pivots_[r]);
    if (f != 0) subtract_row(out, f, r);
  }
  return out;
}

// Bases are usually sparse, so skip zero entries instead of a dense axpy.
void Subspace::subtract_row(VectorQ& v, const Rational& f, Index r) const {
  for (Index c = pivots_[r]; c < ambient_; ++c)
    if (basis_(r, c) != 0) v(c) -= f * basis_(r, c);
}

bool Subspace::contains(const VectorQ& v) const { return is_zero(reduce(v)); }

std::optional<VectorQ> Subspace::coordinates(const VectorQ& v) const {
  if (!contains(v)) return std::nullopt;
  VectorQ c(basis_.rows());
  for (Index r = 0; r < basis_.rows(); ++r) c(r) = v(pivots_[r]);
  return c;
}

bool Subspace::insert(const VectorQ& v) {
  VectorQ residual = reduce(v);
  Index lead = 0;
  while (lead < ambient_ && residual(lead) == 0) ++lead;
  if (lead == ambient_) return false;
  residual /= Rational(residual(lead));
  for (Index r = 0; r < basis_.rows(); ++r) {
    const Rational f = basis_(r, lead);
    if (f == 0) continue;
    for (Index c = lead; c < ambient_; ++c)
      if (residual(c) != 0) basis_(r, c) -= f * residual(c);
  }
  // keep rows sorted by pivot column
  Index at = 0;
  while (at < static_cast<Index>(pivots_.size()) && pivots_[at] < lead) ++at;
  MatrixQ grown(basis_.rows() + 1, ambient_);
  grown.topRows(at) = basis_.topRows(at);
  grown.row(at) = residual.transpose();
  grown.bottomRows(basis_.rows() - at) = basis_.bottomRows(basis_.rows() - at);
  basis_ = std::move(grown);
  pivots_.insert(pivots_.begin() + at, lead);
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Index r = 0; r < other.basis_.rows(); ++r)
    if (!contains(VectorQ(other.basis_.row(r).transpose()))) return false;
  return true;
}

std::optional<VectorQ> solve_in_row_span(const MatrixQ& rows, const VectorQ& v) {
  if (rows.cols() != v.size()) throw std::invalid_argument("solve_in_row_span: dimension mismatch");
  auto ech = row_echelon(rows);
  if (ech.rank() != rows.rows())
    throw std::invalid_argument("solve_in_row_span: rows are linearly dependent");
  VectorQ residual = v;
  VectorQ c(ech.rank());
  for (Index r = 0; r < ech.rank(); ++r) {
    c(r) = residual(ech.pivots[r]);
    if (c(r) != 0) residual -= c(r) * ech.reduced.row(r).transpose();
  }
  if (!is_zero(residual)) return std::nullopt;
  // v = c^T reduced = c^T transform rows
  return VectorQ(ech.transform.transpose() * c);
}

}  // namespace nilhyp
