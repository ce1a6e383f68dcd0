#include "nilhyp/certificate.hpp"

#include <limits>

namespace nilhyp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where + "." + key, "missing");
  return *it;
}

std::int64_t as_integer(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) fail(where, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

int as_int(const Json& j, const std::string& where, int lo, int hi) {
  const auto v = as_integer(j, where);
  if (v < lo || v > hi) fail(where, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::uint64_t as_unsigned(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(where, "expected a nonnegative integer");
}

const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get_ref<const std::string&>();
}

bool as_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get_ref<const std::string&>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_float()) fail(where, "floating-point numbers are not accepted; write rationals as \"p/q\"");
  return Rational(Integer(as_integer(j, where)));
}

std::string at(const std::string& where, size_t i) { return where + "[" + std::to_string(i) + "]"; }

Json scalar_to_json(const Rational& r) {
  // integers that fit in 64 bits are written as numbers, everything else as "p/q"
  if (is_integral(r)) {
    const Integer n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return n.convert_to<std::int64_t>();
  }
  return to_string(r);
}

Json pair_to_json(SkewPair p) { return Json::array({p.i + 1, p.j + 1}); }

Json provenance_to_json(const Provenance& p) {
  Json j;
  j["source"] = p.source;
  if (p.source == "conjugated") {
    j["conjugator"] = matrix_to_json(p.conjugator);
    j["parent_alpha"] = matrix_to_json(p.parent_alpha);
    j["parent_lattice"] = matrix_to_json(p.parent_lattice);
    return j;
  }
  if (p.source != "explicit") j["seed"] = p.seed;
  j["candidate_index"] = p.candidate_index;
  if (p.source != "explicit") {
    j["block_sizes"] = p.block_sizes;
    j["entry_bound"] = p.entry_bound;
  }
  if (p.source == "words") j["word_length"] = p.word_length;
  j["description"] = p.description;
  j["lattice"] = p.lattice ? matrix_to_json(*p.lattice) : Json("standard");
  return j;
}

Provenance provenance_from_json(const Json& j, int q) {
  const std::string where = "provenance";
  Provenance p;
  p.source = as_string(field(j, "source", where), where + ".source");
  if (p.source == "conjugated") {
    p.conjugator = matrix_from_json(field(j, "conjugator", where), where + ".conjugator");
    p.parent_alpha = matrix_from_json(field(j, "parent_alpha", where), where + ".parent_alpha");
    p.parent_lattice = matrix_from_json(field(j, "parent_lattice", where), where + ".parent_lattice");
    if (p.conjugator.rows() != q || p.conjugator.cols() != q) fail(where + ".conjugator", "expected a q x q matrix");
    if (p.parent_alpha.rows() != q || p.parent_alpha.cols() != q) fail(where + ".parent_alpha", "expected a q x q matrix");
    return p;
  }
  if (p.source != "companion" && p.source != "words" && p.source != "explicit")
    fail(where + ".source", "unknown source \"" + p.source + "\"");
  p.candidate_index = static_cast<Index>(as_unsigned(field(j, "candidate_index", where), where + ".candidate_index"));
  p.description = as_string(field(j, "description", where), where + ".description");
  const Json& lat = field(j, "lattice", where);
  if (lat.is_string()) {
    if (lat.get<std::string>() != "standard") fail(where + ".lattice", "expected \"standard\" or a matrix");
  } else {
    p.lattice = matrix_from_json(lat, where + ".lattice");
  }
  if (p.source == "explicit") return p;
  p.seed = as_unsigned(field(j, "seed", where), where + ".seed");
  const Json& blocks = as_array(field(j, "block_sizes", where), where + ".block_sizes");
  for (size_t i = 0; i < blocks.size(); ++i) p.block_sizes.push_back(as_int(blocks[i], at(where + ".block_sizes", i), 1, q));
  p.entry_bound = static_cast<long>(as_integer(field(j, "entry_bound", where), where + ".entry_bound"));
  if (p.source == "words") p.word_length = as_int(field(j, "word_length", where), where + ".word_length", 0, 1 << 20);
  return p;
}

Index free_dimension(int q, int k) {
  double size = 1;
  for (int m = 0; m < k; ++m) size *= q;
  if (size > static_cast<double>(kMaxTensorDimension))
    throw ResourceError("free algebra with q = " + std::to_string(q) + ", k = " + std::to_string(k) +
                        " exceeds the supported size envelope");
  Index n = 0;
  for (int m = 1; m <= k; ++m) n += witt_dimension(q, m);
  return n;
}

std::string show(const Rational& r) { return to_string(r); }

}  // namespace

Json matrix_to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixQ matrix_from_json(const Json& j, const std::string& where) {
  const Json& rows = as_array(j, where);
  if (rows.empty()) fail(where, "matrix has no rows");
  const Json& first = as_array(rows[0], at(where, 0));
  if (first.empty()) fail(at(where, 0), "matrix has no columns");
  MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(first.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    const Json& row = as_array(rows[r], at(where, r));
    if (row.size() != first.size()) fail(at(where, r), "rows have different lengths");
    for (size_t c = 0; c < row.size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = as_rational(row[c], at(at(where, r), c));
  }
  return m;
}

Json to_json(const AlgebraSpec& spec) {
  Json j;
  j["type"] = kind_name(spec.kind);
  j["q"] = spec.q;
  if (spec.kind != AlgebraSpec::Kind::metric) j["k"] = spec.k;
  if (spec.kind == AlgebraSpec::Kind::quotient) {
    Json gens = Json::array();
    for (const auto& g : spec.ideal_generators) {
      Json row = Json::array();
      for (Index i = 0; i < g.size(); ++i) row.push_back(to_string(g(i)));
      gens.push_back(std::move(row));
    }
    j["ideal_generators"] = std::move(gens);
  }
  if (spec.kind == AlgebraSpec::Kind::metric) {
    Json pairs = Json::array();
    for (const auto& p : spec.w_pairs) pairs.push_back(pair_to_json(p));
    j["W_pairs"] = std::move(pairs);
  }
  return j;
}

AlgebraSpec algebra_spec_from_json(const Json& j, const std::string& where) {
  AlgebraSpec spec;
  const std::string& type = as_string(field(j, "type", where), where + ".type");
  spec.q = as_int(field(j, "q", where), where + ".q", 2, 64);
  if (type == "free" || type == "quotient") {
    spec.kind = type == "free" ? AlgebraSpec::Kind::free : AlgebraSpec::Kind::quotient;
    spec.k = as_int(field(j, "k", where), where + ".k", 1, 64);
    if (spec.kind == AlgebraSpec::Kind::quotient) {
      const Index n = free_dimension(spec.q, spec.k);
      const Json& gens = as_array(field(j, "ideal_generators", where), where + ".ideal_generators");
      for (size_t g = 0; g < gens.size(); ++g) {
        const std::string w = at(where + ".ideal_generators", g);
        const Json& row = as_array(gens[g], w);
        if (static_cast<Index>(row.size()) != n)
          fail(w, "expected " + std::to_string(n) + " Hall-basis coordinates, got " + std::to_string(row.size()));
        VectorQ v(n);
        for (size_t c = 0; c < row.size(); ++c) v(static_cast<Index>(c)) = as_rational(row[c], at(w, c));
        spec.ideal_generators.push_back(std::move(v));
      }
    }
  } else if (type == "metric") {
    spec.kind = AlgebraSpec::Kind::metric;
    spec.k = 2;
    const Json& pairs = as_array(field(j, "W_pairs", where), where + ".W_pairs");
    for (size_t p = 0; p < pairs.size(); ++p) {
      const std::string w = at(where + ".W_pairs", p);
      const Json& pair = as_array(pairs[p], w);
      if (pair.size() != 2) fail(w, "expected [i, j]");
      const int a = as_int(pair[0], at(w, 0), 1, spec.q), b = as_int(pair[1], at(w, 1), 1, spec.q);
      if (a >= b) fail(w, "pairs need i < j");
      spec.w_pairs.push_back({a - 1, b - 1});
    }
    try {
      StandardSubspace(spec.q, spec.w_pairs);
    } catch (const std::invalid_argument& e) {
      fail(where + ".W_pairs", e.what());
    }
  } else {
    fail(where + ".type", "unknown algebra type \"" + type + "\"");
  }
  return spec;
}

Json to_json(const Certificate& cert) {
  Json j;
  j["format_version"] = kCertificateFormatVersion;
  j["algebra"] = to_json(cert.algebra);
  j["alpha"] = matrix_to_json(cert.alpha);
  j["lattice"] = Json{{"ambient_dimension", cert.lattice.ambient_dimension()}, {"basis", matrix_to_json(cert.lattice.basis)}};
  Json polys = Json::array();
  for (const auto& p : cert.grade_char_polys) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(scalar_to_json(c));
    polys.push_back(std::move(coeffs));
  }
  j["grade_char_polys"] = std::move(polys);
  j["verdicts"] = Json{{"in_automorphism_group", cert.verdicts.in_automorphism_group},
                       {"hyperbolic", cert.verdicts.hyperbolic},
                       {"preserves_lattice", cert.verdicts.preserves_lattice}};
  j["enumeration"] = Json{{"pair_ordering", "lexicographic"}, {"basis_labels", cert.basis_labels}};
  j["provenance"] = provenance_to_json(cert.provenance);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) fail("certificate", "expected a JSON object");
  const int version = as_int(field(j, "format_version", "certificate"), "format_version", 0, 1 << 30);
  if (version != kCertificateFormatVersion) fail("format_version", "unsupported version " + std::to_string(version));
  Certificate cert;
  cert.algebra = algebra_spec_from_json(field(j, "algebra", "certificate"));
  const int q = cert.algebra.q;
  cert.alpha = matrix_from_json(field(j, "alpha", "certificate"), "alpha");
  if (cert.alpha.rows() != q || cert.alpha.cols() != q)
    fail("alpha", "expected a " + std::to_string(q) + "x" + std::to_string(q) + " matrix");

  const Json& lat = field(j, "lattice", "certificate");
  const Index ambient = static_cast<Index>(as_unsigned(field(lat, "ambient_dimension", "lattice"), "lattice.ambient_dimension"));
  cert.lattice.basis = matrix_from_json(field(lat, "basis", "lattice"), "lattice.basis");
  if (cert.lattice.basis.cols() != ambient)
    fail("lattice.ambient_dimension", "basis rows have " + std::to_string(cert.lattice.basis.cols()) + " entries, not " +
                                          std::to_string(ambient));

  const Json& polys = as_array(field(j, "grade_char_polys", "certificate"), "grade_char_polys");
  for (size_t g = 0; g < polys.size(); ++g) {
    const Json& coeffs = as_array(polys[g], at("grade_char_polys", g));
    std::vector<Rational> c;
    for (size_t i = 0; i < coeffs.size(); ++i) c.push_back(as_rational(coeffs[i], at(at("grade_char_polys", g), i)));
    cert.grade_char_polys.emplace_back(std::move(c));
  }

  const Json& v = field(j, "verdicts", "certificate");
  cert.verdicts.in_automorphism_group = as_bool(field(v, "in_automorphism_group", "verdicts"), "verdicts.in_automorphism_group");
  cert.verdicts.hyperbolic = as_bool(field(v, "hyperbolic", "verdicts"), "verdicts.hyperbolic");
  cert.verdicts.preserves_lattice = as_bool(field(v, "preserves_lattice", "verdicts"), "verdicts.preserves_lattice");

  const Json& en = field(j, "enumeration", "certificate");
  const std::string& ordering = as_string(field(en, "pair_ordering", "enumeration"), "enumeration.pair_ordering");
  if (ordering != "lexicographic") fail("enumeration.pair_ordering", "unsupported ordering \"" + ordering + "\"");
  const Json& labels = as_array(field(en, "basis_labels", "enumeration"), "enumeration.basis_labels");
  for (size_t i = 0; i < labels.size(); ++i) cert.basis_labels.push_back(as_string(labels[i], at("enumeration.basis_labels", i)));

  cert.provenance = provenance_from_json(field(j, "provenance", "certificate"), q);
  return cert;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Certificate make_certificate(const RealizedAlgebra& algebra, const LatticeSpec& lattice, const CandidateSource& source,
                             const Candidate& witness, const Evaluation& evaluation) {
  Certificate cert;
  cert.algebra = algebra.spec();
  cert.alpha = witness.matrix;
  cert.lattice = lattice;
  if (evaluation.eigen) cert.grade_char_polys = evaluation.eigen->grade_char_polys;
  cert.verdicts = evaluation.verdicts;
  cert.basis_labels = algebra.algebra().labels();
  Provenance& p = cert.provenance;
  p.source = kind_name(source.kind);
  p.candidate_index = witness.index;
  p.description = witness.description;
  if (lattice.basis != algebra.standard_lattice().basis) p.lattice = lattice.basis;
  if (source.kind != CandidateSource::Kind::explicit_list) {
    p.seed = source.seed;
    p.block_sizes = source.block_sizes;
    p.entry_bound = source.entry_bound;
    p.word_length = source.word_length;
  }
  return cert;
}

namespace {

VerifyResult reject(std::string diagnostic) { return VerifyResult{false, std::move(diagnostic)}; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::optional<std::string> same_lattice(const MatrixQ& stored, const MatrixQ& expected, const std::string& source) {
  if (stored.rows() != expected.rows() || stored.cols() != expected.cols())
    return "lattice.basis: " + std::to_string(stored.rows()) + " rows stored, " + source + " has " +
           std::to_string(expected.rows());
  for (Index r = 0; r < stored.rows(); ++r)
    for (Index c = 0; c < stored.cols(); ++c)
      if (stored(r, c) != expected(r, c))
        return "lattice.basis[" + std::to_string(r) + "][" + std::to_string(c) + "]: stored " + show(stored(r, c)) + ", " +
               source + " has " + show(expected(r, c));
  return std::nullopt;
}

std::optional<std::string> check_provenance(const Certificate& cert, const RealizedAlgebra& algebra) {
  const Provenance& p = cert.provenance;
  if (p.source == "conjugated") {
    if (auto why = algebra.membership_violation(p.conjugator)) return "provenance.conjugator: " + *why;
    if (p.parent_lattice.cols() != algebra.dimension())
      return "provenance.parent_lattice: rows do not have the algebra's dimension";
    const MatrixQ& g = p.conjugator;
    if (cert.alpha != MatrixQ(g * p.parent_alpha * inverse(g)))
      return "provenance.parent_alpha: alpha is not conjugator * parent_alpha * conjugator^-1";
    const MatrixQ rho = algebra.automorphism(g).full;
    return same_lattice(cert.lattice.basis, MatrixQ(p.parent_lattice * rho.transpose()),
                        "the image of provenance.parent_lattice");
  }
  if (auto why = p.lattice ? same_lattice(cert.lattice.basis, *p.lattice, "provenance.lattice")
                           : same_lattice(cert.lattice.basis, algebra.standard_lattice().basis, "the standard lattice"))
    return why;
  CandidateSource src;
  if (p.source == "explicit") {
    if (p.description != "explicit[" + std::to_string(p.candidate_index) + "]")
      return "provenance.description: does not name explicit entry " + std::to_string(p.candidate_index);
    return std::nullopt;
  }
  src.kind = p.source == "companion" ? CandidateSource::Kind::companion : CandidateSource::Kind::words;
  src.seed = p.seed;
  src.block_sizes = p.block_sizes;
  src.entry_bound = p.entry_bound;
  src.word_length = p.word_length;
  try {
    src.validate(algebra.generators());
  } catch (const std::invalid_argument& e) {
    return std::string("provenance.block_sizes: ") + e.what();
  }
  const Candidate regenerated = generate_candidate(src, algebra.generators(), p.candidate_index);
  if (regenerated.matrix != cert.alpha)
    return "provenance: candidate " + std::to_string(p.candidate_index) + " of the " + p.source + " stream with seed " +
           std::to_string(p.seed) + " is not alpha";
  if (regenerated.description != p.description)
    return "provenance.description: stored \"" + p.description + "\", regenerated \"" + regenerated.description + "\"";
  return std::nullopt;
}

}  // namespace

VerifyResult verify(const Certificate& cert) {
  std::optional<RealizedAlgebra> realized;
  try {
    realized.emplace(cert.algebra);
  } catch (const std::invalid_argument& e) {
    return reject(std::string("algebra: ") + e.what());
  }
  const RealizedAlgebra& algebra = *realized;

  const auto labels = algebra.algebra().labels();
  if (cert.basis_labels.size() != labels.size())
    return reject("enumeration.basis_labels: " + std::to_string(cert.basis_labels.size()) + " labels, algebra has " +
                  std::to_string(labels.size()));
  for (size_t i = 0; i < labels.size(); ++i)
    if (cert.basis_labels[i] != labels[i])
      return reject("enumeration.basis_labels[" + std::to_string(i) + "]: stored \"" + cert.basis_labels[i] +
                    "\", recomputed \"" + labels[i] + "\"");

  if (cert.lattice.ambient_dimension() != algebra.dimension())
    return reject("lattice.ambient_dimension: " + std::to_string(cert.lattice.ambient_dimension()) +
                  ", algebra dimension is " + std::to_string(algebra.dimension()));
  if (rank(cert.lattice.basis) != cert.lattice.rank()) return reject("lattice.basis: rows are linearly dependent");
  if (auto row = algebra.lattice_outside_top_term(cert.lattice))
    return reject("lattice.basis[" + std::to_string(*row) + "]: not in the top central-series term");

  if (auto why = check_provenance(cert, algebra)) return reject(*why);

  const Evaluation ev = evaluate(algebra, cert.lattice, cert.alpha);
  if (!ev.verdicts.in_automorphism_group)
    return reject("verdicts.in_automorphism_group: recomputed false (" + *ev.membership_failure + ")");

  const auto& polys = ev.eigen->grade_char_polys;
  if (cert.grade_char_polys.size() != polys.size())
    return reject("grade_char_polys: " + std::to_string(cert.grade_char_polys.size()) + " grades stored, " +
                  std::to_string(polys.size()) + " recomputed");
  for (size_t g = 0; g < polys.size(); ++g) {
    const PolynomialQ& stored = cert.grade_char_polys[g];
    const int top = std::max(stored.degree(), polys[g].degree());
    for (int i = 0; i <= top; ++i)
      if (stored.coefficient(i) != polys[g].coefficient(i))
        return reject("grade_char_polys[" + std::to_string(g) + "] (grade " + std::to_string(g + 1) + "): coefficient " +
                      std::to_string(i) + " stored " + show(stored.coefficient(i)) + ", recomputed " +
                      show(polys[g].coefficient(i)));
  }

  const std::pair<const char*, std::pair<bool, bool>> verdicts[] = {
      {"hyperbolic", {cert.verdicts.hyperbolic, ev.verdicts.hyperbolic}},
      {"preserves_lattice", {cert.verdicts.preserves_lattice, ev.verdicts.preserves_lattice}},
      {"in_automorphism_group", {cert.verdicts.in_automorphism_group, ev.verdicts.in_automorphism_group}},
  };
  for (const auto& [name, values] : verdicts)
    if (values.first != values.second)
      return reject(std::string("verdicts.") + name + ": stored " + yes_no(values.first) + ", recomputed " +
                    yes_no(values.second));
  for (const auto& [name, values] : verdicts)
    if (!values.second) return reject(std::string("verdicts.") + name + ": recomputed false");
  return VerifyResult{true, ""};
}

VerifyResult verify(const Json& document) { return verify(certificate_from_json(document)); }

TransportResult transport(const Certificate& cert, const MatrixQ& g) {
  const RealizedAlgebra algebra(cert.algebra);
  if (g.rows() != algebra.generators() || g.cols() != algebra.generators())
    throw std::invalid_argument("conjugator must be " + std::to_string(algebra.generators()) + "x" +
                                std::to_string(algebra.generators()));
  if (auto why = algebra.membership_violation(g)) throw std::invalid_argument("conjugator induces no automorphism: " + *why);
  const MatrixQ rho = algebra.automorphism(g).full;
  const ConjugatedPair moved = conjugate_certificate(cert.alpha, g, cert.lattice, rho);

  TransportResult out;
  out.conjugator_in_group = determinant(g) == 1;
  Certificate& c = out.certificate;
  c.algebra = algebra.spec();
  c.alpha = moved.alpha;
  c.lattice = moved.lattice;
  const Evaluation ev = evaluate(algebra, c.lattice, c.alpha);
  if (ev.eigen) c.grade_char_polys = ev.eigen->grade_char_polys;
  c.verdicts = ev.verdicts;
  c.basis_labels = algebra.algebra().labels();
  c.provenance.source = "conjugated";
  c.provenance.conjugator = g;
  c.provenance.parent_alpha = cert.alpha;
  c.provenance.parent_lattice = cert.lattice.basis;
  return out;
}

}  // namespace nilhyp
