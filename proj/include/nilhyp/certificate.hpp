#pragma once

// Self-contained JSON certificates for hyperbolic lattice-preserving
// automorphisms, their verification from scratch, and transport by
// conjugation.

#include "nilhyp/search.hpp"

#include "json.hpp"

namespace nilhyp {

using Json = nlohmann::ordered_json;

/// Malformed document: distinct from a well-formed certificate that fails to verify.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kCertificateFormatVersion = 1;

struct Provenance {
  std::string source;  // "companion", "words", "explicit" or "conjugated"
  // generated sources
  std::uint64_t seed = 0;
  Index candidate_index = 0;
  std::vector<int> block_sizes;
  long entry_bound = 0;
  int word_length = 0;
  std::string description;
  /// Lattice the search was given: nullopt for the algebra's standard
  /// lattice, else a copy of the supplied basis.
  std::optional<MatrixQ> lattice;
  // conjugated certificates: alpha = g parent_alpha g^-1, lattice = parent_lattice rho_g^T
  MatrixQ conjugator;
  MatrixQ parent_alpha;
  MatrixQ parent_lattice;
};

struct Certificate {
  AlgebraSpec algebra;
  MatrixQ alpha;
  LatticeSpec lattice;
  std::vector<PolynomialQ> grade_char_polys;
  Verdicts verdicts;
  std::vector<std::string> basis_labels;
  Provenance provenance;
};

// JSON forms: rationals as "p/q" strings, matrices row-major, polynomials
// lowest degree first (integers as numbers when they fit in 64 bits).
Json to_json(const AlgebraSpec& spec);
Json to_json(const Certificate& cert);
/// Throws ParseError naming the offending field.
AlgebraSpec algebra_spec_from_json(const Json& j, const std::string& where = "algebra");
Certificate certificate_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const MatrixQ& m);
/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Certificate for a search witness.
Certificate make_certificate(const RealizedAlgebra& algebra, const LatticeSpec& lattice, const CandidateSource& source,
                             const Candidate& witness, const Evaluation& evaluation);

struct VerifyResult {
  bool ok = false;
  /// "field: what differs" for the first mismatch; empty when ok.
  std::string diagnostic;
};

/// Rebuilds the algebra, re-derives alpha's automorphism, polynomials and all
/// three verdicts, and compares with the document. Stored verdicts are only
/// compared against, never trusted.
VerifyResult verify(const Certificate& cert);
/// Parses first; throws ParseError for malformed input.
VerifyResult verify(const Json& document);

struct TransportResult {
  Certificate certificate;
  /// det g = 1 as well as inducing an automorphism, i.e. g lies in the
  /// determinant-one stabilizer rather than merely acting on the algebra.
  bool conjugator_in_group = false;
};

/// alpha' = g alpha g^-1 and lattice' = rho_g(lattice), where rho_g is g's
/// automorphism of the algebra. Any g that acts on the algebra is accepted
/// and the group flag reports det g = 1. Throws std::invalid_argument when g
/// induces no automorphism (a quotient ideal or W not preserved, or g singular).
TransportResult transport(const Certificate& cert, const MatrixQ& g);

}  // namespace nilhyp
