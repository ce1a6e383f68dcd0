#include "nilhyp/cli.hpp"

#include "nilhyp/certificate.hpp"
#include "nilhyp/numeric.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace nilhyp {

namespace {

/// Input problem detected after argument parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": not valid JSON (" + e.what() + ")");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

int parse_index(const std::string& s, const std::string& what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(what + ": \"" + s + "\" is not an integer");
  return v;
}

// "1.2,1.3,2.3" (1-based)
std::vector<SkewPair> parse_w(const std::string& text, int q) {
  std::vector<SkewPair> pairs;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, '.');
    if (parts.size() != 2) throw UsageError("--W: expected pairs like 1.2, got \"" + item + "\"");
    const int i = parse_index(parts[0], "--W"), j = parse_index(parts[1], "--W");
    if (i < 1 || j > q || i >= j) throw UsageError("--W: pair " + item + " needs 1 <= i < j <= q");
    pairs.push_back({i - 1, j - 1});
  }
  if (pairs.empty()) throw UsageError("--W: no pairs given");
  return pairs;
}

// "a,b;c,d" or a JSON file holding a row-major matrix
MatrixQ parse_matrix(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) return matrix_from_json(parse_json_text(read_file(text), text), text);
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<Rational> r;
    for (const auto& entry : split(row, ',')) {
      try {
        r.push_back(parse_rational(entry));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--matrix: ") + e.what());
      }
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows[0].empty()) throw UsageError("--matrix: empty matrix");
  MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw UsageError("--matrix: rows have different lengths");
    for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return m;
}

std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_index(item, "--block-sizes"));
  return out;
}

struct AlgebraOptions {
  int q = 0;
  int k = 2;
  std::string w;
  std::string file;

  void add_to(CLI::App* app) {
    app->add_option("--q", q, "number of generators");
    app->add_option("--k", k, "nilpotency step of the free algebra")->capture_default_str();
    app->add_option("--W", w, "standard subspace for the metric algebra, e.g. 1.2,1.3,2.3");
    app->add_option("--algebra", file, "algebra spec JSON file (free, quotient or metric)");
  }

  AlgebraSpec spec() const {
    if (!file.empty()) return algebra_spec_from_json(parse_json_text(read_file(file), file));
    if (q < 2) throw UsageError("--q (at least 2) or --algebra is required");
    if (!w.empty()) return AlgebraSpec::metric(q, parse_w(w, q));
    return AlgebraSpec::free_algebra(q, k);
  }
};

LatticeSpec lattice_from(const std::string& arg, const RealizedAlgebra& algebra) {
  if (arg.empty() || arg == "standard") return algebra.standard_lattice();
  const Json j = parse_json_text(read_file(arg), arg);
  LatticeSpec lat{matrix_from_json(j.is_object() && j.contains("basis") ? j.at("basis") : j, arg)};
  try {
    lat.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(arg + ": " + e.what());
  }
  if (lat.ambient_dimension() != algebra.dimension())
    throw UsageError(arg + ": lattice rows must have " + std::to_string(algebra.dimension()) + " entries");
  return lat;
}

void print_matrix(std::ostream& out, const MatrixQ& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.rows()));
  size_t width = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      cells[static_cast<size_t>(i)].push_back(to_string(m(i, j)));
      width = std::max(width, cells[static_cast<size_t>(i)].back().size());
    }
  for (const auto& row : cells) {
    out << indent;
    for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << std::setw(static_cast<int>(width)) << row[j];
    out << "\n";
  }
}

void print_algebra(std::ostream& out, const RealizedAlgebra& realized) {
  const auto& alg = realized.algebra();
  const auto& spec = realized.spec();
  out << "algebra: " << kind_name(spec.kind) << " q=" << spec.q;
  if (spec.kind != AlgebraSpec::Kind::metric) out << " k=" << spec.k;
  out << (alg.graded() ? "" : " (filtered, not graded)") << "\n";
  out << "dimension: " << alg.dimension() << "\ngrade dimensions:";
  for (Index d : alg.grade_dimensions()) out << " " << d;
  out << "\ncentral series dimensions:";
  for (const auto& t : alg.central_series()) out << " " << t.dimension();
  out << "\nbasis:\n";
  for (Index i = 0; i < alg.dimension(); ++i)
    out << "  " << std::setw(3) << i << "  " << alg.element(i).label << "  grade " << alg.element(i).grade << "\n";
  out << "brackets:\n";
  for (Index i = 0; i < alg.dimension(); ++i)
    for (Index j = i + 1; j < alg.dimension(); ++j) {
      const auto& v = alg.structure(i, j);
      if (v.empty()) continue;
      out << "  [" << alg.element(i).label << ", " << alg.element(j).label << "] =";
      bool first = true;
      for (const auto& [c, coeff] : v) {
        out << (coeff < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
        first = false;
        const Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
        if (mag != 1) out << to_string(mag) << " ";
        out << alg.element(c).label;
      }
      out << "\n";
    }
}

void print_eigen(std::ostream& out, const GradedAutomorphism& aut, const EigenvalueData& data) {
  for (int m = 1; m <= aut.grade_count(); ++m) {
    const size_t g = static_cast<size_t>(m - 1);
    out << "grade " << m << ":\n";
    print_matrix(out, aut.grade_matrix(m), "    ");
    out << "  char poly: " << data.grade_char_polys[g] << "\n";
    out << "  unit-modulus eigenvalue: " << (data.unit_root_in_grade[g] ? "yes" : "no") << "\n";
    out << "  eigenvalue products:";
    for (const auto& w : data.product_indices[g]) {
      out << " ";
      for (size_t i = 0; i < w.size(); ++i) out << (i ? "*" : "") << "a" << (w[i] + 1);
    }
    out << "\n";
  }
  out << "hyperbolic: " << (data.hyperbolic ? "true" : "false") << "\n";
}

void print_report(std::ostream& err, const SearchReport& r) {
  err << "search exhausted: no witness among " << r.examined << " candidates\n"
      << "  failed automorphism-group membership: " << r.group_failures << "\n"
      << "  failed hyperbolicity: " << r.hyperbolic_failures << "\n"
      << "  failed lattice preservation: " << r.lattice_failures << "\n"
      << "  unit-modulus eigenvalue by grade:";
  for (size_t m = 0; m < r.unit_root_by_grade.size(); ++m) err << " " << (m + 1) << ":" << r.unit_root_by_grade[m];
  err << "\nThis is a budget report, not a proof that no witness exists.\n";
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

struct SearchOptions {
  std::string lattice = "standard";
  std::uint64_t seed = 1;
  Index budget = 10000;
  std::string source;
  std::string candidates;
  std::string blocks;
  long entry_bound = 5;
  int word_length = 12;
  std::string out;

  void add_to(CLI::App* app) {
    app->add_option("--lattice", lattice, "\"standard\" or a JSON file of lattice rows")->capture_default_str();
    app->add_option("--seed", seed, "candidate stream seed")->capture_default_str();
    app->add_option("--budget", budget, "number of candidates to examine")->capture_default_str();
    app->add_option("--source", source, "candidate source")->check(CLI::IsMember({"words", "companion", "file"}));
    app->add_option("--candidates", candidates, "JSON file with a list of matrices (for --source file)");
    app->add_option("--block-sizes", blocks, "diagonal block sizes, e.g. 3,3");
    app->add_option("--entry-bound", entry_bound, "coefficient / entry bound")->capture_default_str();
    app->add_option("--word-length", word_length, "letters per elementary word")->capture_default_str();
    app->add_option("--out", out, "write the certificate here instead of standard output");
  }

  CandidateSource source_for(const AlgebraSpec& spec) const {
    CandidateSource src = default_source(spec, seed);
    if (source == "file") {
      if (candidates.empty()) throw UsageError("--source file needs --candidates FILE");
      const Json j = parse_json_text(read_file(candidates), candidates);
      if (!j.is_array()) throw ParseError(candidates + ": expected an array of matrices");
      src.kind = CandidateSource::Kind::explicit_list;
      for (size_t i = 0; i < j.size(); ++i)
        src.explicit_list.push_back(matrix_from_json(j[i], candidates + "[" + std::to_string(i) + "]"));
      return src;
    }
    if (source == "words") {
      src.kind = CandidateSource::Kind::words;
      if (src.block_sizes.size() == 2 && blocks.empty()) src.block_sizes = {spec.q};
    }
    if (source == "companion") src.kind = CandidateSource::Kind::companion;
    if (!blocks.empty()) src.block_sizes = parse_blocks(blocks);
    src.entry_bound = entry_bound;
    src.word_length = word_length;
    try {
      src.validate(spec.q);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return src;
  }
};

/// Search, certify, self-verify; returns the exit code.
int run_search(const RealizedAlgebra& realized, const LatticeSpec& lattice, const CandidateSource& src, Index budget,
               const std::string& out_path, bool oracle, std::ostream& out, std::ostream& err) {
  const SearchResult result = search(realized, lattice, src, budget);
  if (!result.witness) {
    print_report(err, result.report);
    return 1;
  }
  const Certificate cert = make_certificate(realized, lattice, src, *result.witness, *result.evaluation);
  const std::string text = dump(to_json(cert));
  const VerifyResult check = verify(parse_json_text(text, "certificate"));
  if (!check.ok) {
    err << "internal error: emitted certificate does not verify: " << check.diagnostic << "\n";
    return 1;
  }
  err << "witness: candidate " << result.witness->index << " of " << result.report.examined << " examined: "
      << result.witness->description << "\n";
  if (oracle) {
    const double gap = unit_modulus_gap(result.evaluation->automorphism->full);
    err << "float oracle: min | |lambda| - 1 | = " << std::setprecision(6) << gap
        << (gap > 1e-6 ? " (confirms hyperbolic)" : " (NOT decisive at 1e-6)") << "\n";
  }
  write_output(text, out_path, out);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and certification of hyperbolic lattice-preserving automorphisms of nilpotent Lie algebras",
               "nilhyp"};
  app.require_subcommand(1);

  AlgebraOptions alg_opts;
  SearchOptions search_opts;
  std::string matrix_text, lattice_arg = "standard", verify_path = "-", cert_path, out_path;
  int example_q = 6;

  auto* algebra_cmd = app.add_subcommand("algebra", "build an algebra and print dimensions and structure constants");
  alg_opts.add_to(algebra_cmd);

  auto* extend_cmd = app.add_subcommand("extend", "extend a q x q matrix to the graded automorphism and report eigenvalue data");
  alg_opts.add_to(extend_cmd);
  extend_cmd->add_option("--matrix", matrix_text, "matrix \"a,b;c,d\" or JSON file")->required();

  auto* check_cmd = app.add_subcommand("check", "membership, hyperbolicity and lattice verdicts for one matrix");
  alg_opts.add_to(check_cmd);
  check_cmd->add_option("--matrix", matrix_text, "matrix \"a,b;c,d\" or JSON file")->required();
  check_cmd->add_option("--lattice", lattice_arg, "\"standard\" or a JSON file of lattice rows")->capture_default_str();

  auto* search_cmd = app.add_subcommand("search", "search a candidate stream and emit a certificate");
  alg_opts.add_to(search_cmd);
  search_opts.add_to(search_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "re-derive a certificate from scratch");
  verify_cmd->add_option("file", verify_path, "certificate file (default: standard input)");

  auto* example_cmd = app.add_subcommand("paper-example", "metric algebra R^q + span(e12, e13, e23) with its standard lattice");
  example_cmd->add_option("--q", example_q, "number of generators")->capture_default_str();
  example_cmd->add_option("--seed", search_opts.seed, "candidate stream seed")->capture_default_str();
  example_cmd->add_option("--budget", search_opts.budget, "number of candidates to examine")->capture_default_str();
  example_cmd->add_option("--out", search_opts.out, "write the certificate here instead of standard output");

  auto* transport_cmd = app.add_subcommand("transport", "conjugate a certificate by g: alpha' = g alpha g^-1, lattice' = rho(g) lattice");
  transport_cmd->add_option("--cert", cert_path, "certificate file")->required();
  transport_cmd->add_option("--matrix", matrix_text, "conjugator g, \"a,b;c,d\" or JSON file")->required();
  transport_cmd->add_option("--out", out_path, "write the certificate here instead of standard output");

  std::vector<std::string> argv_storage{"nilhyp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*algebra_cmd) {
      print_algebra(out, RealizedAlgebra(alg_opts.spec()));
      return 0;
    }
    if (*extend_cmd) {
      const RealizedAlgebra realized(alg_opts.spec());
      const MatrixQ m = parse_matrix(matrix_text);
      if (auto why = realized.membership_violation(m)) {
        out << "in automorphism group: false (" << *why << ")\n";
        return 1;
      }
      const auto aut = realized.automorphism(m);
      out << "in automorphism group: true\n";
      print_eigen(out, aut, eigen_data(aut));
      return 0;
    }
    if (*check_cmd) {
      const RealizedAlgebra realized(alg_opts.spec());
      const LatticeSpec lattice = lattice_from(lattice_arg, realized);
      if (auto row = realized.lattice_outside_top_term(lattice))
        throw UsageError("lattice generator " + std::to_string(*row) + " is not in the top central-series term");
      const Evaluation ev = evaluate(realized, lattice, parse_matrix(matrix_text));
      out << "in_automorphism_group: " << (ev.verdicts.in_automorphism_group ? "true" : "false");
      if (ev.membership_failure) out << " (" << *ev.membership_failure << ")";
      out << "\nhyperbolic: " << (ev.verdicts.hyperbolic ? "true" : "false") << "\n";
      if (ev.eigen) {
        out << "  unit-modulus eigenvalue in grades:";
        bool any = false;
        for (size_t m = 0; m < ev.eigen->unit_root_in_grade.size(); ++m)
          if (ev.eigen->unit_root_in_grade[m]) out << " " << (m + 1), any = true;
        out << (any ? "" : " none") << "\n";
      }
      out << "preserves_lattice: " << (ev.verdicts.preserves_lattice ? "true" : "false") << "\n";
      return ev.verdicts.all() ? 0 : 1;
    }
    if (*search_cmd) {
      const AlgebraSpec spec = alg_opts.spec();
      const RealizedAlgebra realized(spec);
      const LatticeSpec lattice = lattice_from(search_opts.lattice, realized);
      return run_search(realized, lattice, search_opts.source_for(realized.spec()), search_opts.budget, search_opts.out,
                        false, out, err);
    }
    if (*verify_cmd) {
      const std::string text = verify_path == "-" ? std::string(std::istreambuf_iterator<char>(in), {}) : read_file(verify_path);
      const VerifyResult r = verify(parse_json_text(text, "certificate"));
      if (r.ok) {
        out << "verified\n";
        return 0;
      }
      out << "rejected: " << r.diagnostic << "\n";
      return 1;
    }
    if (*example_cmd) {
      if (example_q < 4) throw UsageError("paper-example needs q >= 4 (blocks of size 3 and q - 3)");
      if (example_q < 6) err << "warning: q = " << example_q << " is below the default minimum of 6 (second block smaller than 3x3); continuing\n";
      const RealizedAlgebra realized(AlgebraSpec::so3_metric(example_q));
      return run_search(realized, realized.standard_lattice(), default_source(realized.spec(), search_opts.seed),
                        search_opts.budget, search_opts.out, true, out, err);
    }
    if (*transport_cmd) {
      const Certificate cert = certificate_from_json(parse_json_text(read_file(cert_path), cert_path));
      const TransportResult moved = transport(cert, parse_matrix(matrix_text));
      if (!moved.conjugator_in_group)
        err << "warning: det g != 1, so g is outside the determinant-one group (transported anyway)\n";
      write_output(dump(to_json(moved.certificate)), out_path, out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace nilhyp
