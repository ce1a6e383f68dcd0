#pragma once

// Single-field perturbations of a JSON document, for tamper-detection checks.

#include "nilhyp/certificate.hpp"

#include <string>
#include <vector>

namespace nilhyp::testing {

struct Perturbation {
  std::string path;  // e.g. "alpha[1][2]" or "provenance.seed (removed)"
  Json document;
};

namespace detail {

inline void perturb_walk(const Json& root, Json& node, const std::string& path, std::vector<Perturbation>& out) {
  auto emit = [&](Json replacement, const std::string& tag) {
    Json saved = std::move(node);
    node = std::move(replacement);
    out.push_back({path + tag, root});
    node = std::move(saved);
  };
  auto child = [&](const std::string& suffix) { return path.empty() ? suffix.substr(suffix[0] == '.') : path + suffix; };
  if (node.is_object()) {
    std::vector<std::string> keys;
    for (auto it = node.begin(); it != node.end(); ++it) keys.push_back(it.key());
    for (const auto& key : keys) {
      perturb_walk(root, node[key], child("." + key), out);
      Json saved = node;
      node.erase(key);
      out.push_back({child("." + key) + " (removed)", root});
      node = std::move(saved);
    }
  } else if (node.is_array()) {
    for (size_t i = 0; i < node.size(); ++i) perturb_walk(root, node[i], child("[" + std::to_string(i) + "]"), out);
  } else if (node.is_boolean()) {
    emit(!node.get<bool>(), "");
  } else if (node.is_number_integer()) {
    emit(node.get<long long>() + 1, "");
  } else if (node.is_string()) {
    const std::string text = node.get<std::string>();
    try {
      emit(to_string(parse_rational(text) + 1), "");
    } catch (const std::exception&) {
      emit(text + "x", "");
    }
  }
}

}  // namespace detail

/// Every leaf bumped (numbers and rational strings +1, other strings
/// suffixed, booleans flipped) and every object key removed, one at a time.
inline std::vector<Perturbation> single_field_perturbations(const Json& document) {
  std::vector<Perturbation> out;
  Json copy = document;
  detail::perturb_walk(copy, copy, "", out);
  return out;
}

struct TamperOutcome {
  bool rejected = false;
  std::string diagnostic;  // verify diagnostic or parse error text
};

inline TamperOutcome check_tampered(const Json& document) {
  try {
    const VerifyResult r = verify(document);
    return {!r.ok, r.diagnostic};
  } catch (const ParseError& e) {
    return {true, e.what()};
  }
}

/// The diagnostic names a field: it starts with a certificate key.
inline bool is_located(const std::string& diagnostic) {
  for (const char* key : {"format_version", "algebra", "alpha", "lattice", "grade_char_polys", "verdicts", "enumeration",
                          "provenance", "certificate"})
    if (diagnostic.rfind(key, 0) == 0) return true;
  return false;
}

}  // namespace nilhyp::testing
