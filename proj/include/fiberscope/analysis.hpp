#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fiberscope/alexnorm.hpp"
#include "fiberscope/brown.hpp"
#include "fiberscope/error.hpp"
#include "fiberscope/fibertypes.hpp"
#include "fiberscope/laurent.hpp"
#include "fiberscope/realroots.hpp"
#include "fiberscope/serialize.hpp"
#include "fiberscope/svg.hpp"
#include "fiberscope/words.hpp"

namespace fiberscope {

/// Inputs of the end-to-end analysis. relator, alexander, mu and lambda are
/// required; the rest are optional refinements.
struct AnalysisConfig {
  std::string relator;
  std::string alexander;
  std::optional<std::array<std::int64_t, 2>> mu;
  std::optional<std::array<std::int64_t, 2>> lambda;
  std::int64_t max_minus_chi = 10;
  std::optional<std::string> polynomial;
  std::optional<std::vector<CohomologyClass>> claimed_nonfibered;
};

namespace detail {

inline std::string trim_view(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::int64_t parse_config_int(const std::string& value, const std::string& what) {
  const std::string v = trim_view(value);
  if (v.empty() || v == "-" ||
      v.find_first_not_of("0123456789", v[0] == '-' ? 1 : 0) != std::string::npos) {
    throw SyntaxError("bad integer '" + value + "' for " + what, "bad_config");
  }
  return std::strtoll(v.c_str(), nullptr, 10);
}

inline std::array<std::int64_t, 2> parse_int_pair(const std::string& value,
                                                  const std::string& what) {
  const auto comma = value.find(',');
  if (comma == std::string::npos) {
    throw SyntaxError("expected 'c,d' for " + what + ", got '" + value + "'",
                      "bad_config");
  }
  return {parse_config_int(value.substr(0, comma), what),
          parse_config_int(value.substr(comma + 1), what)};
}

inline std::vector<CohomologyClass> parse_class_list(const std::string& value,
                                                     const std::string& what) {
  std::vector<CohomologyClass> classes;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto end = value.find(';', start);
    if (end == std::string::npos) end = value.size();
    const std::string item = trim_view(value.substr(start, end - start));
    if (!item.empty()) {
      const auto pair = parse_int_pair(item, what);
      classes.push_back(CohomologyClass{pair[0], pair[1]});
    }
    start = end + 1;
  }
  if (classes.empty()) {
    throw SyntaxError("empty class list for " + what, "bad_config");
  }
  return classes;
}

}  // namespace detail

/// Applies one key=value setting; shared by the config-file loader and any
/// flag-based overrides.
inline void apply_config_entry(AnalysisConfig& config, const std::string& key,
                               const std::string& value) {
  if (key == "relator") {
    config.relator = value;
  } else if (key == "alexander") {
    config.alexander = value;
  } else if (key == "mu") {
    config.mu = detail::parse_int_pair(value, "mu");
  } else if (key == "lambda") {
    config.lambda = detail::parse_int_pair(value, "lambda");
  } else if (key == "max_chi") {
    config.max_minus_chi = detail::parse_config_int(value, "max_chi");
  } else if (key == "polynomial") {
    config.polynomial = value;
  } else if (key == "claimed_nonfibered") {
    config.claimed_nonfibered = detail::parse_class_list(value, "claimed_nonfibered");
  } else {
    throw SyntaxError("unknown config key '" + key + "'", "bad_config");
  }
}

/// Loads a UTF-8 key=value config file. Blank lines and '#' comments are
/// skipped; later keys override earlier ones.
inline AnalysisConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFileError("cannot open config file '" + path + "'");
  AnalysisConfig config;
  std::string line;
  while (std::getline(in, line)) {
    const std::string row = detail::trim_view(line);
    if (row.empty() || row[0] == '#') continue;
    const auto eq = row.find('=');
    if (eq == std::string::npos) {
      throw SyntaxError("config line without '=': '" + row + "'", "bad_config");
    }
    apply_config_entry(config, detail::trim_view(row.substr(0, eq)),
                       detail::trim_view(row.substr(eq + 1)));
  }
  return config;
}

inline void validate_config(const AnalysisConfig& config) {
  if (config.relator.empty()) throw SyntaxError("missing relator", "bad_config");
  if (config.alexander.empty()) throw SyntaxError("missing alexander", "bad_config");
  if (!config.mu) throw SyntaxError("missing mu", "bad_config");
  if (!config.lambda) throw SyntaxError("missing lambda", "bad_config");
  if (config.max_minus_chi < 1) {
    throw SyntaxError("max_chi must be >= 1", "bad_config");
  }
}

/// Everything the analyze command reports.
struct AnalysisResult {
  Word word;
  std::string relator_canonical;
  std::pair<std::int64_t, std::int64_t> sums{};
  LatticePath path;

  NonfiberedDirections computed_nonfibered;
  std::optional<std::vector<CohomologyClass>> claimed_lines;  // canonicalized
  bool claim_matches = false;
  std::string enumeration_line_source;  // "claimed" or "computed"

  LaurentPoly2 alexander;
  std::string alexander_canonical;
  RatPolygon newton;
  RatPolygon ball;
  CuspData cusp;
  std::int64_t max_minus_chi = 0;
  TypeWitnessMap fiber_types;

  std::optional<IntPolynomial> minimal_polynomial;
  std::optional<std::int64_t> real_root_count;
};

namespace detail {

/// Canonical set of lines: one upper-half-plane primitive representative per
/// distinct line, sorted by angle.
inline std::vector<CohomologyClass> canonical_lines(std::vector<CohomologyClass> lines) {
  for (auto& l : lines) {
    if (l.is_zero()) {
      throw DomainError("zero_class", "the zero class does not span a line");
    }
    l = l.line_representative();
  }
  std::sort(lines.begin(), lines.end(), angle_less);
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

}  // namespace detail

/// Runs the full pipeline: Brown analysis of the relator path, Newton
/// polytope and norm ball of the Alexander polynomial, fiber-type enumeration
/// and, if configured, the real-root certificate. When a claimed non-fibered
/// set is supplied it drives the enumeration (with a match/mismatch
/// diagnostic against the computed set); otherwise the computed set does.
inline AnalysisResult run_analysis(const AnalysisConfig& config) {
  validate_config(config);

  AnalysisResult result;
  result.word = parse_word(config.relator);
  result.relator_canonical = print_word(result.word);
  result.sums = exponent_sums(result.word);
  result.path = build_path(result.word);
  result.computed_nonfibered = nonfibered_directions(result.path);

  std::vector<CohomologyClass> enumeration_lines = result.computed_nonfibered.lines;
  result.enumeration_line_source = "computed";
  if (config.claimed_nonfibered) {
    result.claimed_lines = detail::canonical_lines(*config.claimed_nonfibered);
    result.claim_matches = *result.claimed_lines == result.computed_nonfibered.lines;
    enumeration_lines = *result.claimed_lines;
    result.enumeration_line_source = "claimed";
  }

  result.alexander = parse_laurent(config.alexander);
  result.alexander_canonical = print_laurent(result.alexander);
  result.newton = newton_polytope(result.alexander);
  result.ball = unit_ball(result.alexander);
  result.cusp = CuspData{*config.mu, *config.lambda};
  if (result.cusp.is_degenerate()) {
    throw DomainError("degenerate_cusp", "mu and lambda are both zero");
  }
  result.max_minus_chi = config.max_minus_chi;
  result.fiber_types = enumerate_types_with_witnesses(
      result.alexander, result.cusp, enumeration_lines, config.max_minus_chi);

  if (config.polynomial) {
    result.minimal_polynomial = parse_polynomial(*config.polynomial);
    result.real_root_count = count_real_roots(*result.minimal_polynomial);
  }
  return result;
}

inline Json to_json(const AnalysisResult& r) {
  Json j;

  Json relator;
  relator["text"] = r.relator_canonical;
  relator["length"] = static_cast<std::int64_t>(r.word.size());
  relator["path_vertex_count"] = static_cast<std::int64_t>(r.path.vertices.size());
  relator["path_closed"] = r.path.closed();
  j["relator"] = relator;

  Json sums;
  sums["a"] = r.sums.first;
  sums["b"] = r.sums.second;
  if (r.sums.first != 0 || r.sums.second != 0) {
    sums["warning"] =
        "nonzero exponent sums: only classes (c,d) with c*a_sum + d*b_sum = 0 "
        "are genuine homomorphisms to Z";
  } else {
    sums["warning"] = nullptr;
  }
  j["exponent_sums"] = sums;

  Json nonfibered;
  Json computed = Json::array();
  for (const auto& l : r.computed_nonfibered.lines) computed.push_back(to_json(l));
  nonfibered["computed_lines"] = computed;
  Json sector_failures = Json::array();
  for (const auto& s : r.computed_nonfibered.failed_sector_samples) {
    sector_failures.push_back(to_json(s));
  }
  nonfibered["sector_failures"] = sector_failures;
  if (r.claimed_lines) {
    Json claimed = Json::array();
    for (const auto& l : *r.claimed_lines) claimed.push_back(to_json(l));
    nonfibered["claimed_lines"] = claimed;
    nonfibered["claim_matches_computed"] = r.claim_matches;
  } else {
    nonfibered["claimed_lines"] = nullptr;
    nonfibered["claim_matches_computed"] = nullptr;
  }
  nonfibered["enumeration_line_source"] = r.enumeration_line_source;
  j["nonfibered"] = nonfibered;

  Json alexander;
  alexander["polynomial"] = r.alexander_canonical;
  alexander["term_count"] = static_cast<std::int64_t>(r.alexander.term_count());
  j["alexander"] = alexander;

  j["newton_polytope"] = to_json(r.newton);
  j["unit_ball"] = to_json(r.ball);
  j["max_minus_chi"] = r.max_minus_chi;

  Json types = Json::array();
  for (const auto& [t, witness] : r.fiber_types) {
    Json row = to_json(t);
    row["witness"] = to_json(witness);
    types.push_back(row);
  }
  j["fiber_types"] = types;

  if (r.minimal_polynomial) {
    Json roots;
    roots["polynomial"] = print_polynomial(*r.minimal_polynomial);
    roots["degree"] = r.minimal_polynomial->degree();
    roots["count"] = *r.real_root_count;
    roots["has_real_root"] = *r.real_root_count >= 1;
    j["real_roots"] = roots;
  } else {
    j["real_roots"] = nullptr;
  }
  return j;
}

/// Writes <prefix>_path.svg and <prefix>_ball.svg.
inline void write_analysis_svgs(const AnalysisResult& r, const std::string& prefix) {
  const auto write = [](const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("io_error", "cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("io_error", "failed writing '" + path + "'");
  };
  write(prefix + "_path.svg", svg_lattice_path(r.path));
  write(prefix + "_ball.svg", svg_norm_ball(r.ball));
}

}  // namespace fiberscope
