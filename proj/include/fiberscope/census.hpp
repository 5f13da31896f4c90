#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fiberscope/error.hpp"
#include "fiberscope/fibertypes.hpp"

namespace fiberscope {

/// One census row: a surface-bundle type together with the census label of a
/// manifold of that type whose trace field has a real place. Labels are
/// opaque strings; no geometry is recomputed from them.
struct CensusEntry {
  SurfaceType type;
  std::string label;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// The bundled census table (identical to data/census.csv).
inline const std::vector<CensusEntry>& builtin_census() {
  static const std::vector<CensusEntry> table = {
      {{2, 2}, "v2640"},  {{3, 1}, "m036"},  {{3, 3}, "s493"},  {{3, 5}, "m043"},
      {{4, 2}, "v2677"},  {{4, 4}, "s500"},  {{4, 6}, "s147"},  {{5, 1}, "m034"},
      {{5, 3}, "v0163"},  {{5, 5}, "v0003"}, {{5, 7}, "m172"},  {{6, 2}, "v3212"},
      {{6, 4}, "s500"},   {{7, 1}, "m078"},  {{7, 3}, "v3238"}, {{7, 5}, "v0022"},
      {{8, 2}, "m297"},   {{8, 4}, "v3193"}, {{9, 1}, "m011"},  {{9, 3}, "v0170"},
      {{10, 2}, "m200"},  {{10, 4}, "v1251"},{{11, 1}, "m019"}, {{11, 3}, "v1721"},
      {{14, 2}, "s156"},  {{15, 1}, "m070"}, {{16, 2}, "s550"}, {{17, 1}, "m044"},
      {{18, 2}, "s133"},  {{19, 1}, "m055"}, {{20, 2}, "s457"}, {{21, 1}, "m064"},
      {{21, 3}, "v1609"}, {{22, 2}, "v2603"},
  };
  return table;
}

/// The observed real-place pairs (−χ, p), exactly as tabulated; includes the
/// parity-impossible entry (5, 0), which downstream reports flag rather than
/// silently drop.
inline const std::vector<SurfaceType>& observation_pairs() {
  static const std::vector<SurfaceType> pairs = {
      {2, 2},  {2, 4},  {3, 1},  {3, 3},  {3, 5},  {4, 0},  {4, 2},  {4, 4},
      {4, 6},  {5, 0},  {5, 1},  {5, 3},  {5, 5},  {5, 7},  {6, 0},  {6, 2},
      {6, 4},  {7, 1},  {7, 3},  {7, 5},  {8, 0},  {8, 2},  {8, 4},  {9, 1},
      {9, 3},  {10, 0}, {10, 2}, {10, 4}, {11, 1}, {11, 3}, {12, 0}, {14, 0},
      {14, 2}, {15, 1}, {16, 0}, {16, 2}, {17, 1}, {18, 0}, {18, 2}, {19, 1},
      {20, 0}, {20, 2}, {21, 1}, {21, 3}, {22, 0}, {22, 2},
  };
  return pairs;
}

namespace detail {

inline std::int64_t parse_census_int(const std::string& field, const std::string& line) {
  if (field.empty() ||
      field.find_first_not_of("0123456789", field[0] == '-' ? 1 : 0) !=
          std::string::npos) {
    throw DataFileError("malformed census row '" + line + "': bad integer '" + field +
                        "'");
  }
  return std::strtoll(field.c_str(), nullptr, 10);
}

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses census rows `minus_chi,punctures,label` from a stream. Blank lines
/// and `#` comment lines are skipped. Malformed rows raise DataFileError;
/// type validity is not enforced here (coverage reports cross-check it).
inline std::vector<CensusEntry> parse_census(std::istream& in) {
  std::vector<CensusEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const std::string row = detail::trim(line);
    if (row.empty() || row[0] == '#') continue;
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : row.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw DataFileError("malformed census row '" + row +
                          "': expected minus_chi,punctures,label");
    }
    CensusEntry entry;
    entry.type.minus_chi = detail::parse_census_int(detail::trim(row.substr(0, c1)), row);
    entry.type.punctures =
        detail::parse_census_int(detail::trim(row.substr(c1 + 1, c2 - c1 - 1)), row);
    entry.label = detail::trim(row.substr(c2 + 1));
    if (entry.label.empty()) {
      throw DataFileError("malformed census row '" + row + "': empty label");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

/// Loads a census file from disk.
inline std::vector<CensusEntry> load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFileError("cannot open census file '" + path + "'");
  auto entries = parse_census(in);
  if (entries.empty()) {
    throw DataFileError("census file '" + path + "' contains no rows");
  }
  return entries;
}

/// Census used by the CLI: the FIBERSCOPE_DATA environment variable overrides
/// the path; an explicit default path is tried next; otherwise the built-in
/// table is returned.
inline std::vector<CensusEntry> resolve_census(const std::string& default_path = "") {
  if (const char* env = std::getenv("FIBERSCOPE_DATA"); env != nullptr && *env != '\0') {
    return load_census(env);
  }
  if (!default_path.empty()) {
    std::ifstream probe(default_path);
    if (probe) return load_census(default_path);
  }
  return builtin_census();
}

}  // namespace fiberscope
