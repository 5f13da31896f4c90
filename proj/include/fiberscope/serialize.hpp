#pragma once

#include <json.hpp>

#include "fiberscope/brown.hpp"
#include "fiberscope/covers.hpp"
#include "fiberscope/fibertypes.hpp"
#include "fiberscope/numeric.hpp"
#include "fiberscope/polygon.hpp"

namespace fiberscope {

using Json = nlohmann::json;

/// Rational coordinates serialize as exact "num/den" strings so reports are
/// bit-stable and lossless.
inline Json to_json(const RatPoint& p) {
  return Json::array({to_fraction_string(p.x), to_fraction_string(p.y)});
}

inline Json to_json(const RatPolygon& poly) {
  Json vertices = Json::array();
  for (const auto& v : poly.vertices()) vertices.push_back(to_json(v));
  return Json{{"vertices", vertices}};
}

inline Json to_json(CohomologyClass phi) { return Json::array({phi.c, phi.d}); }

inline Json to_json(SurfaceType t) {
  return Json{{"minus_chi", t.minus_chi}, {"punctures", t.punctures}};
}

inline Json to_json(const ExtremeReport& r) {
  return Json{{"e_min", r.e_min},
              {"e_max", r.e_max},
              {"visits_min", r.visits_min},
              {"visits_max", r.visits_max}};
}

inline Json to_json(const CensusEntry& e) {
  Json j = to_json(e.type);
  j["label"] = e.label;
  return j;
}

inline Json to_json(const TypeCoverage& row) {
  Json j = to_json(row.type);
  Json certificates = Json::array();
  if (row.by_mt_a) certificates.push_back("mt_a");
  if (row.by_mt_b) certificates.push_back("mt_b");
  if (row.by_mt_c) certificates.push_back(row.mt_c_is_census_backed
                                              ? "mt_c (census-backed exception)"
                                              : "mt_c");
  if (!row.census_labels.empty()) certificates.push_back("census");
  j["certificates"] = certificates;
  j["census_labels"] = row.census_labels;
  j["certified"] = row.certified();
  return j;
}

inline Json to_json(const CoverageReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(to_json(row));
  Json uncovered = Json::array();
  for (const auto& t : report.uncovered) uncovered.push_back(to_json(t));
  Json invalid_census = Json::array();
  for (const auto& e : report.invalid_census_entries) invalid_census.push_back(to_json(e));
  Json obs_invalid = Json::array();
  for (const auto& t : report.observation_invalid) obs_invalid.push_back(to_json(t));
  Json obs_uncertified = Json::array();
  for (const auto& t : report.observation_uncertified) {
    obs_uncertified.push_back(to_json(t));
  }
  return Json{{"rows", rows},
              {"uncovered_types", uncovered},
              {"invalid_census_entries", invalid_census},
              {"observation_pairs_not_surfaces", obs_invalid},
              {"observation_pairs_uncertified", obs_uncertified}};
}

/// Machine-readable error shape used by the CLI on stderr.
inline Json error_json(const Error& e) {
  return Json{{"error", {{"code", e.code()}, {"message", e.what()}}}};
}

}  // namespace fiberscope
