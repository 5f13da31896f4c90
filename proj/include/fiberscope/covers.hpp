#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fiberscope/census.hpp"
#include "fiberscope/error.hpp"
#include "fiberscope/fibertypes.hpp"
#include "fiberscope/numeric.hpp"

namespace fiberscope {

/// A candidate covering relation: does `cover_type` cover `base_type`?
struct CoverQuery {
  SurfaceType cover_type;
  SurfaceType base_type;
};

namespace detail {

inline void require_valid(SurfaceType t, const char* role) {
  if (!is_valid_surface_type(t)) {
    throw DomainError("invalid_surface_type",
                      std::string(role) + " (" + std::to_string(t.minus_chi) + ", " +
                          std::to_string(t.punctures) + ") is not a surface type");
  }
}

}  // namespace detail

/// Massey's criterion. The surface of type (−χ', p') is a degree-d cover of
/// the surface of type (−χ, p) iff d = (−χ')/(−χ) is a positive integer and
/// p ≤ p' ≤ pd. Returns d when the criterion holds, empty otherwise; the
/// degree is forced by the Euler characteristic ratio.
inline std::optional<std::int64_t> massey_degree(const CoverQuery& q) {
  detail::require_valid(q.base_type, "base type");
  detail::require_valid(q.cover_type, "cover type");
  const std::int64_t chi = q.base_type.minus_chi;
  const std::int64_t chi_prime = q.cover_type.minus_chi;
  if (chi_prime % chi != 0) return std::nullopt;
  const std::int64_t d = chi_prime / chi;
  const std::int64_t p = q.base_type.punctures;
  const std::int64_t p_prime = q.cover_type.punctures;
  if (p_prime < p || p_prime > p * d) return std::nullopt;
  return d;
}

/// All valid surface types with −χ ≤ max_minus_chi admitting a Massey cover
/// over the base. By the unwinding lemma these are exactly the fiber types of
/// finite covers of any surface bundle whose fiber has the base type.
inline std::set<SurfaceType> bundle_covered_types(SurfaceType base,
                                                  std::int64_t max_minus_chi) {
  detail::require_valid(base, "base type");
  if (max_minus_chi < 1) {
    throw DomainError("invalid_bound", "max_minus_chi must be >= 1");
  }
  std::set<SurfaceType> covered;
  for (std::int64_t mc = 1; mc <= max_minus_chi; ++mc) {
    for (std::int64_t p = 0; p <= mc + 2; ++p) {
      const SurfaceType t{mc, p};
      if (!is_valid_surface_type(t)) continue;
      if (massey_degree(CoverQuery{t, base}).has_value()) covered.insert(t);
    }
  }
  return covered;
}

/// Real-place certification predicates. Each is equivalent to a reachability
/// statement:
///   mt_a(t)  ⇔  t covers the four-punctured sphere seed (2, 4);
///   mt_b(t)  ⇔  t covers the closed genus-2 seed (2, 0);
///   mt_c(t)  ⇔  t is realized by the widely-fibering census manifold,
///                i.e. wf_predicate(t), or t = (5, 1), the census-backed
///                exception (see mt_c_census_exception).
inline bool mt_a(SurfaceType t) {
  detail::require_valid(t, "type");
  return t.punctures >= 4 && t.minus_chi % 2 == 0;
}

inline bool mt_b(SurfaceType t) {
  detail::require_valid(t, "type");
  return t.punctures == 0;
}

/// True exactly on the type whose mt_c membership rests on a census example
/// rather than the widely-fibering manifold.
inline bool mt_c_census_exception(SurfaceType t) {
  return t.minus_chi == 5 && t.punctures == 1;
}

inline bool mt_c(SurfaceType t) {
  detail::require_valid(t, "type");
  return wf_predicate(t) || mt_c_census_exception(t);
}

// ============================================================================
// Twist knots
// ============================================================================

/// Index m of the twist knot K_m; the complement is hyperbolic for m ≥ 3.
struct TwistKnotIndex {
  std::int64_t m = 0;
};

namespace detail {

inline void require_hyperbolic(TwistKnotIndex k) {
  if (k.m < 3) {
    throw DomainError("twist_knot_range",
                      "twist knot index m = " + std::to_string(k.m) +
                          " is below the hyperbolic range m >= 3");
  }
}

}  // namespace detail

/// Two-bridge fraction of K_m: (m−1)/(2m−1), already in lowest terms.
inline Rational twist_knot_fraction(TwistKnotIndex k) {
  detail::require_hyperbolic(k);
  return Rational(k.m - 1, 2 * k.m - 1);
}

/// Fiber type (q−3, q−1) = (2m−4, 2m−2) of the surface-bundle cover of the
/// two-bridge complement with fraction p/q; always a genus-0 type.
inline SurfaceType walsh_cover_type(TwistKnotIndex k) {
  detail::require_hyperbolic(k);
  return SurfaceType{2 * k.m - 4, 2 * k.m - 2};
}

/// Types of surface bundles with a real place obtained from even-index twist
/// knots: {(2m−4, 2m−2) : 4 ≤ m ≤ max_m, m even} = {(4n−4, 4n−2) : n ≥ 2}.
/// Even m is what makes the trace field have odd degree, hence a real root.
inline std::set<SurfaceType> twistknot_realplace_types(std::int64_t max_m) {
  if (max_m < 4) {
    throw DomainError("twist_knot_range",
                      "max_m must be >= 4 (first even hyperbolic index)");
  }
  std::set<SurfaceType> types;
  for (std::int64_t m = 4; m <= max_m; m += 2) {
    types.insert(walsh_cover_type(TwistKnotIndex{m}));
  }
  return types;
}

// ============================================================================
// Conjecture coverage report
// ============================================================================

/// How one surface type is certified to carry a real-place example.
struct TypeCoverage {
  SurfaceType type;
  bool by_mt_a = false;
  bool by_mt_b = false;
  bool by_mt_c = false;
  bool mt_c_is_census_backed = false;  // set when by_mt_c holds only via (5,1)
  std::vector<std::string> census_labels;

  bool certified() const { return by_mt_a || by_mt_b || by_mt_c || !census_labels.empty(); }
};

/// Coverage of the real-place conjecture for all valid types with
/// 1 < −χ ≤ bound (types with −χ = 1 are excluded from the conjecture), plus
/// the cross-checks backing the observed-pairs table.
struct CoverageReport {
  std::vector<TypeCoverage> rows;
  std::vector<SurfaceType> uncovered;  // valid, in range, no certificate: "unknown"

  std::vector<CensusEntry> invalid_census_entries;    // census rows failing validity
  std::vector<SurfaceType> observation_invalid;       // observed pairs failing validity
  std::vector<SurfaceType> observation_uncertified;   // valid observed pairs, no certificate
};

/// Builds the coverage report against a census table (usually
/// builtin_census() or a loaded data file).
inline CoverageReport conjecture_coverage(std::int64_t max_minus_chi,
                                          const std::vector<CensusEntry>& census) {
  if (max_minus_chi < 2) {
    throw DomainError("invalid_bound",
                      "coverage bound must be >= 2: the conjecture excludes -chi <= 1");
  }

  CoverageReport report;
  for (const auto& entry : census) {
    if (!is_valid_surface_type(entry.type)) report.invalid_census_entries.push_back(entry);
  }

  auto coverage_of = [&census](SurfaceType t) {
    TypeCoverage row;
    row.type = t;
    row.by_mt_a = mt_a(t);
    row.by_mt_b = mt_b(t);
    row.by_mt_c = mt_c(t);
    row.mt_c_is_census_backed = row.by_mt_c && !wf_predicate(t);
    for (const auto& entry : census) {
      if (entry.type == t && is_valid_surface_type(entry.type)) {
        row.census_labels.push_back(entry.label);
      }
    }
    std::sort(row.census_labels.begin(), row.census_labels.end());
    return row;
  };

  for (std::int64_t mc = 2; mc <= max_minus_chi; ++mc) {
    for (std::int64_t p = 0; p <= mc + 2; ++p) {
      const SurfaceType t{mc, p};
      if (!is_valid_surface_type(t)) continue;
      TypeCoverage row = coverage_of(t);
      if (!row.certified()) report.uncovered.push_back(t);
      report.rows.push_back(std::move(row));
    }
  }

  for (SurfaceType observed : observation_pairs()) {
    if (!is_valid_surface_type(observed)) {
      report.observation_invalid.push_back(observed);
      continue;
    }
    if (observed.minus_chi > max_minus_chi) continue;
    if (!coverage_of(observed).certified()) {
      report.observation_uncertified.push_back(observed);
    }
  }
  return report;
}

}  // namespace fiberscope
