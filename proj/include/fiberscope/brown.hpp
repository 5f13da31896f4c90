#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "fiberscope/error.hpp"
#include "fiberscope/numeric.hpp"
#include "fiberscope/words.hpp"

namespace fiberscope {

/// An integral cohomology class (c, d), pairing with a lattice point (x, y)
/// as cx + dy.
struct CohomologyClass {
  std::int64_t c = 0;
  std::int64_t d = 0;

  bool is_zero() const { return c == 0 && d == 0; }

  CohomologyClass negated() const { return {-c, -d}; }

  /// Divides out the gcd; (0,0) stays (0,0).
  CohomologyClass primitivized() const {
    const std::int64_t g = gcd64(c, d);
    return g == 0 ? *this : CohomologyClass{c / g, d / g};
  }

  bool is_primitive() const { return gcd64(c, d) == 1; }

  /// Canonical representative of the line through the origin spanned by this
  /// class: primitive, with d > 0, or d == 0 and c > 0.
  CohomologyClass line_representative() const {
    CohomologyClass p = primitivized();
    if (p.d < 0 || (p.d == 0 && p.c < 0)) p = p.negated();
    return p;
  }

  friend auto operator<=>(const CohomologyClass&, const CohomologyClass&) = default;
};

/// cross(u, v) = u.c * v.d - u.d * v.c; zero iff u, v span the same line.
inline std::int64_t cross(CohomologyClass u, CohomologyClass v) {
  return u.c * v.d - u.d * v.c;
}

/// True if phi lies on the line through the origin spanned by some element
/// of `lines`.
inline bool on_some_line(const std::vector<CohomologyClass>& lines, CohomologyClass phi) {
  return std::any_of(lines.begin(), lines.end(),
                     [&](CohomologyClass l) { return cross(l, phi) == 0; });
}

/// Extreme levels of the functional cx + dy along a path, with the number of
/// maximal parameter intervals the path spends at each extreme level.
struct ExtremeReport {
  std::int64_t e_min = 0;
  std::int64_t e_max = 0;
  int visits_min = 0;
  int visits_max = 0;
};

namespace detail {

/// Number of maximal runs of consecutive indices with value == level.
/// With cyclic = true a run spanning the end/start junction counts once.
inline int count_level_runs(const std::vector<std::int64_t>& values, std::int64_t level,
                            bool cyclic) {
  const std::size_t n = values.size();
  std::size_t hits = 0;
  for (auto v : values) hits += (v == level);
  if (hits == n) return 1;
  int runs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool at = values[i] == level;
    const bool prev_at =
        (i == 0) ? (cyclic && values[n - 1] == level) : values[i - 1] == level;
    if (at && !prev_at) ++runs;
  }
  return runs;
}

}  // namespace detail

/// Evaluates the functional of phi at every vertex and counts level-set visit
/// intervals at the two extremes. Closed paths (endpoint == origin) use cyclic
/// parameter time; open paths use linear time with endpoints as interval
/// boundaries. A visit interval may be a single vertex or a collinear run of
/// segments: the functional is linear on each unit segment, so level-set
/// components correspond exactly to runs of consecutive vertices at the
/// extreme level.
inline ExtremeReport functional_extremes(const LatticePath& path, CohomologyClass phi) {
  if (phi.is_zero()) throw DomainError("zero_class", "zero class has no extremes");
  if (path.vertices.empty()) throw DomainError("degenerate_path", "empty path");

  const bool cyclic = path.closed();
  std::vector<std::int64_t> values;
  const std::size_t n = cyclic ? path.vertices.size() - 1 : path.vertices.size();
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = path.vertices[i];
    values.push_back(phi.c * v[0] + phi.d * v[1]);
  }

  ExtremeReport report;
  report.e_min = *std::min_element(values.begin(), values.end());
  report.e_max = *std::max_element(values.begin(), values.end());
  report.visits_min = detail::count_level_runs(values, report.e_min, cyclic);
  report.visits_max = detail::count_level_runs(values, report.e_max, cyclic);
  return report;
}

/// Brown's criterion: (c, d) induces a fibration iff each extreme level line
/// meets the path in exactly one visit interval. A single collinear run counts
/// once; a self-crossing at the extreme level counts multiply.
inline bool is_fibered(const LatticePath& path, CohomologyClass phi) {
  const ExtremeReport r = functional_extremes(path, phi);
  return r.visits_min == 1 && r.visits_max == 1;
}

/// Output of the non-fibered direction search.
///
/// `lines` holds one canonical primitive representative per non-fibered line
/// through the origin. When `failed_sector_samples` is empty the non-fibered
/// locus is exactly the union of those lines: one sample class strictly inside
/// each complementary open sector was verified to fiber. A nonempty sample
/// list means some open cone of classes fails (possible when the path
/// revisits a convex-hull vertex, e.g. for proper-power relators).
struct NonfiberedDirections {
  std::vector<CohomologyClass> lines;
  std::vector<CohomologyClass> failed_sector_samples;

  bool lines_account_for_all_failures() const { return failed_sector_samples.empty(); }
};

namespace detail {

/// Angle order on upper-half-plane representatives, ascending in [0, pi).
inline bool angle_less(CohomologyClass u, CohomologyClass v) {
  const std::int64_t cr = cross(u, v);
  if (cr != 0) return cr > 0;
  return false;
}

}  // namespace detail

/// Finds all lines of non-fibered classes by candidate generation: a direction
/// can fail only if its extreme level set contains two distinct path vertices,
/// so candidates are the primitive classes orthogonal to vertex differences,
/// plus the axis classes. After testing candidates, one sample strictly inside
/// each remaining open sector is tested to confirm the sector fibers.
inline NonfiberedDirections nonfibered_directions(const LatticePath& path) {
  if (path.segment_count() < 1) {
    throw DomainError("degenerate_path", "path with a single vertex");
  }

  const bool cyclic = path.closed();
  const std::size_t n = cyclic ? path.vertices.size() - 1 : path.vertices.size();

  std::set<CohomologyClass> candidates{
      CohomologyClass{1, 0}.line_representative(),
      CohomologyClass{0, 1}.line_representative(),
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t dx = path.vertices[j][0] - path.vertices[i][0];
      const std::int64_t dy = path.vertices[j][1] - path.vertices[i][1];
      if (dx == 0 && dy == 0) continue;
      candidates.insert(CohomologyClass{-dy, dx}.line_representative());
    }
  }

  NonfiberedDirections result;
  for (CohomologyClass phi : candidates) {
    if (!is_fibered(path, phi)) result.lines.push_back(phi);
  }
  std::sort(result.lines.begin(), result.lines.end(), detail::angle_less);

  std::vector<CohomologyClass> samples;
  const auto& lines = result.lines;
  if (lines.empty()) {
    // Whole projective line left; the axis candidates passed, so probe the
    // diagonal sectors between them.
    samples = {CohomologyClass{1, 1}, CohomologyClass{-1, 1}};
  } else if (lines.size() == 1) {
    // One open sector of angle pi; its midpoint is the perpendicular.
    samples.push_back(CohomologyClass{-lines[0].d, lines[0].c}.line_representative());
  } else {
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
      samples.push_back(CohomologyClass{lines[i].c + lines[i + 1].c,
                                        lines[i].d + lines[i + 1].d}
                            .line_representative());
    }
    // Wrap-around sector from the last line to the first line rotated by pi.
    samples.push_back(CohomologyClass{lines.back().c - lines.front().c,
                                      lines.back().d - lines.front().d}
                          .line_representative());
  }

  for (CohomologyClass s : samples) {
    if (!is_fibered(path, s)) result.failed_sector_samples.push_back(s);
  }
  return result;
}

}  // namespace fiberscope
