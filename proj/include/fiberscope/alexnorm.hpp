#pragma once

#include <cstdint>
#include <vector>

#include "fiberscope/brown.hpp"
#include "fiberscope/error.hpp"
#include "fiberscope/laurent.hpp"
#include "fiberscope/numeric.hpp"
#include "fiberscope/polygon.hpp"

namespace fiberscope {

/// Convex hull of the exponent support of f, with exact integer vertices in
/// canonical polygon order. Point and segment hulls are returned as-is with
/// one or two vertices.
inline RatPolygon newton_polytope(const LaurentPoly2& f) {
  if (f.is_zero()) {
    throw DomainError("zero_polynomial", "Newton polytope of the zero polynomial");
  }
  std::vector<RatPoint> pts;
  pts.reserve(f.term_count());
  for (const auto& e : f.support()) {
    pts.push_back(RatPoint{Rational(e[0]), Rational(e[1])});
  }
  return RatPolygon::hull_of(std::move(pts));
}

/// Alexander norm of the class φ: (max − min) of φ·(i, j) over the exponent
/// support of f. Computed directly on the support, not through the dual
/// polygon, to keep exact integer arithmetic on the hot path.
inline std::int64_t alexander_norm(const LaurentPoly2& f, CohomologyClass phi) {
  if (f.is_zero()) {
    throw DomainError("zero_polynomial", "Alexander norm of the zero polynomial");
  }
  bool first = true;
  Int lo = 0;
  Int hi = 0;
  for (const auto& e : f.support()) {
    const Int value = Int(phi.c) * e[0] + Int(phi.d) * e[1];
    if (first) {
      lo = hi = value;
      first = false;
    } else {
      if (value < lo) lo = value;
      if (value > hi) hi = value;
    }
  }
  return to_int64(hi - lo);
}

/// Unit ball of the Alexander norm: the polar-dual polygon
/// {φ : φ·(u − v) ≤ 1 for all Newton-polytope vertices u, v}. Exact
/// halfplane intersection; requires a 2-dimensional Newton polytope
/// (otherwise the norm is only a seminorm and the ball is unbounded).
inline RatPolygon unit_ball(const LaurentPoly2& f) {
  const RatPolygon polytope = newton_polytope(f);
  if (!polytope.is_full_dimensional()) {
    throw DomainError("degenerate_norm",
                      "Newton polytope is not 2-dimensional: the Alexander norm "
                      "is a seminorm with unbounded unit ball");
  }

  const auto& verts = polytope.vertices();
  std::vector<Halfplane> halfplanes;
  halfplanes.reserve(verts.size() * (verts.size() - 1));
  Rational max_abs = 0;
  for (const auto& u : verts) {
    for (const auto& v : verts) {
      if (u == v) continue;
      Halfplane h{u.x - v.x, u.y - v.y, Rational(1)};
      for (const Rational& coord : {h.a, h.b}) {
        const Rational a = coord < 0 ? Rational(-coord) : coord;
        if (a > max_abs) max_abs = a;
      }
      halfplanes.push_back(std::move(h));
    }
  }

  // Any ball vertex solves w1·φ = 1, w2·φ = 1 for independent integer vectors
  // w1, w2, so |φ coords| = |adjugate row sums / det| ≤ 2·max_abs. The box
  // 2·max_abs + 1 therefore never truncates the intersection.
  const Rational bound = 2 * max_abs + 1;
  RatPolygon ball = intersect_halfplanes(halfplanes, bound);
  if (!ball.is_full_dimensional()) {
    throw DomainError("degenerate_norm",
                      "halfplane intersection collapsed; Newton polytope was "
                      "not genuinely 2-dimensional");
  }
  return ball;
}

}  // namespace fiberscope
