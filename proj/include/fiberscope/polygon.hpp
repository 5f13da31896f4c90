#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <vector>

#include "fiberscope/error.hpp"
#include "fiberscope/numeric.hpp"

namespace fiberscope {

/// A point with exact rational coordinates.
struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  RatPoint operator-() const { return {-x, -y}; }
};

/// Twice the signed area of triangle (o, a, b); positive for a left turn.
inline Rational orient(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// A convex polygon with exact rational vertices in canonical form:
/// counterclockwise, strictly convex (no repeated vertices, no three
/// consecutive collinear), starting at the lexicographically smallest vertex.
/// Degenerate hulls are represented with one vertex (point) or two
/// (segment endpoints, lexicographically smallest first).
class RatPolygon {
 public:
  RatPolygon() = default;

  /// Canonical convex hull of an arbitrary point set (monotone chain).
  static RatPolygon hull_of(std::vector<RatPoint> pts) {
    if (pts.empty()) throw DomainError("empty_point_set", "hull of an empty point set");
    std::sort(pts.begin(), pts.end(),
              [](const RatPoint& a, const RatPoint& b) { return a < b; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    RatPolygon poly;
    if (pts.size() <= 2) {
      poly.vertices_ = std::move(pts);
      return poly;
    }
    std::vector<RatPoint> hull;
    hull.reserve(pts.size() + 1);
    // Lower chain, then upper chain; strict turns only, so collinear interior
    // points are dropped and the result is strictly convex.
    for (const auto& p : pts) {
      while (hull.size() >= 2 &&
             orient(hull[hull.size() - 2], hull.back(), p) <= 0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    const std::size_t lower_size = hull.size();
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
      while (hull.size() > lower_size &&
             orient(hull[hull.size() - 2], hull.back(), *it) <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();  // last point repeats the first
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    poly.vertices_ = std::move(hull);
    return poly;
  }

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_full_dimensional() const { return vertices_.size() >= 3; }

  /// True if the vertex set is closed under negation.
  bool is_centrally_symmetric() const {
    for (const auto& v : vertices_) {
      if (std::find(vertices_.begin(), vertices_.end(), -v) == vertices_.end()) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const RatPolygon&, const RatPolygon&) = default;

 private:
  std::vector<RatPoint> vertices_;
};

/// Where a point sits relative to a convex polygon.
enum class PointLocation { outside, boundary, inside };

inline PointLocation locate_point(const RatPolygon& poly, const RatPoint& p) {
  const auto& v = poly.vertices();
  if (v.empty()) return PointLocation::outside;
  if (v.size() == 1) return p == v[0] ? PointLocation::boundary : PointLocation::outside;
  if (v.size() == 2) {
    if (orient(v[0], v[1], p) != 0) return PointLocation::outside;
    const bool within =
        !(p < v[0]) && !(v[1] < p);  // lexicographic betweenness on a segment
    return within ? PointLocation::boundary : PointLocation::outside;
  }
  bool on_edge = false;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational side = orient(v[i], v[(i + 1) % n], p);
    if (side < 0) return PointLocation::outside;
    if (side == 0) on_edge = true;
  }
  return on_edge ? PointLocation::boundary : PointLocation::inside;
}

/// A closed halfplane a·x + b·y ≤ c.
struct Halfplane {
  Rational a;
  Rational b;
  Rational c;

  Rational eval(const RatPoint& p) const { return a * p.x + b * p.y; }
  bool contains(const RatPoint& p) const { return eval(p) <= c; }
};

namespace detail {

/// Sutherland–Hodgman clip of a convex polygon (CCW vertex list) by one
/// halfplane; exact rational intersection points.
inline std::vector<RatPoint> clip(const std::vector<RatPoint>& poly, const Halfplane& h) {
  std::vector<RatPoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& s = poly[i];
    const RatPoint& e = poly[(i + 1) % n];
    const bool s_in = h.contains(s);
    const bool e_in = h.contains(e);
    if (s_in) out.push_back(s);
    if (s_in != e_in) {
      const Rational num = h.c - h.eval(s);
      const Rational den = h.eval(e) - h.eval(s);
      const Rational t = num / den;  // den != 0 since s, e are on opposite sides
      out.push_back(RatPoint{s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)});
    }
  }
  return out;
}

}  // namespace detail

/// Intersects the halfplanes with the square [-bound, bound]^2 and returns the
/// canonical polygon. The caller must pick `bound` large enough that the box
/// does not truncate the true intersection. Empty or degenerate intersections
/// come back with fewer than three vertices.
inline RatPolygon intersect_halfplanes(const std::vector<Halfplane>& halfplanes,
                                       const Rational& bound) {
  std::vector<RatPoint> poly{
      {-bound, -bound}, {bound, -bound}, {bound, bound}, {-bound, bound}};
  for (const auto& h : halfplanes) {
    poly = detail::clip(poly, h);
    if (poly.empty()) break;
  }
  if (poly.empty()) {
    return RatPolygon();
  }
  // Clipping can leave duplicate or collinear vertices; re-canonicalize.
  return RatPolygon::hull_of(std::move(poly));
}

}  // namespace fiberscope
