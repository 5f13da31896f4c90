#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fiberscope/alexnorm.hpp"
#include "fiberscope/brown.hpp"
#include "fiberscope/error.hpp"
#include "fiberscope/laurent.hpp"
#include "fiberscope/numeric.hpp"

namespace fiberscope {

/// The homeomorphism type (−χ, p) of an orientable surface with p punctures
/// and Euler characteristic χ = 2 − 2g − p.
struct SurfaceType {
  std::int64_t minus_chi = 0;
  std::int64_t punctures = 0;

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

/// Valid iff the genus g = (−χ − p + 2)/2 is a nonnegative integer. This
/// forces p ≡ −χ (mod 2) and p ≤ −χ + 2, and requires −χ ≥ 1, p ≥ 0.
inline bool is_valid_surface_type(SurfaceType t) {
  if (t.minus_chi < 1 || t.punctures < 0) return false;
  const std::int64_t numerator = t.minus_chi - t.punctures + 2;
  return numerator >= 0 && numerator % 2 == 0;
}

/// Genus of a valid surface type.
inline std::int64_t genus_of(SurfaceType t) {
  if (!is_valid_surface_type(t)) {
    throw DomainError("invalid_surface_type",
                      "(" + std::to_string(t.minus_chi) + ", " +
                          std::to_string(t.punctures) + ") is not a surface type");
  }
  return (t.minus_chi - t.punctures + 2) / 2;
}

/// Images of the peripheral generators μ, λ in H₁ mod torsion.
struct CuspData {
  std::array<std::int64_t, 2> mu{};
  std::array<std::int64_t, 2> lambda{};

  bool is_degenerate() const {
    return mu[0] == 0 && mu[1] == 0 && lambda[0] == 0 && lambda[1] == 0;
  }
};

/// Puncture count of the fiber of the fibration induced by φ:
/// |gcd(φ·μ, φ·λ)|, with gcd(0, 0) = 0.
inline std::int64_t puncture_count(const CuspData& cusp, CohomologyClass phi) {
  if (phi.is_zero()) {
    throw DomainError("zero_class", "puncture count of the zero class");
  }
  const std::int64_t pairing_mu = phi.c * cusp.mu[0] + phi.d * cusp.mu[1];
  const std::int64_t pairing_lambda = phi.c * cusp.lambda[0] + phi.d * cusp.lambda[1];
  return gcd64(pairing_mu, pairing_lambda);
}

/// Fiber type of the fibration induced by a primitive fibered class:
/// (‖φ‖_A, |gcd(φ·μ, φ·λ)|). The norm computes −χ of the fiber and the gcd
/// formula its puncture count.
inline SurfaceType fiber_type(const LaurentPoly2& f, const CuspData& cusp,
                              const std::vector<CohomologyClass>& nonfibered_lines,
                              CohomologyClass phi) {
  if (phi.is_zero()) throw DomainError("zero_class", "fiber type of the zero class");
  if (!phi.is_primitive()) {
    throw DomainError("non_primitive_class",
                      "(" + std::to_string(phi.c) + ", " + std::to_string(phi.d) +
                          ") is not primitive");
  }
  if (on_some_line(nonfibered_lines, phi)) {
    throw DomainError("nonfibered_class",
                      "class (" + std::to_string(phi.c) + ", " + std::to_string(phi.d) +
                          ") does not fiber: it lies on a non-fibered line");
  }
  return SurfaceType{alexander_norm(f, phi), puncture_count(cusp, phi)};
}

/// A fiber type together with the first class realizing it in scan order.
using TypeWitnessMap = std::map<SurfaceType, CohomologyClass>;

/// Enumerates every surface type realized by an integral class of norm in
/// [1, max_minus_chi] off the non-fibered lines, with one witness class per
/// type. Non-primitive classes kφ₀ are included: they realize the type
/// k·(−χ₀, p₀) and are fibered exactly when φ₀ is (ray invariance), and some
/// types are realized only this way. The scan domain is the integer bounding
/// box of the norm ball scaled by max_minus_chi, which is finite because the
/// ball is bounded; degeneracy errors from the ball computation propagate.
inline TypeWitnessMap enumerate_types_with_witnesses(
    const LaurentPoly2& f, const CuspData& cusp,
    const std::vector<CohomologyClass>& nonfibered_lines,
    std::int64_t max_minus_chi) {
  if (max_minus_chi < 1) {
    throw DomainError("invalid_bound", "max_minus_chi must be >= 1");
  }
  const RatPolygon ball = unit_ball(f);

  Rational radius = 0;
  for (const auto& v : ball.vertices()) {
    for (const Rational& coord : {v.x, v.y}) {
      const Rational a = coord < 0 ? Rational(-coord) : coord;
      if (a > radius) radius = a;
    }
  }
  const Rational scaled = radius * max_minus_chi;
  const std::int64_t box =
      to_int64(Int(numerator(scaled) / denominator(scaled))) + 1;

  TypeWitnessMap types;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      const CohomologyClass phi{x, y};
      if (phi.is_zero()) continue;
      if (on_some_line(nonfibered_lines, phi)) continue;
      const std::int64_t norm = alexander_norm(f, phi);
      if (norm < 1 || norm > max_minus_chi) continue;
      types.try_emplace(SurfaceType{norm, puncture_count(cusp, phi)}, phi);
    }
  }
  return types;
}

/// Key set of enumerate_types_with_witnesses.
inline std::set<SurfaceType> enumerate_types(
    const LaurentPoly2& f, const CuspData& cusp,
    const std::vector<CohomologyClass>& nonfibered_lines,
    std::int64_t max_minus_chi) {
  std::set<SurfaceType> result;
  for (const auto& [t, w] :
       enumerate_types_with_witnesses(f, cusp, nonfibered_lines, max_minus_chi)) {
    result.insert(t);
  }
  return result;
}

/// The widely-fibered predicate: t is a valid surface type with p ≥ 1,
/// 5p ≤ −χ, and t ≠ (5, 1).
inline bool wf_predicate(SurfaceType t) {
  return is_valid_surface_type(t) && t.punctures >= 1 &&
         5 * t.punctures <= t.minus_chi && !(t.minus_chi == 5 && t.punctures == 1);
}

}  // namespace fiberscope
