#pragma once

// Closed-form 2D solution: the rotation maximizing tr(U M) for a 2x2 M.
// With a = m11 + m22 and b = m21 - m12, tr(R(theta) M) = a cos(theta) - b sin(theta),
// maximized at cos = a/c, sin = -b/c with c = hypot(a, b).

#include <span>

#include "maxtrace/matrix.hpp"

namespace maxtrace {

struct PlanarCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;  ///< hypot(a, b)
};

PlanarCoefficients planar_coefficients(const Mat2& m);

/// Rotation U with trace(U m) == c and U m symmetric. Returns the identity
/// when a and b both vanish (|a|, |b| <= 1e-12 * (1 + max|m|)); every
/// rotation gives the same trace there.
Mat2 solve_planar(const Mat2& m);

/// Minimizes sum_i w_i |U q_i - p_i|^2 over 2x2 rotations.
/// Throws std::invalid_argument on length mismatch or a negative weight.
Mat2 solve_planar_wahba(std::span<const Vec2> p, std::span<const Vec2> q, std::span<const double> w);

}  // namespace maxtrace
