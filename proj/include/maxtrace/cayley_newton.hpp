#pragma once

// Symmetrization of a 3x3 matrix by a rotation found with Newton's method.
//
// Rotations are parametrized through the Cayley transform of the skew matrix
//
//          [  0   r  -s ]
//   A(x) = [ -r   0   t ],   x = (r, s, t),
//          [  s  -t   0 ]
//
// scaled so that F(x) = (delta/2) C(A(x)) = (delta/2) I - A + A^2 is
// polynomial in x, with delta = 1 + r^2 + s^2 + t^2. Newton's method drives
// the skew part of F(x) M to zero starting from x = 0; U = (2/delta) F(x)
// then makes U M symmetric, and the spatial solver finishes the job.
// Rotations by pi are outside the chart, so Newton can fail; the caller
// falls back to the SVD.

#include <optional>

#include "maxtrace/matrix.hpp"
#include "maxtrace/report.hpp"

namespace maxtrace {

struct CayleyPoint {
  Vec3 x;  ///< (r, s, t)

  double r() const { return x[0]; }
  double s() const { return x[1]; }
  double t() const { return x[2]; }
  double delta() const { return 1.0 + dot(x, x); }
};

struct NewtonConfig {
  int max_iters = 50;
  /// Converged when |g(x)|_inf <= g_tolerance * delta * (1 + max|M|), i.e.
  /// when the symmetry defect of U M is below 2 g_tolerance relative to M.
  double g_tolerance = 1e-12;
  /// Singular when |det J| < guard * max|J|^3.
  double jacobian_condition_guard = 1e-14;
  /// Diverged when |x| exceeds this.
  double divergence_bound = 1e8;
};

enum class NewtonStatus { converged, jacobian_singular, iteration_limit, diverged };

const char* to_string(NewtonStatus s);

struct NewtonOutcome {
  NewtonStatus status = NewtonStatus::iteration_limit;
  int iterations = 0;
  std::optional<Mat3> rotation;  ///< present iff converged
  CayleyPoint point;             ///< last iterate
};

Mat3 skew_from(const CayleyPoint& p);

/// F(x) = (delta/2) I - A + A^2, i.e. (delta/2) (I - A)(I + A)^-1 without an inverse.
Mat3 scaled_cayley(const CayleyPoint& p);

/// Exact Cayley transform (I - B)(I + B)^-1. Throws std::domain_error when
/// I + B is singular.
Mat3 cayley_transform(const Mat3& b);

/// g(x) = (G12, G31, G23) of the skew matrix G = F(x) M - M^T F(x)^T.
Vec3 symmetry_residual(const CayleyPoint& p, const Mat3& m);

/// Jacobian of symmetry_residual with respect to (r, s, t); column j holds
/// the partial derivative along x_j.
Mat3 symmetry_jacobian(const CayleyPoint& p, const Mat3& m);

/// Newton iteration from x = 0. Failures are reported in the status.
NewtonOutcome newton_symmetrize(const Mat3& m, const NewtonConfig& cfg = {});

/// Rotation maximizing trace(U m). Unless svd_only, tries Newton followed by
/// the symmetric maximizer and falls back to Kabsch-Umeyama if Newton fails
/// or the result does not pass the maximality test.
SolveReport<3> solve_spatial(const Mat3& m, const NewtonConfig& cfg = {}, bool svd_only = false,
                             double tol = kDefaultTol);

}  // namespace maxtrace
