#pragma once

// SVD-free maximizers for symmetric 3x3 matrices.

#include "maxtrace/matrix.hpp"

namespace maxtrace {

struct Maximization3 {
  Mat3 rotation;  ///< R
  Mat3 maximal;   ///< R * a, of maximal trace
};

/// If a is already maximal, returns (I, a). Otherwise R = 2 r r^T - I with r a
/// unit eigenvector of the largest eigenvalue of a.
/// Throws std::invalid_argument when a is not symmetric.
Maximization3 maximize_symmetric(const Mat3& a, double tol = kDefaultTol);

/// Diagonalizes a = V diag(alpha) V^T, flips the signs of the negative
/// eigenvalues (plus the smallest-magnitude one when their count is odd, the
/// lowest index winning ties) and returns W = V G V^T.
/// Throws std::invalid_argument when a is not symmetric.
Maximization3 maximize_by_diagonalization(const Mat3& a, double tol = kDefaultTol);

/// Rotation by theta counterclockwise about the unit axis w (right-hand rule).
Mat3 axis_angle_rotation(const Vec3& w, double theta);

}  // namespace maxtrace
