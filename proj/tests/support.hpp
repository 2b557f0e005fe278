#pragma once

// Random inputs and brute-force oracles shared by the test binaries. Nothing
// here calls into the solvers.

#include <cmath>
#include <numbers>
#include <random>

#include "maxtrace/matrix.hpp"

namespace maxtrace::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_vec3(Rng& rng) { return Vec3{{uniform(rng), uniform(rng), uniform(rng)}}; }

inline Vec3 random_unit3(Rng& rng) {
  std::normal_distribution<double> n;
  for (;;) {
    Vec3 v{{n(rng), n(rng), n(rng)}};
    const double len = std::sqrt(dot(v, v));
    if (len > 1e-6) return (1.0 / len) * v;
  }
}

template <std::size_t N>
Mat<N> random_matrix(Rng& rng, double lo = -1.0, double hi = 1.0) {
  Mat<N> m;
  for (double& e : m.a) e = uniform(rng, lo, hi);
  return m;
}

template <std::size_t N>
Mat<N> random_symmetric(Rng& rng, double lo = -1.0, double hi = 1.0) {
  Mat<N> m = random_matrix<N>(rng, lo, hi);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

/// Uniformly distributed rotation from a normalized Gaussian quaternion.
inline Mat3 random_rotation3(Rng& rng) {
  std::normal_distribution<double> n;
  double w = n(rng), x = n(rng), y = n(rng), z = n(rng);
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len, x /= len, y /= len, z /= len;
  return Mat3{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
              {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
              {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
}

inline Mat2 random_rotation2(Rng& rng) { return rotation2(uniform(rng, 0.0, 2.0 * std::numbers::pi)); }

/// Orthogonal matrix that is a reflection with probability 1/2.
inline Mat3 random_orthogonal3(Rng& rng) {
  Mat3 q = random_rotation3(rng);
  if (uniform(rng) < 0.0) q = Mat3::diag(Vec3{{1, 1, -1}}) * q;
  return q;
}

/// Symmetric matrix Q diag(values) Q^T for a random rotation Q.
inline Mat3 symmetric_with_eigenvalues(Rng& rng, const Vec3& values) {
  const Mat3 q = random_rotation3(rng);
  return q * Mat3::diag(values) * transpose(q);
}

/// Largest trace(W m) over `samples` random rotations.
inline double sampled_max_trace(const Mat3& m, int samples, Rng& rng) {
  double best = -1e300;
  for (int i = 0; i < samples; ++i) best = std::max(best, trace(random_rotation3(rng) * m));
  return best;
}

/// Largest trace(R(theta) m) over a uniform grid of `points` angles.
inline double grid_max_trace(const Mat2& m, int points) {
  double best = -1e300;
  for (int i = 0; i < points; ++i) {
    const double th = 2.0 * std::numbers::pi * i / points;
    const double c = std::cos(th), s = std::sin(th);
    // trace([[c,-s],[s,c]] m)
    best = std::max(best, c * m(0, 0) - s * m(1, 0) + s * m(0, 1) + c * m(1, 1));
  }
  return best;
}

/// Direct characteristic polynomial det(alpha I - a).
inline double char_poly(const Mat3& a, double alpha) { return det(alpha * Mat3::identity() - a); }

/// Central differences of f at x along each coordinate; column j = df/dx_j.
template <typename F>
Mat3 central_difference_jacobian(F&& f, const Vec3& x, double h) {
  Mat3 j;
  for (std::size_t c = 0; c < 3; ++c) {
    Vec3 xp = x, xm = x;
    xp[c] += h;
    xm[c] -= h;
    const Vec3 d = (1.0 / (2.0 * h)) * (f(xp) - f(xm));
    for (std::size_t r = 0; r < 3; ++r) j(r, c) = d[r];
  }
  return j;
}

}  // namespace maxtrace::testing
