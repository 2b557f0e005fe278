#include "maxtrace/spatial.hpp"

#include <cmath>
#include <stdexcept>

#include "maxtrace/characterization.hpp"
#include "maxtrace/spectral3.hpp"

namespace maxtrace {

Maximization3 maximize_symmetric(const Mat3& a, double tol) {
  if (!is_symmetric(a, tol)) throw std::invalid_argument("maximize_symmetric: matrix is not symmetric");
  if (is_maximal_3d(a, tol).is_maximal) return {Mat3::identity(), a};

  const SpectralDecomposition3 sd = spectral_decomposition(symmetric_part(a), tol);
  const Vec3& r = sd.basis[2];
  const Mat3 rot = 2.0 * outer(r, r) - Mat3::identity();
  return {rot, rot * a};
}

Maximization3 maximize_by_diagonalization(const Mat3& a, double tol) {
  if (!is_symmetric(a, tol)) throw std::invalid_argument("maximize_by_diagonalization: matrix is not symmetric");
  const SpectralDecomposition3 sd = spectral_decomposition(symmetric_part(a), tol);
  const auto& alpha = sd.eigenvalues;

  std::array<bool, 3> flip{};
  int flips = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    flip[i] = alpha[i] < 0.0;
    flips += flip[i] ? 1 : 0;
  }
  if (flips % 2 == 1) {
    std::size_t k = 0;
    for (std::size_t j = 1; j < 3; ++j)
      if (std::abs(alpha[j]) < std::abs(alpha[k])) k = j;
    flip[k] = !flip[k];
  }

  Vec3 signs;
  for (std::size_t i = 0; i < 3; ++i) signs[i] = flip[i] ? -1.0 : 1.0;
  const Mat3 v = sd.vectors();
  const Mat3 w = v * Mat3::diag(signs) * transpose(v);
  return {w, w * a};
}

Mat3 axis_angle_rotation(const Vec3& w, double theta) {
  const double c = std::cos(theta), s = std::sin(theta), t = 1.0 - c;
  const double x = w[0], y = w[1], z = w[2];
  return Mat3{{c + x * x * t, x * y * t - z * s, x * z * t + y * s},
              {y * x * t + z * s, c + y * y * t, y * z * t - x * s},
              {z * x * t - y * s, z * y * t + x * s, c + z * z * t}};
}

}  // namespace maxtrace
