#include "maxtrace/kabsch_umeyama.hpp"

#include <algorithm>
#include <cmath>

#include "maxtrace/spectral3.hpp"

namespace maxtrace {

namespace {

// Relative threshold below which a singular value is treated as zero.
constexpr double kZeroSingular = 1e-9;

Vec3 orthonormalize_against(Vec3 x, const Vec3& unit) { return normalized(x - dot(x, unit) * unit); }

// Standard basis vector least aligned with the unit vector u.
Vec3 least_aligned_axis(const Vec3& u) {
  std::size_t j = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(u[i]) < std::abs(u[j])) j = i;
  Vec3 e;
  e[j] = 1.0;
  return e;
}

}  // namespace

Svd3 svd3(const Mat3& input) {
  const double f = unit_scale(input);
  const Mat3 m = f * input;
  const SpectralDecomposition3 sd = spectral_decomposition(transpose(m) * m);

  std::array<std::pair<double, Vec3>, 3> sr;
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec3& r = sd.basis[2 - k];
    sr[k] = {norm(m * r), r};
  }
  std::stable_sort(sr.begin(), sr.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  Svd3 out;
  for (std::size_t k = 0; k < 3; ++k) out.s[k] = sr[k].first;
  out.r = Mat3::from_columns({sr[0].second, sr[1].second, sr[2].second});

  if (!(out.s[0] > 0.0)) {
    out.v = Mat3::identity();
    return out;
  }
  const auto scaled = out.s;
  for (double& x : out.s) x /= f;
  const double zero = kZeroSingular * scaled[0];

  const Vec3 v1 = (1.0 / scaled[0]) * (m * sr[0].second);
  const Vec3 v2 = scaled[1] > zero ? orthonormalize_against((1.0 / scaled[1]) * (m * sr[1].second), normalized(v1))
                                  : orthonormalize_against(least_aligned_axis(normalized(v1)), normalized(v1));
  const Vec3 u1 = normalized(v1);
  Vec3 v3 = cross(u1, v2);
  if (scaled[2] > zero && dot(m * sr[2].second, v3) < 0.0) v3 = -1.0 * v3;
  out.v = Mat3::from_columns({u1, v2, v3});
  return out;
}

Svd2 svd2(const Mat2& m) {
  const double e = 0.5 * (m(0, 0) + m(1, 1)), f = 0.5 * (m(0, 0) - m(1, 1));
  const double g = 0.5 * (m(1, 0) + m(0, 1)), h = 0.5 * (m(1, 0) - m(0, 1));
  const double q = std::hypot(e, h), r = std::hypot(f, g);
  const double a1 = std::atan2(g, f), a2 = std::atan2(h, e);
  const double theta = 0.5 * (a2 - a1), phi = 0.5 * (a2 + a1);
  // m = rot(phi) * diag(q + r, q - r) * rot(theta)
  const double second = q - r;
  const double sign = second < 0.0 ? -1.0 : 1.0;

  Svd2 out;
  out.s = {q + r, std::abs(second)};
  out.v = rotation2(phi);
  out.r = rotation2(-theta) * Mat2::diag(Vec2{{1.0, sign}});
  return out;
}

Mat3 kabsch_umeyama(const Mat3& m) {
  const Svd3 svd = svd3(m);
  const double last = det(svd.v) * det(svd.r) > 0.0 ? 1.0 : -1.0;
  return svd.r * Mat3::diag(Vec3{{1.0, 1.0, last}}) * transpose(svd.v);
}

Mat2 kabsch_umeyama_2d(const Mat2& m) {
  const Svd2 svd = svd2(m);
  const double last = det(svd.v) * det(svd.r) > 0.0 ? 1.0 : -1.0;
  return svd.r * Mat2::diag(Vec2{{1.0, last}}) * transpose(svd.v);
}

}  // namespace maxtrace
