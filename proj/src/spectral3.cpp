#include "maxtrace/spectral3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace maxtrace {

namespace {

// p below this (relative to max|a|) means a == qI.
constexpr double kScalarMatrixTol = 1e-12;
// C = a - alpha*I below this (relative to 1 + max|a|) is the zero matrix.
constexpr double kZeroMatrixTol = 1e-12;
// A cross product counts as nonzero above this times max|C|^2.
constexpr double kCrossProductTol = 1e-12;
// Eigenvalues closer than this (relative to 1 + max|a|) are reported as multiple.
constexpr double kClusterTol = 1e-7;

void require_symmetric(const Mat3& a, double tol, const char* who) {
  if (!all_finite(a)) throw std::invalid_argument(std::string(who) + ": non-finite entry");
  if (!is_symmetric(a, tol)) throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

std::size_t argmax_abs(const Vec3& u) {
  std::size_t k = 0;
  for (std::size_t j = 1; j < 3; ++j)
    if (std::abs(u[j]) > std::abs(u[k])) k = j;
  return k;
}

// Cross-product eigenspace construction, without the eigenvalue check.
std::vector<Vec3> eigenspace_unchecked(const Mat3& a, double alpha) {
  const Mat3 c = a - alpha * Mat3::identity();
  const double c_scale = max_abs(c);
  if (c_scale <= kZeroMatrixTol * (1.0 + max_abs(a)))
    return {Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}}, Vec3{{0, 0, 1}}};

  const std::array<Vec3, 3> cols{c.column(0), c.column(1), c.column(2)};
  const std::array<Vec3, 3> crosses{cross(cols[0], cols[1]), cross(cols[1], cols[2]),
                                    cross(cols[2], cols[0])};
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (norm(crosses[i]) > norm(crosses[best])) best = i;
  if (norm(crosses[best]) > kCrossProductTol * c_scale * c_scale) return {normalized(crosses[best])};

  // Rank one: every nonzero column spans the column space of C.
  std::size_t u = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (norm(cols[i]) > norm(cols[u])) u = i;
  const auto plane = orthogonal_plane(cols[u]);
  return {plane[0], plane[1]};
}

}  // namespace

const char* to_string(DegenerateCase c) {
  switch (c) {
    case DegenerateCase::distinct: return "distinct";
    case DegenerateCase::double_root: return "double_root";
    case DegenerateCase::triple_root: return "triple_root";
  }
  return "?";
}

namespace {

Eigenvalues3 eigenvalues_unscaled(const Mat3& a) {
  Eigenvalues3 out;
  auto& in = out.intermediates;
  in.q = trace(a) / 3.0;
  const double d0 = a(0, 0) - in.q, d1 = a(1, 1) - in.q, d2 = a(2, 2) - in.q;
  const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  in.p = std::sqrt((d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * off) / 6.0);

  if (in.p <= kScalarMatrixTol * max_abs(a)) {
    out.p_zero = true;
    out.values = {in.q, in.q, in.q};
    return out;
  }

  const Mat3 b = (1.0 / in.p) * (a - in.q * Mat3::identity());
  in.det_b = det(b);
  const double half = std::clamp(in.det_b / 2.0, -1.0, 1.0);
  constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
  in.theta[2] = std::acos(half) / 3.0;
  in.theta[1] = two_thirds_pi - in.theta[2];
  in.theta[0] = two_thirds_pi + in.theta[2];
  for (std::size_t k = 0; k < 3; ++k) out.values[k] = 2.0 * in.p * std::cos(in.theta[k]) + in.q;
  // cos is monotone on [0, pi]; roundoff at theta_2 == theta_3 can still swap ties.
  std::sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace

Eigenvalues3 eigenvalues3(const Mat3& a, double tol) {
  require_symmetric(a, tol, "eigenvalues3");
  const double f = unit_scale(a);
  Eigenvalues3 out = eigenvalues_unscaled(f * a);
  out.intermediates.q /= f;
  out.intermediates.p /= f;
  for (double& v : out.values) v /= f;
  return out;
}

std::array<Vec3, 2> orthogonal_plane(const Vec3& u) {
  const std::size_t k = argmax_abs(u);
  if (u[k] == 0.0) throw std::invalid_argument("orthogonal_plane: zero vector");
  Vec3 w{{1, 1, 1}};
  w[k] = 0.0;
  const Vec3 v1 = cross(u, w);
  const Vec3 v2 = cross(v1, u);
  return {normalized(v1), normalized(v2)};
}

std::vector<Vec3> eigenspace_basis(const Mat3& a, double alpha, double tol) {
  require_symmetric(a, tol, "eigenspace_basis");
  const double s = 1.0 + max_abs(a);
  if (std::abs(det(alpha * Mat3::identity() - a)) > tol * s * s * s)
    throw std::invalid_argument("eigenspace_basis: alpha is not an eigenvalue");
  return eigenspace_unchecked(a, alpha);
}

SpectralDecomposition3 spectral_decomposition(const Mat3& input, double tol) {
  require_symmetric(input, tol, "spectral_decomposition");
  const double f = unit_scale(input);
  const Mat3 a = f * input;
  const Eigenvalues3 ev = eigenvalues_unscaled(a);
  SpectralDecomposition3 out;

  if (ev.p_zero) {
    for (std::size_t k = 0; k < 3; ++k) out.eigenvalues[k] = ev.values[k] / f;
    out.basis = {Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}}, Vec3{{0, 0, 1}}};
    out.degenerate_case = DegenerateCase::triple_root;
    return out;
  }

  const auto& alpha = ev.values;
  // The extreme eigenvalue farther from the middle one is simple and
  // accurately computed even when the other two (nearly) coincide.
  const std::size_t e = (alpha[2] - alpha[1] >= alpha[1] - alpha[0]) ? 2 : 0;
  const Vec3 ve = eigenspace_unchecked(a, alpha[e]).front();

  // The remaining pair lives in the plane orthogonal to ve. Diagonalize the
  // 2x2 restriction of a to that plane in closed form; for a double root any
  // rotation of the plane works, and this also refines the pair's values.
  const auto plane = orthogonal_plane(ve);
  const Vec3 ab0 = a * plane[0], ab1 = a * plane[1];
  const double t00 = dot(plane[0], ab0), t11 = dot(plane[1], ab1);
  const double t01 = 0.5 * (dot(plane[0], ab1) + dot(plane[1], ab0));
  const double mean = 0.5 * (t00 + t11), half_diff = 0.5 * (t00 - t11);
  const double radius = std::hypot(half_diff, t01);
  const double phi = 0.5 * std::atan2(t01, half_diff);
  const double c = std::cos(phi), s = std::sin(phi);
  const Vec3 hi = c * plane[0] + s * plane[1];
  const Vec3 lo = c * plane[1] - s * plane[0];

  std::array<std::pair<double, Vec3>, 3> pairs{
      std::pair{alpha[e], ve}, std::pair{mean - radius, lo}, std::pair{mean + radius, hi}};
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 0; k < 3; ++k) {
    out.eigenvalues[k] = pairs[k].first / f;
    out.basis[k] = pairs[k].second;
  }

  const double cluster = kClusterTol * (1.0 + max_abs(input));
  const auto& v = out.eigenvalues;
  if (v[2] - v[0] <= cluster)
    out.degenerate_case = DegenerateCase::triple_root;
  else if (v[1] - v[0] <= cluster || v[2] - v[1] <= cluster)
    out.degenerate_case = DegenerateCase::double_root;
  else
    out.degenerate_case = DegenerateCase::distinct;
  return out;
}

}  // namespace maxtrace
