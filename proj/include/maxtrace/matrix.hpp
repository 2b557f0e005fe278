#pragma once

// Fixed-size 2x2 / 3x3 real matrices and vectors.
//
// Rotation and symmetry are runtime predicates, not types: the solvers build
// matrices whose properties are exactly what the tests check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace maxtrace {

/// Default relative tolerance for the matrix predicates.
inline constexpr double kDefaultTol = 1e-9;

template <std::size_t N>
struct Vec {
  std::array<double, N> v{};

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  friend constexpr bool operator==(const Vec&, const Vec&) = default;
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

/// Dense N x N matrix, row-major.
template <std::size_t N>
struct Mat {
  std::array<double, N * N> a{};

  constexpr Mat() = default;

  /// Row-major initializer: Mat3{{1,2,3},{4,5,6},{7,8,9}}.
  constexpr Mat(std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() != N) throw std::invalid_argument("Mat: wrong number of rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw std::invalid_argument("Mat: wrong number of columns");
      std::size_t j = 0;
      for (double x : row) a[i * N + j++] = x;
      ++i;
    }
  }

  constexpr double& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static constexpr Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Mat diag(const Vec<N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  static constexpr Mat from_columns(const std::array<Vec<N>, N>& cols) {
    Mat m;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) m(i, j) = cols[j][i];
    return m;
  }

  constexpr Vec<N> column(std::size_t j) const {
    Vec<N> c;
    for (std::size_t i = 0; i < N; ++i) c[i] = (*this)(i, j);
    return c;
  }

  constexpr Vec<N> row(std::size_t i) const {
    Vec<N> r;
    for (std::size_t j = 0; j < N; ++j) r[j] = (*this)(i, j);
    return r;
  }

  friend constexpr bool operator==(const Mat&, const Mat&) = default;
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

// ---------------------------------------------------------------------------
// vectors

template <std::size_t N>
constexpr Vec<N> operator+(const Vec<N>& x, const Vec<N>& y) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
  return r;
}

template <std::size_t N>
constexpr Vec<N> operator-(const Vec<N>& x, const Vec<N>& y) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
  return r;
}

template <std::size_t N>
constexpr Vec<N> operator*(double s, const Vec<N>& x) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * x[i];
  return r;
}

template <std::size_t N>
constexpr double dot(const Vec<N>& x, const Vec<N>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
  return s;
}

template <std::size_t N>
inline double norm(const Vec<N>& x) {
  return std::sqrt(dot(x, x));
}

template <std::size_t N>
constexpr double max_abs(const Vec<N>& x) {
  double s = 0.0;
  for (double e : x.v) s = std::max(s, std::abs(e));
  return s;
}

constexpr Vec3 cross(const Vec3& x, const Vec3& y) {
  return Vec3{{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]}};
}

/// x / |x|. Throws on the zero vector.
template <std::size_t N>
inline Vec<N> normalized(const Vec<N>& x) {
  const double n = norm(x);
  if (!(n > 0.0)) throw std::domain_error("normalized: zero vector");
  return (1.0 / n) * x;
}

// ---------------------------------------------------------------------------
// matrices

template <std::size_t N>
constexpr Mat<N> operator+(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

template <std::size_t N>
constexpr Mat<N> operator-(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

template <std::size_t N>
constexpr Mat<N> operator-(const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = -x.a[k];
  return r;
}

template <std::size_t N>
constexpr Mat<N> operator*(double s, const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = s * x.a[k];
  return r;
}

template <std::size_t N>
constexpr Mat<N> operator*(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

template <std::size_t N>
constexpr Vec<N> operator*(const Mat<N>& m, const Vec<N>& x) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < N; ++k) s += m(i, k) * x[k];
    r[i] = s;
  }
  return r;
}

template <std::size_t N>
constexpr Mat<N> matmul(const Mat<N>& x, const Mat<N>& y) { return x * y; }

template <std::size_t N>
constexpr Mat<N> matadd(const Mat<N>& x, const Mat<N>& y) { return x + y; }

template <std::size_t N>
constexpr Mat<N> scale(double s, const Mat<N>& x) { return s * x; }

template <std::size_t N>
constexpr Mat<N> transpose(const Mat<N>& m) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = m(i, j);
  return r;
}

template <std::size_t N>
constexpr double trace(const Mat<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += m(i, i);
  return s;
}

constexpr double det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

constexpr double det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Inverse via the adjugate. Throws std::domain_error when det(m) == 0.
inline Mat2 inverse(const Mat2& m) {
  const double d = det(m);
  if (d == 0.0) throw std::domain_error("inverse: singular matrix");
  return (1.0 / d) * Mat2{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
}

inline Mat3 inverse(const Mat3& m) {
  const double d = det(m);
  if (d == 0.0) throw std::domain_error("inverse: singular matrix");
  Mat3 adj;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return (1.0 / d) * adj;
}

/// x y^T
template <std::size_t N>
constexpr Mat<N> outer(const Vec<N>& x, const Vec<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = x[i] * y[j];
  return r;
}

/// Largest absolute entry; the reference scale for relative tolerances.
template <std::size_t N>
constexpr double max_abs(const Mat<N>& m) {
  double s = 0.0;
  for (double e : m.a) s = std::max(s, std::abs(e));
  return s;
}

/// max |m_ij - m_ji|
template <std::size_t N>
constexpr double symmetry_defect(const Mat<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) s = std::max(s, std::abs(m(i, j) - m(j, i)));
  return s;
}

/// (m + m^T) / 2
template <std::size_t N>
constexpr Mat<N> symmetric_part(const Mat<N>& m) {
  return 0.5 * (m + transpose(m));
}

template <std::size_t N>
constexpr bool all_finite(const Mat<N>& m) {
  for (double e : m.a)
    if (!std::isfinite(e)) return false;
  return true;
}

/// max |m_ij - m_ji| <= tol * max|m_ij|
template <std::size_t N>
constexpr bool is_symmetric(const Mat<N>& m, double tol = kDefaultTol) {
  return symmetry_defect(m) <= tol * max_abs(m);
}

/// ||m^T m - I||_max <= tol and |det(m) - 1| <= tol. Rotations have unit
/// scale, so the tolerance is absolute here.
template <std::size_t N>
constexpr bool is_rotation(const Mat<N>& m, double tol = kDefaultTol) {
  if (!all_finite(m)) return false;
  const Mat<N> e = transpose(m) * m - Mat<N>::identity();
  return max_abs(e) <= tol && std::abs(det(m) - 1.0) <= tol;
}

/// Power of two f with max|f m| in [1, 2) (1 for the zero matrix). Scaling
/// by f is exact and keeps products of entries clear of under/overflow.
template <std::size_t N>
inline double unit_scale(const Mat<N>& m) {
  const double a = max_abs(m);
  if (!(a > 0.0) || !std::isfinite(a)) return 1.0;
  return std::ldexp(1.0, std::min(-std::ilogb(a), 1023));
}

/// Counterclockwise planar rotation by theta.
inline Mat2 rotation2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat2{{c, -s}, {s, c}};
}

}  // namespace maxtrace
