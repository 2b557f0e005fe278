#include "maxtrace/planar.hpp"

#include <cmath>
#include <stdexcept>

namespace maxtrace {

PlanarCoefficients planar_coefficients(const Mat2& m) {
  PlanarCoefficients pc;
  pc.a = m(0, 0) + m(1, 1);
  pc.b = m(1, 0) - m(0, 1);
  pc.c = std::hypot(pc.a, pc.b);
  return pc;
}

Mat2 solve_planar(const Mat2& m) {
  const PlanarCoefficients pc = planar_coefficients(m);
  const double flat = 1e-12 * (1.0 + max_abs(m));
  if (std::abs(pc.a) <= flat && std::abs(pc.b) <= flat) return Mat2::identity();
  const double ca = pc.a / pc.c, cb = pc.b / pc.c;
  return Mat2{{ca, cb}, {-cb, ca}};
}

Mat2 solve_planar_wahba(std::span<const Vec2> p, std::span<const Vec2> q, std::span<const double> w) {
  if (p.size() != q.size() || p.size() != w.size())
    throw std::invalid_argument("solve_planar_wahba: point and weight counts differ");
  Mat2 m;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(w[i] >= 0.0)) throw std::invalid_argument("solve_planar_wahba: negative weight");
    m = m + w[i] * outer(q[i], p[i]);
  }
  return solve_planar(m);
}

}  // namespace maxtrace
