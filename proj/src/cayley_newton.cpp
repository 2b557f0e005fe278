#include "maxtrace/cayley_newton.hpp"

#include <cmath>
#include <stdexcept>

#include "maxtrace/characterization.hpp"
#include "maxtrace/kabsch_umeyama.hpp"
#include "maxtrace/spatial.hpp"

namespace maxtrace {

namespace {

// Entries (G12, G31, G23) of a skew matrix G = F M - M^T F^T.
Vec3 skew_entries(const Mat3& f, const Mat3& m) {
  const Mat3 g = f * m - transpose(m) * transpose(f);
  return Vec3{{g(0, 1), g(2, 0), g(1, 2)}};
}

// Solves j * dx = rhs by Cramer's rule; det precomputed.
Vec3 solve3(const Mat3& j, const Vec3& rhs, double d) {
  Vec3 out;
  for (std::size_t c = 0; c < 3; ++c) {
    Mat3 jc = j;
    for (std::size_t r = 0; r < 3; ++r) jc(r, c) = rhs[r];
    out[c] = det(jc) / d;
  }
  return out;
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::planar_closed_form: return "planar_closed_form";
    case Strategy::newton_then_spectral: return "newton_then_spectral";
    case Strategy::svd_kabsch_umeyama: return "svd_kabsch_umeyama";
  }
  return "?";
}

const char* to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::jacobian_singular: return "jacobian_singular";
    case NewtonStatus::iteration_limit: return "iteration_limit";
    case NewtonStatus::diverged: return "diverged";
  }
  return "?";
}

Mat3 skew_from(const CayleyPoint& p) {
  const double r = p.r(), s = p.s(), t = p.t();
  return Mat3{{0.0, r, -s}, {-r, 0.0, t}, {s, -t, 0.0}};
}

Mat3 scaled_cayley(const CayleyPoint& p) {
  const double r = p.r(), s = p.s(), t = p.t();
  const double h = 0.5 * p.delta();
  // (delta/2) I - A + A^2, expanded
  return Mat3{{h - r * r - s * s, -r + s * t, s + r * t},
              {r + s * t, h - r * r - t * t, -t + r * s},
              {-s + r * t, t + r * s, h - s * s - t * t}};
}

Mat3 cayley_transform(const Mat3& b) {
  const Mat3 id = Mat3::identity();
  return (id - b) * inverse(id + b);
}

Vec3 symmetry_residual(const CayleyPoint& p, const Mat3& m) { return skew_entries(scaled_cayley(p), m); }

Mat3 symmetry_jacobian(const CayleyPoint& p, const Mat3& m) {
  const double r = p.r(), s = p.s(), t = p.t();
  // dF/dr = r I - dA/dr + d(A^2)/dr, likewise for s and t.
  const Mat3 f_r{{-r, -1.0, t}, {1.0, -r, s}, {t, s, r}};
  const Mat3 f_s{{-s, t, 1.0}, {t, s, r}, {-1.0, r, -s}};
  const Mat3 f_t{{t, s, r}, {s, -t, -1.0}, {r, 1.0, -t}};
  return Mat3::from_columns({skew_entries(f_r, m), skew_entries(f_s, m), skew_entries(f_t, m)});
}

NewtonOutcome newton_symmetrize(const Mat3& input, const NewtonConfig& cfg) {
  NewtonOutcome out;
  // g and J are linear in M, so the iterates do not depend on its scale.
  const Mat3 m = unit_scale(input) * input;
  const double m_scale = 1.0 + max_abs(m);
  CayleyPoint& p = out.point;

  for (int iter = 0;; ++iter) {
    const Vec3 g = symmetry_residual(p, m);
    if (max_abs(g) <= cfg.g_tolerance * p.delta() * m_scale) {
      out.status = NewtonStatus::converged;
      out.iterations = iter;
      out.rotation = (2.0 / p.delta()) * scaled_cayley(p);
      return out;
    }
    if (iter >= cfg.max_iters) {
      out.status = NewtonStatus::iteration_limit;
      out.iterations = iter;
      return out;
    }
    const Mat3 j = symmetry_jacobian(p, m);
    const double d = det(j);
    const double j_scale = max_abs(j);
    if (!(std::abs(d) >= cfg.jacobian_condition_guard * j_scale * j_scale * j_scale) || d == 0.0) {
      out.status = NewtonStatus::jacobian_singular;
      out.iterations = iter;
      return out;
    }
    p.x = p.x - solve3(j, g, d);
    if (!(norm(p.x) <= cfg.divergence_bound)) {
      out.status = NewtonStatus::diverged;
      out.iterations = iter + 1;
      return out;
    }
  }
}

SolveReport<3> solve_spatial(const Mat3& input, const NewtonConfig& cfg, bool svd_only, double tol) {
  SolveReport<3> rep;
  const Mat3 m = unit_scale(input) * input;
  auto use_svd = [&] {
    rep.rotation = kabsch_umeyama(m);
    rep.strategy = Strategy::svd_kabsch_umeyama;
  };

  if (svd_only) {
    use_svd();
  } else {
    const NewtonOutcome nw = newton_symmetrize(m, cfg);
    rep.newton_iterations = nw.iterations;
    bool ok = false;
    if (nw.status == NewtonStatus::converged) {
      const Mat3 sym = symmetric_part(*nw.rotation * m);
      const Maximization3 mx = maximize_symmetric(sym, tol);
      const Mat3 total = mx.rotation * *nw.rotation;
      if (is_maximal_3d(total * m, tol).is_maximal) {
        rep.rotation = total;
        rep.strategy = Strategy::newton_then_spectral;
        ok = true;
      }
    }
    if (!ok) {
      use_svd();
      rep.fell_back = true;
    }
  }
  rep.achieved_trace = trace(rep.rotation * input);
  return rep;
}

}  // namespace maxtrace
