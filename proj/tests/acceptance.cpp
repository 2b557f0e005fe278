// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "maxtrace/batch.hpp"
#include "maxtrace/cayley_newton.hpp"
#include "maxtrace/characterization.hpp"
#include "maxtrace/planar.hpp"
#include "maxtrace/spectral3.hpp"
#include "support.hpp"

using namespace maxtrace;
using namespace maxtrace::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

unsigned worker_count() { return std::max(2u, std::thread::hardware_concurrency()); }

Outcome golden_example() {
  const Mat3 m{{-2, -1, 0}, {-1, -2, -1}, {0, 1, 2}};
  bool ok = true;
  std::string detail;
  for (bool svd_only : {false, true}) {
    if (!detail.empty()) detail += "; ";
    const auto r = solve_spatial(m, {}, svd_only);
    const Mat3 um = r.rotation * m;
    const double gap = std::abs(r.achieved_trace - 6.0), defect = symmetry_defect(um);
    const bool pass = is_rotation(r.rotation) && gap <= 1e-9 && defect <= 1e-9 && is_maximal_3d(um).is_maximal;
    ok = ok && pass;
    detail += fmt("%s: |trace-6|=%.1e defect=%.1e", to_string(r.strategy), gap, defect);
  }
  return {ok, detail};
}

Outcome newton_success_rate() {
  const auto input = generate(100'000, 42, MatrixKind::dense_uniform);
  BatchOptions opts;
  opts.workers = worker_count();
  const auto s = run_batch(input, opts).summary;
  const double rate = static_cast<double>(s.fell_back) / static_cast<double>(s.total);
  return {rate < 0.01 && s.mean_iterations >= 5.0 && s.mean_iterations <= 12.0 && s.failures == 0,
          fmt("fallback rate %.4f%%, mean iterations %.3f, failures %zu", 100 * rate, s.mean_iterations, s.failures)};
}

Outcome rank_one_failure() {
  const auto input = generate(1000, 43, MatrixKind::rank1);
  BatchOptions opts;
  opts.workers = worker_count();
  const auto s = run_batch(input, opts).summary;
  const double rate = static_cast<double>(s.fell_back) / static_cast<double>(s.total);
  return {rate > 0.9 && s.failures == 0, fmt("fallback rate %.1f%%, maximality failures %zu", 100 * rate, s.failures)};
}

Outcome cross_strategy() {
  const auto input = generate(10'000, 44, MatrixKind::dense_uniform);
  BatchOptions opts;
  opts.workers = worker_count();
  opts.cross_check = true;
  const auto s = run_batch(input, opts).summary;
  return {s.max_trace_gap && *s.max_trace_gap <= 1e-9, fmt("max relative trace gap %.2e", s.max_trace_gap.value_or(-1))};
}

Outcome brute_force() {
  Rng rng(45);
  bool ok = true;
  double worst3 = -1e300;
  for (int i = 0; i < 100; ++i) {
    const Mat3 m = random_matrix<3>(rng);
    const double t = solve_spatial(m).achieved_trace;
    const double best = sampled_max_trace(m, 100'000, rng);
    const double margin = (best - t) / (1 + max_abs(m));
    worst3 = std::max(worst3, margin);
    ok = ok && margin <= 1e-9;
  }
  const int points = 1'000'000;
  std::vector<double> c(points), s(points);
  for (int k = 0; k < points; ++k) {
    c[k] = std::cos(2 * std::numbers::pi * k / points);
    s[k] = std::sin(2 * std::numbers::pi * k / points);
  }
  double worst2 = -1e300, worst_slack = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Mat2 m = random_matrix<2>(rng);
    const double t = trace(solve_planar(m) * m);
    double best = -1e300;
    for (int k = 0; k < points; ++k)
      best = std::max(best, c[k] * m(0, 0) - s[k] * m(1, 0) + s[k] * m(0, 1) + c[k] * m(1, 1));
    const double scale = 1 + max_abs(m);
    worst2 = std::max(worst2, (best - t) / scale);
    worst_slack = std::max(worst_slack, (t - best) / (std::numbers::pi * 1e-6 * max_abs(m)));
    ok = ok && best <= t + 1e-9 * scale && t - best <= std::numbers::pi * 1e-6 * max_abs(m);
  }
  return {ok, fmt("3D worst (sampled - solver)/scale %.2e; 2D worst %.2e, grid gap %.2f of slack", worst3, worst2,
                  worst_slack)};
}

Outcome spectral_accuracy() {
  Rng rng(46);
  int bad = 0;
  double worst_res = 0, worst_sum = 0, worst_prod = 0;
  for (int i = 0; i < 100'000; ++i) {
    Mat3 a;
    const double x = uniform(rng, -2, 2), y = uniform(rng, -2, 2);
    switch (i % 10) {
      case 0: case 1: a = symmetric_with_eigenvalues(rng, Vec3{{x, x, y}}); break;
      case 2: a = symmetric_with_eigenvalues(rng, Vec3{{x, x, x}}); break;
      case 3: a = symmetric_with_eigenvalues(rng, Vec3{{x, x + 1e-9 * uniform(rng), y}}); break;
      default: a = random_symmetric<3>(rng, -2, 2);
    }
    a = symmetric_part(a);
    const auto d = spectral_decomposition(a);
    const double scale = 1 + max_abs(a);
    double res = 0;
    for (int k = 0; k < 3; ++k) res = std::max(res, norm(a * d.basis[k] - d.eigenvalues[k] * d.basis[k]));
    const double sum = std::abs(d.eigenvalues[0] + d.eigenvalues[1] + d.eigenvalues[2] - trace(a)) / scale;
    const double prod =
        std::abs(d.eigenvalues[0] * d.eigenvalues[1] * d.eigenvalues[2] - det(a)) / (scale * scale * scale);
    worst_res = std::max(worst_res, res / scale);
    worst_sum = std::max(worst_sum, sum);
    worst_prod = std::max(worst_prod, prod);
    bad += res > 1e-9 * scale || sum > 1e-8 || prod > 1e-8;
  }
  return {bad == 0, fmt("worst residual %.2e, sum %.2e, product %.2e (relative), failures %d", worst_res, worst_sum,
                        worst_prod, bad)};
}

bool eigen_condition(const Mat3& a, double tol) {
  const auto e = eigenvalues3(a).values;
  const double slack = tol * (1 + max_abs(a));
  return e[1] >= -slack && e[0] + e[1] >= -slack;
}

Outcome characterization_agreement() {
  Rng rng(47);
  int disagree = 0, maximal = 0, satisfying = 0, violating = 0;
  for (int i = 0; i < 10'000; ++i) {
    Mat3 a;
    const double lo = uniform(rng, 0.5, 2.0), hi = uniform(rng, lo, 3.0);
    switch (i % 4) {
      case 0:
        a = symmetric_with_eigenvalues(rng, Vec3{{-uniform(rng, 0.05, 0.95) * lo, lo, hi}});
        ++satisfying;
        break;
      case 1:
        a = symmetric_with_eigenvalues(rng, Vec3{{-uniform(rng, 1.05, 2.0) * lo, lo, hi}});
        ++violating;
        break;
      default: a = random_symmetric<3>(rng);
    }
    a = symmetric_part(a);
    const bool minors = is_maximal_3d(a).is_maximal;
    maximal += minors;
    disagree += minors != eigen_condition(a, kDefaultTol);
  }
  return {disagree == 0, fmt("disagreements %d / 10000 (%d maximal; %d engineered satisfying, %d violating)", disagree,
                             maximal, satisfying, violating)};
}

Outcome jacobian_check() {
  Rng rng(48);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const Mat3 m = random_matrix<3>(rng);
    const CayleyPoint p{random_vec3(rng)};
    const Mat3 j = symmetry_jacobian(p, m);
    const Mat3 fd = central_difference_jacobian([&](const Vec3& x) { return symmetry_residual(CayleyPoint{x}, m); },
                                                p.x, 1e-5);
    worst = std::max(worst, max_abs(j - fd) / std::max(1.0, max_abs(j)));
  }
  return {worst <= 1e-5, fmt("worst relative error %.2e", worst)};
}

Outcome million_batch() {
  const auto input = generate(1'000'000, 49, MatrixKind::dense_uniform);
  BatchOptions opts;
  opts.workers = worker_count();
  const auto newton = run_batch(input, opts);
  opts.svd_only = true;
  const auto svd = run_batch(input, opts).summary;

  BatchOptions serial;
  serial.workers = 1;
  const std::span<const Mat3> head(input.data(), 100'000);
  const auto a = run_batch(head, serial);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto &x = a.records[i], &y = newton.records[i];
    mismatches += x.achieved_trace != y.achieved_trace || x.iterations != y.iterations || x.fell_back != y.fell_back ||
                  !(x.input == y.input);
  }
  const auto& s = newton.summary;
  return {s.failures == 0 && svd.failures == 0 && mismatches == 0,
          fmt("newton path failures %zu (fell back %zu), svd-only failures %zu, worker-count mismatches %zu", s.failures,
              s.fell_back, svd.failures, mismatches)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden example, both strategies", golden_example},
      {"newton success rate on dense matrices", newton_success_rate},
      {"rank-one failure mode", rank_one_failure},
      {"newton and svd traces agree", cross_strategy},
      {"brute-force maximality oracle", brute_force},
      {"closed-form eigen-decomposition accuracy", spectral_accuracy},
      {"minor test agrees with eigenvalue condition", characterization_agreement},
      {"analytic jacobian vs finite differences", jacobian_check},
      {"million-matrix batch and determinism", million_batch},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
