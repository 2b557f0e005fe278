#include "maxtrace/batch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

#include "maxtrace/characterization.hpp"

namespace maxtrace {

namespace {

using Clock = std::chrono::steady_clock;

BatchRecord solve_record(std::size_t index, const Mat3& m, const BatchOptions& opts) {
  BatchRecord rec;
  rec.index = index;
  rec.input = m;

  const auto t0 = Clock::now();
  const SolveReport<3> rep = solve_spatial(m, opts.newton, opts.svd_only, opts.tol);
  rec.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();

  rec.strategy = rep.strategy;
  rec.iterations = rep.newton_iterations;
  rec.fell_back = rep.fell_back;
  rec.achieved_trace = rep.achieved_trace;
  const Mat3 out = rep.rotation * m;
  rec.max_symmetry_defect = symmetry_defect(out);
  rec.maximality_passed = is_rotation(rep.rotation) && is_maximal_3d(out, opts.tol).is_maximal;
  if (opts.cross_check) rec.trace_svd_reference = solve_spatial(m, opts.newton, true, opts.tol).achieved_trace;
  return rec;
}

}  // namespace

const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::dense_uniform: return "dense_uniform";
    case MatrixKind::rank1: return "rank1";
    case MatrixKind::rank2: return "rank2";
    case MatrixKind::symmetric: return "symmetric";
  }
  return "?";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view s) {
  for (auto k : {MatrixKind::dense_uniform, MatrixKind::rank1, MatrixKind::rank2, MatrixKind::symmetric})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::vector<Mat3> generate(std::size_t count, std::uint64_t seed, MatrixKind kind) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto vec = [&] { return Vec3{{uni(rng), uni(rng), uni(rng)}}; };
  auto dense = [&] {
    Mat3 m;
    for (double& e : m.a) e = uni(rng);
    return m;
  };

  std::vector<Mat3> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (kind) {
      case MatrixKind::dense_uniform: out.push_back(dense()); break;
      case MatrixKind::rank1: {
        const Vec3 u = vec(), v = vec();
        out.push_back(outer(u, v));
        break;
      }
      case MatrixKind::rank2: {
        const Vec3 u1 = vec(), v1 = vec(), u2 = vec(), v2 = vec();
        out.push_back(outer(u1, v1) + outer(u2, v2));
        break;
      }
      case MatrixKind::symmetric: out.push_back(symmetric_part(dense())); break;
    }
  }
  return out;
}

BatchResult run_batch(std::span<const Mat3> input, const BatchOptions& opts) {
  BatchResult res;
  res.records.resize(input.size());
  const auto t0 = Clock::now();

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opts.workers, input.size()));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) res.records[i] = solve_record(i, input[i], opts);
  };
  if (workers == 1) {
    work(0, input.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (input.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk, e = std::min(input.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
  res.summary = summarize(res.records, elapsed);
  return res;
}

BatchSummary summarize(std::span<const BatchRecord> records, std::int64_t wall_time_ns) {
  BatchSummary s;
  s.total = records.size();
  s.wall_time_ns = wall_time_ns;
  double iter_sum = 0.0, gap_sum = 0.0, gap_max = 0.0;
  std::size_t gaps = 0;
  for (const auto& r : records) {
    if (r.strategy == Strategy::newton_then_spectral) {
      ++s.newton_converged;
      iter_sum += r.iterations;
      s.max_iterations = std::max(s.max_iterations, r.iterations);
    }
    if (r.fell_back) ++s.fell_back;
    if (!r.maximality_passed) ++s.failures;
    if (r.trace_svd_reference) {
      const double gap = std::abs(r.achieved_trace - *r.trace_svd_reference) / (1.0 + std::abs(*r.trace_svd_reference));
      gap_sum += gap;
      gap_max = std::max(gap_max, gap);
      ++gaps;
    }
  }
  if (s.newton_converged) s.mean_iterations = iter_sum / static_cast<double>(s.newton_converged);
  if (gaps) {
    s.mean_trace_gap = gap_sum / static_cast<double>(gaps);
    s.max_trace_gap = gap_max;
  }
  return s;
}

void write_csv(std::ostream& out, std::span<const BatchRecord> records) {
  out << "index,m11,m12,m13,m21,m22,m23,m31,m32,m33,strategy,iterations,fell_back,achieved_trace,"
         "trace_svd_reference,max_symmetry_defect,maximality_passed,wall_time_ns\n";
  char buf[32];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
  };
  for (const auto& r : records) {
    out << r.index;
    for (double e : r.input.a) {
      out << ',';
      num(e);
    }
    out << ',' << to_string(r.strategy) << ',' << r.iterations << ',' << (r.fell_back ? 1 : 0) << ',';
    num(r.achieved_trace);
    out << ',';
    if (r.trace_svd_reference) num(*r.trace_svd_reference);
    out << ',';
    num(r.max_symmetry_defect);
    out << ',' << (r.maximality_passed ? 1 : 0) << ',' << r.wall_time_ns << '\n';
  }
}

void print_summary(std::ostream& out, const BatchSummary& s, const BatchOptions& opts) {
  char buf[160];
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out << buf << '\n';
  };
  const double total = s.total ? static_cast<double>(s.total) : 1.0;
  line("mode:             %s", opts.svd_only ? "svd-only" : "newton+spectral, svd fallback");
  line("max iterations:   %d", opts.newton.max_iters);
  line("total:            %zu", s.total);
  line("newton converged: %zu (%.4f%%)", s.newton_converged, 100.0 * static_cast<double>(s.newton_converged) / total);
  line("fell back:        %zu (%.4f%%)", s.fell_back, 100.0 * static_cast<double>(s.fell_back) / total);
  line("iterations:       mean %.3f, max %d", s.mean_iterations, s.max_iterations);
  if (s.mean_trace_gap)
    line("trace gap vs svd: mean %.3e, max %.3e (relative)", *s.mean_trace_gap, *s.max_trace_gap);
  line("failures:         %zu", s.failures);
  line("wall time:        %.3f s (%.1f ns/matrix)", static_cast<double>(s.wall_time_ns) * 1e-9,
       static_cast<double>(s.wall_time_ns) / total);
}

}  // namespace maxtrace
