// Command-line front end: solve, bench, gen, check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "maxtrace/batch.hpp"
#include "maxtrace/characterization.hpp"
#include "maxtrace/io.hpp"
#include "maxtrace/planar.hpp"
#include "maxtrace/wahba.hpp"

using namespace maxtrace;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string matrix;
  std::string kind = "dense_uniform";
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  int dim = 0;
  bool svd_only = false;
  bool cross_check = false;
  int max_iters = NewtonConfig{}.max_iters;
  double tol = kDefaultTol;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

template <std::size_t N>
void print_matrix(const Mat<N>& m, const char* indent = "  ") {
  for (std::size_t i = 0; i < N; ++i) {
    std::printf("%s", indent);
    for (std::size_t j = 0; j < N; ++j) std::printf("%s%.17g", j ? " " : "", m(i, j));
    std::printf("\n");
  }
}

template <std::size_t N>
MaximalityVerdict<N> verdict(const Mat<N>& m, double tol) {
  if constexpr (N == 2) return is_maximal_2d(m, tol);
  else return is_maximal_3d(m, tol);
}

template <std::size_t N>
int report_solution(const Mat<N>& m, const SolveReport<N>& rep, double tol) {
  const Mat<N> um = rep.rotation * m;
  const bool rotation_ok = is_rotation(rep.rotation);
  const bool maximal = verdict(um, tol).is_maximal;
  std::printf("strategy: %s\n", to_string(rep.strategy));
  if (N == 3) {
    std::printf("newton iterations: %d\n", rep.newton_iterations);
    std::printf("fell back: %s\n", rep.fell_back ? "yes" : "no");
  }
  std::printf("rotation:\n");
  print_matrix(rep.rotation);
  std::printf("trace: %.17g\n", rep.achieved_trace);
  if (rep.residual) std::printf("residual: %.17g\n", *rep.residual);
  std::printf("symmetry defect: %.3g\n", symmetry_defect(um));
  std::printf("maximal: %s\n", rotation_ok && maximal ? "yes" : "no");
  return rotation_ok && maximal ? kOk : kViolation;
}

template <std::size_t N>
SolveReport<N> solve_matrix(const Mat<N>& m, const Options& o) {
  if constexpr (N == 2) {
    SolveReport<2> rep;
    rep.rotation = solve_planar(m);
    rep.achieved_trace = trace(rep.rotation * m);
    return rep;
  } else {
    NewtonConfig cfg;
    cfg.max_iters = o.max_iters;
    return solve_spatial(m, cfg, o.svd_only, o.tol);
  }
}

template <std::size_t N>
int solve_matrices(const std::vector<Mat<N>>& ms, const Options& o) {
  int status = kOk;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms.size() > 1) std::printf("%s# matrix %zu\n", i ? "\n" : "", i + 1);
    status = std::max(status, report_solution(ms[i], solve_matrix(ms[i], o), o.tol));
  }
  return status;
}

int cmd_solve(const Options& o) {
  std::string text = o.matrix.empty() ? read_all(o.input) : o.matrix;
  std::istringstream probe(text);
  const std::size_t width = first_data_width(probe);
  std::istringstream in(text);
  if (width == 5 || width == 7) {
    NewtonConfig cfg;
    cfg.max_iters = o.max_iters;
    const ProblemInput prob = read_problem(in);
    return std::visit(
        [&](const auto& p) {
          p.validate();
          const auto m = profile_matrix(p);
          return report_solution(m, solve(p, cfg, o.svd_only), o.tol);
        },
        prob);
  }
  if (width != 4 && width != 9) throw ParseError(1, "expected a matrix (4 or 9 numbers) or correspondences (5 or 7)");
  const MatrixList ms = read_matrices(in);
  return std::visit([&](const auto& v) { return solve_matrices(v, o); }, ms);
}

std::vector<Mat3> bench_input(const Options& o) {
  if (o.input.empty()) {
    const auto kind = parse_matrix_kind(o.kind);
    if (!kind) throw std::invalid_argument("unknown kind: " + o.kind);
    return generate(o.count, o.seed, *kind);
  }
  std::istringstream in(read_all(o.input));
  MatrixList ms = read_matrices(in, 3);
  return std::get<std::vector<Mat3>>(std::move(ms));
}

int cmd_bench(const Options& o) {
  const std::vector<Mat3> input = bench_input(o);
  BatchOptions opts;
  opts.newton.max_iters = o.max_iters;
  opts.svd_only = o.svd_only;
  opts.cross_check = o.cross_check;
  opts.workers = o.workers;
  opts.tol = o.tol;
  const BatchResult res = run_batch(input, opts);

  if (o.input.empty())
    std::printf("input:            %zu %s matrices, seed %llu, entries uniform on [-1, 1]\n", o.count, o.kind.c_str(),
                static_cast<unsigned long long>(o.seed));
  else
    std::printf("input:            %s (%zu matrices)\n", o.input.c_str(), input.size());
  std::printf("workers:          %u\n", o.workers);
  std::cout.flush();
  print_summary(std::cout, res.summary, opts);

  if (!o.output.empty()) {
    std::ofstream csv(o.output);
    if (!csv) throw IoError("cannot write " + o.output);
    write_csv(csv, res.records);
    if (!csv) throw IoError("write failed: " + o.output);
  }
  return res.summary.failures ? kViolation : kOk;
}

int cmd_gen(const Options& o) {
  const auto kind = parse_matrix_kind(o.kind);
  if (!kind) throw std::invalid_argument("unknown kind: " + o.kind);
  const auto ms = generate(o.count, o.seed, *kind);
  const std::string header = "maxtrace gen: " + std::to_string(o.count) + " " + o.kind + " 3x3 matrices, seed " +
                             std::to_string(o.seed) +
                             "\nmt19937_64, entries (or factor vector entries) uniform on [-1, 1]"
                             "\none matrix per line, row-major";
  if (o.output.empty() || o.output == "-") {
    write_matrices<3>(std::cout, ms, header);
    std::cout.flush();
    if (!std::cout) throw IoError("write failed: standard output");
  } else {
    std::ofstream out(o.output);
    if (!out) throw IoError("cannot write " + o.output);
    write_matrices<3>(out, ms, header);
    if (!out) throw IoError("write failed: " + o.output);
  }
  return kOk;
}

template <std::size_t N>
void print_verdicts(const std::vector<Mat<N>>& ms, double tol) {
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto v = verdict(ms[i], tol);
    if (v.is_maximal)
      std::printf("%zu: maximal\n", i + 1);
    else
      std::printf("%zu: not maximal: %s%s\n", i + 1, to_string(v.reason), v.witness ? " (improving rotation found)" : "");
  }
}

int cmd_check(const Options& o) {
  std::istringstream in(o.matrix.empty() ? read_all(o.input) : o.matrix);
  const MatrixList ms = read_matrices(in, o.dim);
  std::visit([&](const auto& v) { print_verdicts(v, o.tol); }, ms);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-trace rotations: solve, benchmark and check 2x2/3x3 matrices"};
  app.require_subcommand(1);
  auto o = std::make_shared<Options>();

  auto add_newton = [&](CLI::App* sub) {
    sub->add_flag("--svd-only", o->svd_only, "Skip Newton and use the SVD-based solver");
    sub->add_option("--max-iters", o->max_iters, "Newton iteration limit")->check(CLI::PositiveNumber);
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o->tol, "Relative tolerance of the maximality test")->check(CLI::NonNegativeNumber);
  };
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--count", o->count, "Number of matrices")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o->seed, "Random seed");
    sub->add_option("--kind", o->kind, "dense_uniform, rank1, rank2 or symmetric")
        ->check(CLI::IsMember({"dense_uniform", "rank1", "rank2", "symmetric"}));
  };

  auto* solve = app.add_subcommand("solve", "Solve one matrix, a matrix file, or a point-set problem file");
  solve->add_option("--input", o->input, "Matrix or problem file ('-' for stdin)");
  solve->add_option("--matrix", o->matrix, "Inline matrix, 4 or 9 numbers row-major");
  add_newton(solve);
  add_tol(solve);

  auto* bench = app.add_subcommand("bench", "Solve a batch and report success rates and timing");
  add_generator(bench);
  bench->add_option("--input", o->input, "Read 3x3 matrices from a file instead of generating");
  bench->add_option("--output", o->output, "Write per-matrix records as CSV");
  bench->add_option("--workers", o->workers, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_flag("--cross-check", o->cross_check, "Also run the SVD solver and compare traces");
  add_newton(bench);
  add_tol(bench);

  auto* gen = app.add_subcommand("gen", "Write random 3x3 matrices");
  add_generator(gen);
  gen->add_option("--output", o->output, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Print the maximal-trace verdict of each matrix");
  check->add_option("--input", o->input, "Matrix file ('-' for stdin)");
  check->add_option("--matrix", o->matrix, "Inline matrix, 4 or 9 numbers row-major");
  check->add_option("--dim", o->dim, "Force dimension 2 or 3")->check(CLI::IsMember({0, 2, 3}));
  add_tol(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return cmd_solve(*o);
    if (*bench) return cmd_bench(*o);
    if (*gen) return cmd_gen(*o);
    if (*check) return cmd_check(*o);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "maxtrace: parse error: %s\n", e.what());
    return kInputError;
  } catch (const IoError& e) {
    std::fprintf(stderr, "maxtrace: %s\n", e.what());
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "maxtrace: invalid input: %s\n", e.what());
    return kInputError;
  }
  return kOk;
}
