#pragma once

// Batch experiment driver: random matrix streams, per-record solving and
// verification, and summary statistics.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "maxtrace/cayley_newton.hpp"
#include "maxtrace/matrix.hpp"

namespace maxtrace {

enum class MatrixKind { dense_uniform, rank1, rank2, symmetric };

const char* to_string(MatrixKind k);
std::optional<MatrixKind> parse_matrix_kind(std::string_view s);

/// Deterministic stream of 3x3 matrices for a given seed (mt19937_64).
/// Entries and factor vectors are drawn uniformly from [-1, 1]:
///   dense_uniform  i.i.d. entries
///   rank1          u v^T
///   rank2          u1 v1^T + u2 v2^T
///   symmetric      (D + D^T) / 2 of a dense draw D
std::vector<Mat3> generate(std::size_t count, std::uint64_t seed, MatrixKind kind);

struct BatchRecord {
  std::size_t index = 0;
  Mat3 input;
  Strategy strategy = Strategy::newton_then_spectral;
  int iterations = 0;
  bool fell_back = false;
  double achieved_trace = 0.0;
  std::optional<double> trace_svd_reference;
  double max_symmetry_defect = 0.0;  ///< max |B_ij - B_ji| of B = U M
  bool maximality_passed = false;    ///< U is a rotation and U M passes the 3D test
  std::int64_t wall_time_ns = 0;
};

struct BatchOptions {
  NewtonConfig newton;
  bool svd_only = false;
  bool cross_check = false;  ///< also run the SVD path and compare traces
  unsigned workers = 1;
  double tol = kDefaultTol;  ///< tolerance of the maximality verification
};

struct BatchSummary {
  std::size_t total = 0;
  std::size_t newton_converged = 0;  ///< records finished by Newton + spectral
  std::size_t fell_back = 0;
  std::size_t failures = 0;          ///< records failing verification
  double mean_iterations = 0.0;      ///< over newton_converged records
  int max_iterations = 0;
  std::optional<double> mean_trace_gap;  ///< |trace - SVD trace| / (1 + |SVD trace|)
  std::optional<double> max_trace_gap;
  std::int64_t wall_time_ns = 0;
};

struct BatchResult {
  std::vector<BatchRecord> records;  ///< in input order
  BatchSummary summary;
};

/// Solves every matrix; records are independent and partitioned across
/// workers, then returned in input order.
BatchResult run_batch(std::span<const Mat3> input, const BatchOptions& opts);

BatchSummary summarize(std::span<const BatchRecord> records, std::int64_t wall_time_ns);

void write_csv(std::ostream& out, std::span<const BatchRecord> records);
void print_summary(std::ostream& out, const BatchSummary& s, const BatchOptions& opts);

}  // namespace maxtrace
