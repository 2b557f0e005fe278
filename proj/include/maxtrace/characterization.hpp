#pragma once

// Tests for "maximal trace over rotations": tr(U A) <= tr(A) for every
// rotation U. A matrix is maximal iff it is symmetric and has at most one
// negative eigenvalue, no larger in magnitude than any other eigenvalue.
// When a test fails, the verdict carries an improving rotation if one is
// cheap to produce.

#include <cstddef>
#include <optional>

#include "maxtrace/matrix.hpp"

namespace maxtrace {

enum class VerdictReason {
  nonsymmetric,
  trace_negative_2d,
  psd_test_failed_3d,
  eigen_condition_failed,
  maximal,
};

const char* to_string(VerdictReason r);

template <std::size_t N>
struct MaximalityVerdict {
  bool is_maximal = false;
  /// When present: a rotation W with trace(W a) > trace(a).
  std::optional<Mat<N>> witness;
  VerdictReason reason = VerdictReason::maximal;
};

/// Givens rotation G acting in the (l, k) plane (0-based, k > l) with
/// cos = a/c, sin = b/c, where a = a_ll + a_kk, b = a_lk - a_kl and
/// c = hypot(a, b). trace(G a) - trace(a) = c - a > 0.
/// Throws std::invalid_argument if k <= l, k >= N, or a_lk == a_kl.
template <std::size_t N>
Mat<N> givens_improvement(const Mat<N>& a, std::size_t k, std::size_t l);

/// 2x2: maximal iff symmetric and trace(a) >= -tol * max|a|.
MaximalityVerdict<2> is_maximal_2d(const Mat2& a, double tol = kDefaultTol);

/// 3x3: maximal iff symmetric and S = trace(a) I - a is positive
/// semidefinite. S is tried for definiteness through its leading principal
/// minors first, then all seven principal minors are checked against
/// -tol * (1 + max|S|)^k.
MaximalityVerdict<3> is_maximal_3d(const Mat3& a, double tol = kDefaultTol);

/// Maximal over all orthogonal matrices (reflections included): symmetric
/// and positive semidefinite.
template <std::size_t N>
bool is_maximal_orthogonal(const Mat<N>& a, double tol = kDefaultTol);

struct HouseholderWitness {
  Vec3 axis;      ///< unit v with v^T S v < 0
  Mat3 rotation;  ///< 2 v v^T - I
};

/// For symmetric a whose S = trace(a) I - a is not PSD, returns the
/// pi-rotation about the eigenvector of S's most negative eigenvalue; it
/// strictly increases the trace. Returns nothing when S is PSD (within
/// tol * (1 + max|S|)). Throws std::invalid_argument on nonsymmetric a.
std::optional<HouseholderWitness> householder_witness(const Mat3& a, double tol = kDefaultTol);

/// All principal minors >= -tol * (1 + max|m|)^k for a k x k minor.
template <std::size_t N>
bool principal_minors_nonnegative(const Mat<N>& m, double tol = kDefaultTol);

/// All leading principal minors strictly positive.
template <std::size_t N>
bool leading_minors_positive(const Mat<N>& m);

}  // namespace maxtrace
