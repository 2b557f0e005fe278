#include "maxtrace/characterization.hpp"

#include <cmath>
#include <stdexcept>

#include "maxtrace/spectral3.hpp"

namespace maxtrace {

namespace {

// Pair (k, l), k > l, with the largest |a_lk - a_kl|.
template <std::size_t N>
std::pair<std::size_t, std::size_t> most_asymmetric_pair(const Mat<N>& a) {
  std::pair<std::size_t, std::size_t> best{1, 0};
  double worst = -1.0;
  for (std::size_t k = 1; k < N; ++k)
    for (std::size_t l = 0; l < k; ++l) {
      const double d = std::abs(a(l, k) - a(k, l));
      if (d > worst) {
        worst = d;
        best = {k, l};
      }
    }
  return best;
}

template <std::size_t N>
std::optional<Mat<N>> givens_witness(const Mat<N>& a) {
  const auto [k, l] = most_asymmetric_pair(a);
  if (a(l, k) == a(k, l)) return std::nullopt;
  Mat<N> g = givens_improvement(a, k, l);
  if (!(trace(g * a) > trace(a))) return std::nullopt;
  return g;
}

}  // namespace

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::nonsymmetric: return "nonsymmetric";
    case VerdictReason::trace_negative_2d: return "trace negative";
    case VerdictReason::psd_test_failed_3d: return "S not positive semidefinite";
    case VerdictReason::eigen_condition_failed: return "eigenvalue condition failed";
    case VerdictReason::maximal: return "maximal";
  }
  return "?";
}

template <std::size_t N>
Mat<N> givens_improvement(const Mat<N>& a, std::size_t k, std::size_t l) {
  if (k >= N || l >= k) throw std::invalid_argument("givens_improvement: need N > k > l");
  const double b = a(l, k) - a(k, l);
  if (b == 0.0) throw std::invalid_argument("givens_improvement: a_lk == a_kl, no improving direction");
  const double sum = a(l, l) + a(k, k);
  const double c = std::hypot(sum, b);
  Mat<N> g = Mat<N>::identity();
  g(l, l) = g(k, k) = sum / c;
  g(l, k) = -b / c;
  g(k, l) = b / c;
  return g;
}

template <std::size_t N>
bool leading_minors_positive(const Mat<N>& input) {
  const Mat<N> m = unit_scale(input) * input;
  if (!(m(0, 0) > 0.0)) return false;
  if constexpr (N == 2) {
    return det(m) > 0.0;
  } else {
    const double m2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m2 > 0.0 && det(m) > 0.0;
  }
}

template <std::size_t N>
bool principal_minors_nonnegative(const Mat<N>& input, double tol) {
  // Same inequalities as on input, all sides multiplied by f^k.
  const double f = unit_scale(input);
  const Mat<N> m = f * input;
  const double s = f + max_abs(m);
  const double floor1 = -tol * s, floor2 = -tol * s * s, floor3 = -tol * s * s * s;
  for (std::size_t i = 0; i < N; ++i)
    if (m(i, i) < floor1) return false;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (m(i, i) * m(j, j) - m(i, j) * m(j, i) < floor2) return false;
  if constexpr (N == 3) {
    if (det(m) < floor3) return false;
  }
  return true;
}

MaximalityVerdict<2> is_maximal_2d(const Mat2& a, double tol) {
  MaximalityVerdict<2> v;
  if (!is_symmetric(a, tol)) {
    v.reason = VerdictReason::nonsymmetric;
    v.witness = givens_witness(a);
    return v;
  }
  if (trace(a) < -tol * max_abs(a)) {
    v.reason = VerdictReason::trace_negative_2d;
    v.witness = -Mat2::identity();  // rotation by pi negates the trace
    return v;
  }
  v.is_maximal = true;
  return v;
}

MaximalityVerdict<3> is_maximal_3d(const Mat3& a, double tol) {
  MaximalityVerdict<3> v;
  if (!is_symmetric(a, tol)) {
    v.reason = VerdictReason::nonsymmetric;
    v.witness = givens_witness(a);
    return v;
  }
  const Mat3 sym = symmetric_part(a);
  const Mat3 s = trace(sym) * Mat3::identity() - sym;
  if (leading_minors_positive(s) || principal_minors_nonnegative(s, tol)) {
    v.is_maximal = true;
    return v;
  }
  if (auto h = householder_witness(sym, tol)) {
    v.reason = VerdictReason::psd_test_failed_3d;
    v.witness = h->rotation;
  } else {
    v.reason = VerdictReason::eigen_condition_failed;
  }
  return v;
}

template <std::size_t N>
bool is_maximal_orthogonal(const Mat<N>& a, double tol) {
  return is_symmetric(a, tol) && principal_minors_nonnegative(symmetric_part(a), tol);
}

std::optional<HouseholderWitness> householder_witness(const Mat3& a, double tol) {
  if (!is_symmetric(a, tol)) throw std::invalid_argument("householder_witness: matrix is not symmetric");
  const Mat3 sym = symmetric_part(a);
  const Mat3 s = trace(sym) * Mat3::identity() - sym;
  const SpectralDecomposition3 sd = spectral_decomposition(s, tol);
  if (!(sd.eigenvalues[0] < -tol * (1.0 + max_abs(s)))) return std::nullopt;
  const Vec3 axis = sd.basis[0];
  return HouseholderWitness{axis, 2.0 * outer(axis, axis) - Mat3::identity()};
}

template Mat2 givens_improvement<2>(const Mat2&, std::size_t, std::size_t);
template Mat3 givens_improvement<3>(const Mat3&, std::size_t, std::size_t);
template bool leading_minors_positive<2>(const Mat2&);
template bool leading_minors_positive<3>(const Mat3&);
template bool principal_minors_nonnegative<2>(const Mat2&, double);
template bool principal_minors_nonnegative<3>(const Mat3&, double);
template bool is_maximal_orthogonal<2>(const Mat2&, double);
template bool is_maximal_orthogonal<3>(const Mat3&, double);

}  // namespace maxtrace
