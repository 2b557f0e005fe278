#pragma once

// Weighted point-set alignment: find the rotation U minimizing
//   sum_i w_i |U q_i - p_i|^2.
// Expanding the square leaves -2 trace(U M) as the only U-dependent term,
// with the profile matrix M = Q W P^T = sum_i w_i q_i p_i^T.

#include <cstddef>
#include <vector>

#include "maxtrace/cayley_newton.hpp"
#include "maxtrace/matrix.hpp"
#include "maxtrace/report.hpp"

namespace maxtrace {

template <std::size_t N>
struct WahbaProblem {
  static_assert(N == 2 || N == 3, "WahbaProblem is defined for dimensions 2 and 3");

  std::vector<Vec<N>> p;  ///< targets
  std::vector<Vec<N>> q;  ///< points to rotate
  std::vector<double> weights;

  /// Throws std::invalid_argument unless sizes agree, n >= 1, every weight
  /// is finite and nonnegative, and every coordinate is finite.
  void validate() const;
};

using WahbaProblem2 = WahbaProblem<2>;
using WahbaProblem3 = WahbaProblem<3>;

template <std::size_t N>
Mat<N> profile_matrix(const WahbaProblem<N>& prob);

/// sum_i w_i |U q_i - p_i|^2, evaluated directly.
/// Throws std::invalid_argument when u is not a rotation.
template <std::size_t N>
double residual(const WahbaProblem<N>& prob, const Mat<N>& u);

/// Builds M and maximizes trace(U M): closed form in 2D, Newton with SVD
/// fallback in 3D (svd_only skips Newton; it has no effect in 2D).
template <std::size_t N>
SolveReport<N> solve(const WahbaProblem<N>& prob, const NewtonConfig& cfg = {}, bool svd_only = false);

}  // namespace maxtrace
