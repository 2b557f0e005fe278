#pragma once

// SVD-based reference solver. The 3x3 SVD is assembled from the closed-form
// eigen-decomposition of M^T M, so no iterative SVD routine is involved.

#include <array>

#include "maxtrace/matrix.hpp"

namespace maxtrace {

/// m = v * diag(s) * r^T, s descending and nonnegative.
template <std::size_t N>
struct Svd {
  Mat<N> v;
  std::array<double, N> s{};
  Mat<N> r;

  Mat<N> reconstruct() const {
    Vec<N> d;
    for (std::size_t i = 0; i < N; ++i) d[i] = s[i];
    return v * Mat<N>::diag(d) * transpose(r);
  }
};

using Svd2 = Svd<2>;
using Svd3 = Svd<3>;

/// Right singular vectors are eigenvectors of m^T m; sigma_k = |m r_k|.
/// Left singular vectors for sigma_k > 1e-9 sigma_1 are m r_k / sigma_k
/// (orthogonalized); the rest are completed to an orthonormal basis.
Svd3 svd3(const Mat3& m);

/// Closed-form 2x2 SVD.
Svd2 svd2(const Mat2& m);

/// U = R diag(1, 1, s) V^T with s = sign(det(V R)); maximizes trace(U m).
Mat3 kabsch_umeyama(const Mat3& m);

/// Same construction at d = 2 on top of svd2. Cross-check for the planar
/// closed form.
Mat2 kabsch_umeyama_2d(const Mat2& m);

}  // namespace maxtrace
