#pragma once

// Closed-form eigen-decomposition of real symmetric 3x3 matrices.
//
// Eigenvalues come from the trigonometric solution of the depressed
// characteristic cubic of B = (A - qI)/p; eigenvectors come from cross
// products of the columns of A - alpha*I. No iteration is involved.

#include <array>
#include <vector>

#include "maxtrace/matrix.hpp"

namespace maxtrace {

enum class DegenerateCase { distinct, double_root, triple_root };

const char* to_string(DegenerateCase c);

/// Intermediates of the trigonometric eigenvalue formula.
struct TrigEigenIntermediates {
  double q = 0.0;        ///< trace(A)/3
  double p = 0.0;        ///< sqrt(trace((A-qI)^2)/6), >= 0
  double det_b = 0.0;    ///< det((A-qI)/p) before clamping; 0 when p == 0
  std::array<double, 3> theta{};  ///< theta_1 >= theta_2 >= theta_3, all in [0, pi]
};

struct Eigenvalues3 {
  TrigEigenIntermediates intermediates;
  std::array<double, 3> values{};  ///< ascending
  bool p_zero = false;             ///< A == qI; all values equal q
};

struct SpectralDecomposition3 {
  std::array<double, 3> eigenvalues{};  ///< ascending
  std::array<Vec3, 3> basis{};          ///< basis[k] pairs with eigenvalues[k]
  DegenerateCase degenerate_case = DegenerateCase::distinct;

  /// Matrix with the eigenvectors as columns.
  Mat3 vectors() const { return Mat3::from_columns(basis); }
};

/// Eigenvalues of a symmetric matrix, ascending. Throws std::invalid_argument
/// when a is not symmetric within tol (relative).
Eigenvalues3 eigenvalues3(const Mat3& a, double tol = kDefaultTol);

/// Orthonormal basis of the eigenspace of a for eigenvalue alpha (1, 2 or 3
/// vectors; the count is the multiplicity seen by the cross-product test).
/// Throws std::invalid_argument when a is not symmetric or alpha is not an
/// eigenvalue (|det(alpha I - a)| > tol * (1 + max|a|)^3).
std::vector<Vec3> eigenspace_basis(const Mat3& a, double alpha, double tol = kDefaultTol);

/// Two orthonormal vectors spanning the plane orthogonal to u (u != 0): the
/// construction used for a two-dimensional eigenspace, where u spans the
/// column space of A - alpha*I.
std::array<Vec3, 2> orthogonal_plane(const Vec3& u);

/// Full orthonormal eigenbasis. Throws std::invalid_argument on a
/// nonsymmetric input.
SpectralDecomposition3 spectral_decomposition(const Mat3& a, double tol = kDefaultTol);

}  // namespace maxtrace
