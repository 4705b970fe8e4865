#pragma once

#include <complex>

#include <Eigen/Dense>

#include "fredkit/errors.hpp"

namespace fredkit::num {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Default absolute threshold for rank decisions; it is rescaled internally
// by the largest singular value of the argument.
inline constexpr double kDefaultRankTol = 1e-10;

// Largest singular value. Exact zero for an empty or all-zero matrix.
double spectral_norm(const ComplexMatrix& m);

// Numerical rank: number of singular values above tol * max(1, sigma_max).
Eigen::Index matrix_rank(const ComplexMatrix& m, double tol = kDefaultRankTol);

struct PolarParts {
  ComplexMatrix isometry;  // V, partial isometry
  ComplexMatrix psd;       // P, positive semidefinite
  Eigen::Index rank = 0;
};

// M = V * P with V a partial isometry, P >= 0, and V*V the support
// projection of P. Singular values below the (rescaled) tol are dropped, so
// a degenerate M yields V = 0, P = 0.
PolarParts polar_decompose(const ComplexMatrix& m, double tol = kDefaultRankTol);

// Inverse square root on the range: returns N with N*M*N equal to the
// support projection of M, N vanishing on ker M. Throws NotPSD when an
// eigenvalue drops below -tol (rescaled).
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, double tol = kDefaultRankTol);

// Orthogonal projection onto the range of m.
ComplexMatrix range_projection(const ComplexMatrix& m, double tol = kDefaultRankTol);

// Moore-Penrose pseudoinverse with the same rank threshold convention.
ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double tol = kDefaultRankTol);

inline ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

}  // namespace fredkit::num
