#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace coslab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The single carrier type for
/// generators, family values C(t) / T(t), the sine-like operator S(lambda,s)
/// and resolvents.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

bool all_finite(const ComplexMatrix& m);

/// Throws invalid_input unless m is square with dim >= 1 and all entries
/// finite. `what` names the offending argument in the message.
void require_valid(const ComplexMatrix& m, const char* what);

inline ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

/// Spectral norm (largest singular value). Full SVD up to dim 64, power
/// iteration on m^H m above (tol 1e-13, at most 10000 iterations).
double op_norm(const ComplexMatrix& m);

/// Solves m * x = rhs by LU with full pivoting plus one step of iterative
/// refinement. Throws singular_matrix when the smallest pivot falls below
/// 1e-14 * op_norm(m).
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

/// All eigenvalues with algebraic multiplicity, in the order produced by the
/// underlying Schur decomposition.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

double spectral_radius(const ComplexMatrix& m);

}  // namespace coslab
