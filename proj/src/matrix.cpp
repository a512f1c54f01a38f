#include "coslab/matrix.hpp"

#include <cmath>
#include <string>

#include "coslab/error.hpp"

namespace coslab {

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex& z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

void require_valid(const ComplexMatrix& m, const char* what) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw invalid_input(std::string(what) + ": matrix must be square with dim >= 1, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (!all_finite(m))
        throw invalid_input(std::string(what) + ": matrix has non-finite entries");
}

namespace {

constexpr Eigen::Index kSvdDimLimit = 64;

// sqrt of the largest eigenvalue of the Hermitian product m^H m. The
// tridiagonal eigensolver converges on clustered spectra (nearly tied top
// singular values) where a plain power iteration on m^H m stalls.
double op_norm_large(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw convergence_error("op_norm: Hermitian eigensolver did not converge");
    const double lmax = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(lmax, 0.0));
}

}  // namespace

double op_norm(const ComplexMatrix& m) {
    require_valid(m, "op_norm");
    if (m.rows() <= kSvdDimLimit) {
        Eigen::JacobiSVD<ComplexMatrix> svd(m);
        return svd.singularValues()(0);
    }
    return op_norm_large(m);
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
    require_valid(m, "solve: m");
    if (rhs.rows() != m.rows())
        throw invalid_input("solve: rhs has " + std::to_string(rhs.rows()) +
                            " rows, expected " + std::to_string(m.rows()));
    if (!all_finite(rhs)) throw invalid_input("solve: rhs has non-finite entries");

    Eigen::FullPivLU<ComplexMatrix> lu(m);
    const double scale = op_norm(m);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot <= 1e-14 * scale || scale == 0.0)
        throw singular_matrix("solve: numerically singular matrix (pivot " +
                              std::to_string(min_pivot) + " vs norm " + std::to_string(scale) + ")");

    ComplexMatrix x = lu.solve(rhs);
    // One step of iterative refinement tightens the residual well below the
    // 1e-10 * ||rhs|| contract on conditioned systems.
    ComplexMatrix r = rhs - m * x;
    x += lu.solve(r);
    return x;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
    require_valid(m, "eigenvalues");
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw convergence_error("eigenvalues: Schur iteration did not converge (Eigen budget ~30*dim sweeps)");
    std::vector<Complex> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

double spectral_radius(const ComplexMatrix& m) {
    double r = 0.0;
    for (const Complex& mu : eigenvalues(m)) r = std::max(r, std::abs(mu));
    return r;
}

}  // namespace coslab
