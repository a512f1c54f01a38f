#include <doctest.h>

#include <algorithm>
#include <complex>
#include <limits>

#include "coslab/error.hpp"
#include "coslab/matrix.hpp"
#include "coslab/sampling.hpp"

using namespace coslab;

TEST_CASE("op_norm: identity and diagonal cases") {
    CHECK(op_norm(identity(1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(op_norm(identity(5)) == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = Complex(1, 0);
    d(1, 1) = Complex(-3, 0);
    CHECK(op_norm(d) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("op_norm: 2x2 nilpotent has norm 2") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(2, 0);
    CHECK(op_norm(m) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("op_norm: large-dimension path (dim > 64) matches diagonal maximum") {
    const Eigen::Index dim = 80;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        m(i, i) = Complex(0.1 * static_cast<double>(i + 1), 0.05 * static_cast<double>(i));
    double expected = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) expected = std::max(expected, std::abs(m(i, i)));
    CHECK(op_norm(m) == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("op_norm: large-dimension path handles nearly tied top singular values") {
    // diag(cos(k/4) - 1) style clusters: several entries within 3e-4 of the
    // top defeat naive power iteration but must still come out to 1e-12.
    const Eigen::Index dim = 128;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        m(i, i) = Complex(std::cos(0.25 * static_cast<double>(i + 1)) - 1.0, 0.0);
    double expected = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) expected = std::max(expected, std::abs(m(i, i)));
    CHECK(op_norm(m) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("op_norm: submultiplicative and consistent with eigenvalues of m* m") {
    auto rng = seeded_engine(7);
    for (int i = 0; i < 5; ++i) {
        const ComplexMatrix a = random_matrix(rng, 6, 2.0);
        const ComplexMatrix b = random_matrix(rng, 6, 3.0);
        CHECK(op_norm(a * b) <= op_norm(a) * op_norm(b) + 1e-10);

        double rho = 0.0;
        for (Complex mu : eigenvalues(a.adjoint() * a)) rho = std::max(rho, std::abs(mu));
        CHECK(op_norm(a) == doctest::Approx(std::sqrt(rho)).epsilon(1e-10));
    }
}

TEST_CASE("op_norm: rejects non-finite entries") {
    ComplexMatrix m = identity(2);
    m(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(op_norm(m), invalid_input);
}

TEST_CASE("solve: identity and diagonal cases") {
    ComplexMatrix b(2, 2);
    b << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(4, 4);
    CHECK(op_norm(solve(identity(2), b) - b) <= 1e-14);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = Complex(2, 0);
    d(1, 1) = Complex(4, 0);
    const ComplexMatrix x = solve(d, identity(2));
    CHECK(std::abs(x(0, 0) - Complex(0.5, 0)) <= 1e-15);
    CHECK(std::abs(x(1, 1) - Complex(0.25, 0)) <= 1e-15);
}

TEST_CASE("solve: residual below 1e-10 and recovers known solutions") {
    auto rng = seeded_engine(11);
    for (int i = 0; i < 5; ++i) {
        const ComplexMatrix m = random_matrix(rng, 8, 2.0) + 3.0 * identity(8);
        const ComplexMatrix x_true = random_matrix(rng, 8, 1.0);
        const ComplexMatrix rhs = m * x_true;
        const ComplexMatrix x = solve(m, rhs);
        CHECK(op_norm(m * x - rhs) <= 1e-10 * op_norm(rhs));
        CHECK(op_norm(x - x_true) <= 1e-9 * op_norm(x_true));
    }
}

TEST_CASE("solve: rejects singular matrices and mismatched shapes") {
    ComplexMatrix sing = ComplexMatrix::Zero(2, 2);
    sing(0, 0) = Complex(1, 0);
    CHECK_THROWS_AS(solve(sing, identity(2)), singular_matrix);
    CHECK_THROWS_AS(solve(identity(2), identity(3)), invalid_input);
}

TEST_CASE("eigenvalues: diagonal, nilpotent, companion") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = Complex(-1, 0);
    d(1, 1) = Complex(-4, 0);
    auto eig = eigenvalues(d);
    std::sort(eig.begin(), eig.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(eig[0] - Complex(-4, 0)) <= 1e-12);
    CHECK(std::abs(eig[1] - Complex(-1, 0)) <= 1e-12);

    ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
    nil(0, 1) = Complex(1, 0);
    for (Complex mu : eigenvalues(nil)) CHECK(std::abs(mu) <= 1e-8);

    // Companion matrix of z^2 + 1.
    ComplexMatrix comp = ComplexMatrix::Zero(2, 2);
    comp(0, 1) = Complex(-1, 0);
    comp(1, 0) = Complex(1, 0);
    auto roots = eigenvalues(comp);
    std::sort(roots.begin(), roots.end(),
              [](Complex a, Complex b) { return a.imag() < b.imag(); });
    CHECK(std::abs(roots[0] - Complex(0, -1)) <= 1e-12);
    CHECK(std::abs(roots[1] - Complex(0, 1)) <= 1e-12);
}

TEST_CASE("eigenvalues: residual contract on random matrices") {
    auto rng = seeded_engine(13);
    const ComplexMatrix m = random_matrix(rng, 8, 3.0);
    for (Complex mu : eigenvalues(m)) {
        // Each eigenvalue must be within 1e-8 ||m|| of the spectrum in the
        // smallest-singular-value sense.
        Eigen::JacobiSVD<ComplexMatrix> svd(m - mu * identity(8));
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        CHECK(smin <= 1e-8 * op_norm(m));
    }
}

TEST_CASE("spectral_radius: diagonal case") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = Complex(0.5, 0);
    d(1, 1) = Complex(0, 2);
    d(2, 2) = Complex(-1, 0);
    CHECK(spectral_radius(d) == doctest::Approx(2.0).epsilon(1e-12));
}
