#include <doctest.h>

#include <cmath>

#include "coslab/matrix.hpp"
#include "coslab/quadrature.hpp"

using namespace coslab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gauss_legendre: nodes and weights integrate monomials exactly") {
    // 8-point Gauss is exact up to degree 15 per panel.
    QuadratureRule q{1, 8};
    for (int k = 0; k <= 15; ++k) {
        const double got = integrate(q, 1.0, [&](double t) { return std::pow(t, k); });
        CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
    }
}

TEST_CASE("integrate: smooth scalar integrands") {
    QuadratureRule q{16, 8};
    CHECK(integrate(q, kPi, [](double t) { return std::sin(t); }) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate(q, 1.0, [](double t) { return std::exp(t); }) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
}

TEST_CASE("integrate: directed integral for negative upper limit") {
    QuadratureRule q{16, 8};
    // int_0^{-1} t dt = 1/2.
    CHECK(integrate(q, -1.0, [](double t) { return t; }) == doctest::Approx(0.5).epsilon(1e-13));
    // int_0^{-1} dt = -1.
    CHECK(integrate(q, -1.0, [](double) { return 1.0; }) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("integrate: matrix-valued integrand") {
    QuadratureRule q{4, 8};
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    const ComplexMatrix got = integrate(q, 1.0, [&](double t) -> ComplexMatrix {
        ComplexMatrix m = identity(2);
        m(0, 1) = Complex(t, 0.0);
        return m;
    });
    CHECK(std::abs(got(0, 0) - Complex(1, 0)) <= 1e-14);
    CHECK(std::abs(got(0, 1) - Complex(0.5, 0)) <= 1e-14);
    CHECK(std::abs(got(1, 1) - Complex(1, 0)) <= 1e-14);
}

TEST_CASE("QuadratureRule: for_interval scales panels, refined doubles them") {
    const auto base = QuadratureRule::for_interval(0.5, Complex(1, 0));
    CHECK(base.panels >= 16);
    CHECK(base.nodes_per_panel == 8);
    const auto fine = QuadratureRule::for_interval(10.0, Complex(3, 4));
    CHECK(fine.panels >= 4 * 10 * 6 - 1);
    const auto doubled = base.refined();
    CHECK(doubled.panels == 2 * base.panels);
    CHECK(doubled.nodes_per_panel == base.nodes_per_panel);
}
