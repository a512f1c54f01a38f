#include <doctest.h>

#include <cmath>

#include "coslab/error.hpp"
#include "coslab/family.hpp"
#include "coslab/sampling.hpp"

using namespace coslab;

namespace {

ComplexMatrix scalar(double x) {
    ComplexMatrix m(1, 1);
    m(0, 0) = Complex(x, 0.0);
    return m;
}

ComplexMatrix nilpotent2() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(1.0, 0.0);
    return m;
}

}  // namespace

TEST_CASE("cosine_at: zero generator gives the identity for every t") {
    CosineFamily fam{Generator(ComplexMatrix::Zero(3, 3))};
    for (double t : {0.0, 0.3, 2.0, -5.0})
        CHECK(op_norm(fam.at(t) - identity(3)) <= 1e-14);
}

TEST_CASE("cosine_at: scalar family matches cos(a t)") {
    CosineFamily fam{Generator(scalar(-4.0))};  // a = 2
    for (double t : {0.1, 0.5, 1.0, 3.0, 7.0})
        CHECK(std::abs(fam.at(t)(0, 0) - Complex(std::cos(2.0 * t), 0)) <= 1e-12);
}

TEST_CASE("cosine_at: commuting diagonal square roots") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = Complex(-1, 0);
    a(1, 1) = Complex(-4, 0);
    CosineFamily fam{Generator(a)};
    for (double t : {0.25, 1.0, 2.5}) {
        const ComplexMatrix c = fam.at(t);
        CHECK(std::abs(c(0, 0) - Complex(std::cos(t), 0)) <= 1e-10);
        CHECK(std::abs(c(1, 1) - Complex(std::cos(2 * t), 0)) <= 1e-10);
        CHECK(std::abs(c(0, 1)) <= 1e-12);
    }
}

TEST_CASE("cosine_at: nilpotent series truncates exactly") {
    CosineFamily fam{Generator(nilpotent2())};
    for (double t : {0.5, 1.0, 2.0}) {
        const ComplexMatrix c = fam.at(t);
        CHECK(std::abs(c(0, 0) - Complex(1, 0)) <= 1e-14);
        CHECK(std::abs(c(0, 1) - Complex(t * t / 2.0, 0)) <= 1e-12);
        CHECK(std::abs(c(1, 0)) <= 1e-14);
        CHECK(std::abs(c(1, 1) - Complex(1, 0)) <= 1e-14);
    }
}

TEST_CASE("cosine_at: C(0) is exactly the identity, evaluation is exactly even") {
    auto rng = seeded_engine(3);
    CosineFamily fam{Generator(random_matrix(rng, 4, 3.0))};
    const ComplexMatrix c0 = fam.at(0.0);
    CHECK((c0.array() == identity(4).array()).all());
    for (double t : {0.3, 1.7, 4.0}) {
        const ComplexMatrix plus = fam.at(t);
        const ComplexMatrix minus = fam.at(-t);
        CHECK((plus.array() == minus.array()).all());
    }
}

TEST_CASE("cosine_at: double-angle identity within 1e-9") {
    auto rng = seeded_engine(5);
    CosineFamily fam{Generator(random_matrix(rng, 8, 4.0))};
    for (double t : {0.2, 0.9, 1.7, 2.5})
        CHECK(op_norm(fam.at(2 * t) - (2.0 * fam.at(t) * fam.at(t) - identity(8))) <= 1e-9);
}

TEST_CASE("cosine_at: overflow in series scaling raises range_overflow") {
    CosineFamily fam{Generator(scalar(1e12))};
    CHECK_THROWS_AS(fam.at(2e6), range_overflow);
}

TEST_CASE("semigroup_at: diagonal and nilpotent closed forms") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = Complex(-1, 0);
    a(1, 1) = Complex(-2, 0);
    Semigroup sg{Generator(a)};
    const ComplexMatrix t1 = sg.at(1.0);
    CHECK(std::abs(t1(0, 0) - Complex(std::exp(-1.0), 0)) <= 1e-13);
    CHECK(std::abs(t1(1, 1) - Complex(std::exp(-2.0), 0)) <= 1e-13);

    Semigroup nil{Generator(nilpotent2())};
    for (double t : {0.5, 2.0}) {
        const ComplexMatrix m = nil.at(t);
        CHECK(std::abs(m(0, 1) - Complex(t, 0)) <= 1e-13);
        CHECK(std::abs(m(0, 0) - Complex(1, 0)) <= 1e-14);
    }

    CHECK(op_norm(Semigroup{Generator(ComplexMatrix::Zero(2, 2))}.at(3.0) - identity(2)) <=
          1e-14);
}

TEST_CASE("semigroup_at: semigroup law and t < 0 rejection") {
    auto rng = seeded_engine(9);
    Semigroup sg{Generator(random_matrix(rng, 6, 2.0))};
    for (double t : {0.3, 1.1}) {
        for (double s : {0.4, 2.0}) {
            CHECK(op_norm(sg.at(t) * sg.at(s) - sg.at(t + s)) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(sg.at(-0.1), invalid_input);
    CHECK((sg.at(0.0).array() == identity(6).array()).all());
}

TEST_CASE("dalembert_residual: exact and near-exact cases") {
    CosineFamily scal{Generator(scalar(-1.0))};
    CHECK(dalembert_residual(scal, 0.8, 0.0) <= 1e-12);
    CHECK(dalembert_residual(scal, 0.7, 0.3) <= 1e-10);

    auto rng = seeded_engine(21);
    for (int g = 0; g < 3; ++g) {
        CosineFamily fam{Generator(random_matrix(rng, 8, 4.0))};
        double worst = 0.0;
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j)
                worst = std::max(worst, dalembert_residual(fam, 0.2 * i, 0.2 * j));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("generator_recover: closed forms and O(h^2) order") {
    CosineFamily zero{Generator(ComplexMatrix::Zero(2, 2))};
    CHECK(op_norm(generator_recover(zero, 0.5)) <= 1e-12);

    CosineFamily scal{Generator(scalar(-1.0))};
    const double rec = generator_recover(scal, 1e-3)(0, 0).real();
    CHECK(rec == doctest::Approx(-1.0).epsilon(1e-6));
    // Scalar Taylor oracle: 2 (cos h - 1) / h^2 = -0.999999916666669 at h = 1e-3.
    CHECK(rec == doctest::Approx(-0.999999916666669).epsilon(1e-8));

    CosineFamily nil{Generator(nilpotent2())};
    for (double h : {1.0, 0.3, 0.05})
        CHECK(op_norm(generator_recover(nil, h) - nilpotent2()) <= 1e-11);

    auto rng = seeded_engine(17);
    const ComplexMatrix a = random_matrix(rng, 4, 2.0);
    CosineFamily fam{Generator(a)};
    const double e1 = op_norm(generator_recover(fam, 0.2) - a);
    const double e2 = op_norm(generator_recover(fam, 0.1) - a);
    const double e3 = op_norm(generator_recover(fam, 0.05) - a);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
    CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.2));

    CHECK_THROWS_AS(generator_recover(fam, 0.0), invalid_input);
    CHECK_THROWS_AS(generator_recover(fam, 1.5), invalid_input);
}

TEST_CASE("growth_bound_estimate: validity and the cosh growth case") {
    // A = 0: the flat profile fits (1, 0).
    CosineFamily zero{Generator(ComplexMatrix::Zero(2, 2))};
    const GrowthBound gz = growth_bound_estimate(zero, 5.0, 100);
    CHECK(gz.m_const == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gz.omega <= 1e-12);

    // Scalar cos: any valid output; (M >= 1, omega >= 0) and the envelope
    // holds at the sample points.
    CosineFamily scal{Generator(scalar(-1.0))};
    const GrowthBound gs = growth_bound_estimate(scal, 10.0, 200);
    CHECK(gs.m_const >= 1.0);
    CHECK(gs.omega >= 0.0);
    for (int i = 0; i < 200; ++i) {
        const double t = 10.0 * i / 199.0;
        CHECK(op_norm(scal.at(t)) <= gs.m_const * std::exp(gs.omega * t) + 1e-9);
    }

    // C(t) = cosh t: the fitted rate reaches the true exponent.
    CosineFamily grow{Generator(scalar(1.0))};
    const GrowthBound gg = growth_bound_estimate(grow, 5.0, 200);
    CHECK(gg.omega >= 0.95);
    for (int i = 0; i < 200; ++i) {
        const double t = 5.0 * i / 199.0;
        CHECK(op_norm(grow.at(t)) <= gg.m_const * std::exp(gg.omega * t) + 1e-9);
    }

    auto rng = seeded_engine(29);
    CosineFamily fam{Generator(random_matrix(rng, 6, 4.0))};
    const GrowthBound gf = growth_bound_estimate(fam, 8.0, 160);
    CHECK(gf.m_const >= 1.0);
    for (int i = 0; i < 160; ++i) {
        const double t = 8.0 * i / 159.0;
        CHECK(op_norm(fam.at(t)) <= gf.m_const * std::exp(gf.omega * t) + 1e-9);
    }
}
