#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "coslab/error.hpp"
#include "coslab/laws.hpp"
#include "coslab/sampling.hpp"

using namespace coslab;

namespace {

constexpr double kPi = 3.14159265358979323846;

CosineFamily scalar_family(double x) {
    ComplexMatrix m(1, 1);
    m(0, 0) = Complex(x, 0.0);
    return CosineFamily{Generator(m)};
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    return out;
}

}  // namespace

TEST_CASE("norm_profile: scalar values, sorting, dedup, and zero at t = 0") {
    const auto prof = norm_profile(scalar_family(-1.0), {kPi, 0.0, kPi / 2.0, kPi});
    REQUIRE(prof.t.size() == 3);  // duplicate pi collapsed
    CHECK(prof.t[0] == 0.0);
    CHECK(prof.dist[0] == 0.0);
    CHECK(prof.dist[1] == doctest::Approx(1.0).epsilon(1e-12));   // t = pi/2
    CHECK(prof.dist[2] == doctest::Approx(2.0).epsilon(1e-12));   // t = pi
    CHECK(prof.kind == FamilyKind::cosine);

    ComplexMatrix m(1, 1);
    m(0, 0) = Complex(-1.0, 0.0);
    const Semigroup sg{Generator(m)};
    CHECK(norm_profile(sg, {0.0, 1.0}).kind == FamilyKind::semigroup);
    CHECK_THROWS_AS(norm_profile(sg, {-1.0, 1.0}), invalid_input);
    CHECK_THROWS_AS(norm_profile(scalar_family(-1.0), std::vector<double>{}), invalid_input);
}

TEST_CASE("norm_profile_vs_scalar: distance to the scalar comparison family") {
    // The family generated by -1 is cos(t) I: distance to a = 1 is zero.
    const auto zero = norm_profile_vs_scalar(scalar_family(-1.0), 1.0, {0.3, 1.0, 2.5});
    for (double d : zero.dist) CHECK(d <= 1e-12);

    // Generated by -9 it is cos(3t) I: distance to a = 1 is |cos 3t - cos t|.
    const auto prof = norm_profile_vs_scalar(scalar_family(-9.0), 1.0, {0.5, 1.0});
    CHECK(prof.dist[0] ==
          doctest::Approx(std::abs(std::cos(1.5) - std::cos(0.5))).epsilon(1e-10));
    CHECK(prof.dist[1] ==
          doctest::Approx(std::abs(std::cos(3.0) - std::cos(1.0))).epsilon(1e-10));
}

TEST_CASE("limsup_zero_estimate: scalar oracle and argument validation") {
    CosineFamily flat{Generator(ComplexMatrix::Zero(2, 2))};
    CHECK(limsup_zero_estimate(flat, 1.0, 5) == 0.0);

    // A = -1, levels = 20 keeps j = 10..19; the max sits at t = 2^-10.
    const double est = limsup_zero_estimate(scalar_family(-1.0), 1.0, 20);
    CHECK(est == doctest::Approx(1.0 - std::cos(std::ldexp(1.0, -10))).epsilon(1e-9));
    CHECK(est >= 4.7e-7);
    CHECK(est <= 4.8e-7);

    CHECK_THROWS_AS(limsup_zero_estimate(flat, 1.0, 2), invalid_input);
    CHECK_THROWS_AS(limsup_zero_estimate(flat, 0.0, 5), invalid_input);
}

TEST_CASE("limsup_zero_estimate: decreases with depth at the cosh rate") {
    auto rng = seeded_engine(83);
    CosineFamily fam{Generator(random_matrix(rng, 6, 4.0))};
    const double e10 = limsup_zero_estimate(fam, 1.0, 10);
    const double e20 = limsup_zero_estimate(fam, 1.0, 20);
    const double e30 = limsup_zero_estimate(fam, 1.0, 30);
    CHECK(e30 <= e20 + 1e-12);
    CHECK(e20 <= e10 + 1e-12);
    CHECK(e30 <= 1e-6);

    // dist(t) <= cosh(t sqrt(||A||)) - 1 term by term in the series.
    const double root = std::sqrt(fam.generator().norm());
    const Eigen::Index n = fam.dim();
    for (double t : {0.5, 0.25, 0.125, 0.0625}) {
        CHECK(op_norm(fam.at(t) - identity(n)) <= std::cosh(t * root) - 1.0 + 1e-9);
    }
}

TEST_CASE("classify: trivial family, counterexample horizon, margin design") {
    // A = 0: measured 0 under every cosine law.
    CosineFamily flat{Generator(ComplexMatrix::Zero(2, 2))};
    const auto triv = classify(norm_profile(flat, linspace(0.0, 10.0, 101)),
                               LawId::zero_two_global);
    CHECK(triv.measured == 0.0);
    CHECK(triv.threshold == 2.0);
    CHECK(triv.conclusion == "family is identically I");

    // A = -1 on [0, 10]: the sup reaches 2 near pi, so no conclusion.
    const auto neg = classify(norm_profile(scalar_family(-1.0), linspace(0.0, 10.0, 2001)),
                              LawId::zero_two_global);
    CHECK(neg.measured >= 2.0 - 1e-5);
    CHECK(neg.conclusion == "no conclusion (hypothesis fails)");

    // Local law on the same family: the limsup proxy over the small-t half of
    // a geometric grid is tiny, so the bounded-generator conclusion fires.
    std::vector<double> geo;
    for (int j = 0; j < 16; ++j) geo.push_back(std::ldexp(1.0, -j));
    const auto loc = classify(norm_profile(scalar_family(-1.0), geo), LawId::zero_two_local);
    CHECK(loc.threshold == 2.0);
    CHECK(loc.conclusion == "generator bounded => uniformly continuous");

    // Semigroup counterexample fixing the margin design: A = -1 on [0, 10]
    // measures 1 - e^{-10} < 1, but the margin keeps the classifier honest.
    ComplexMatrix m(1, 1);
    m(0, 0) = Complex(-1.0, 0.0);
    const auto sg = classify(norm_profile(Semigroup{Generator(m)}, linspace(0.0, 10.0, 101)),
                             LawId::zero_one_global);
    CHECK(sg.threshold == 1.0);
    CHECK(sg.measured == doctest::Approx(0.999954600070238).epsilon(1e-12));
    CHECK(sg.conclusion == "no conclusion (hypothesis fails)");

    // Scalar-distance law on a genuinely scalar family.
    const auto sc = classify(
        norm_profile_vs_scalar(scalar_family(-1.0), 1.0, linspace(0.0, 2.0 * kPi, 101)),
        LawId::scalar_distance);
    CHECK(sc.measured <= 1e-10);
    CHECK(sc.conclusion == "family equals the scalar comparison family");

    // Kind mismatch is refused both ways.
    CHECK_THROWS_AS(classify(norm_profile(flat, {0.5}), LawId::zero_one_global), invalid_input);
    CHECK_THROWS_AS(classify(norm_profile(Semigroup{Generator(m)}, {0.5}),
                             LawId::zero_two_global),
                    invalid_input);
}

TEST_CASE("law_name: report identifiers") {
    CHECK(std::string(law_name(LawId::zero_two_local)) == "zero-two-local");
    CHECK(std::string(law_name(LawId::zero_two_global)) == "zero-two-global");
    CHECK(std::string(law_name(LawId::zero_one_global)) == "zero-one-global");
    CHECK(std::string(law_name(LawId::scalar_distance)) == "scalar-distance");
}

TEST_CASE("diag_cosine_example: exact diagonal evaluation and the optimal 2") {
    // n = 1 is the scalar family: distance 2 exactly at t = pi.
    const auto one = diag_cosine_example(1);
    CHECK(op_norm(one.at(kPi) - identity(1)) == doctest::Approx(2.0).epsilon(1e-12));

    const auto eight = diag_cosine_example(8);
    const ComplexMatrix c = eight.at(0.3);
    for (int k = 1; k <= 8; ++k)
        CHECK(std::abs(c(k - 1, k - 1) - Complex(std::cos(k * 0.3), 0)) <= 1e-12);

    // Sup over [0, 0.1] is attained at the endpoint: 1 - cos(0.8).
    double sup = 0.0;
    for (double t : linspace(0.0, 0.1, 2000))
        sup = std::max(sup, op_norm(eight.at(t) - identity(8)));
    CHECK(sup == doctest::Approx(0.303293290652835).epsilon(1e-9));

    CHECK_THROWS_AS(diag_cosine_example(0), invalid_input);
}

TEST_CASE("ExtensionFamily: block evaluation, norms, and generator recovery") {
    // A = 0: the extension is identically I.
    ExtensionFamily triv{CosineFamily{Generator(ComplexMatrix::Zero(2, 2))}, 4};
    CHECK(triv.dist_to_identity(1.3) <= 1e-14);
    CHECK(op_norm(triv.materialize(1.3) - identity(8)) <= 1e-14);

    // Scalar cos t with 3 blocks at t = 0.2: diag(cos 0.2, cos 0.4, cos 0.6).
    ExtensionFamily ext{scalar_family(-1.0), 3};
    CHECK(ext.dim() == 3);
    CHECK(ext.blocks() == 3);
    CHECK(std::abs(ext.block_at(2, 0.2)(0, 0) - Complex(std::cos(0.4), 0)) <= 1e-12);
    CHECK(ext.dist_to_identity(0.2) == doctest::Approx(1.0 - std::cos(0.6)).epsilon(1e-12));
    CHECK(op_norm(ext.materialize(0.2) - identity(3)) ==
          doctest::Approx(ext.dist_to_identity(0.2)).epsilon(1e-10));

    // Sup over a t-grid equals the sup of the base family over the union grid.
    double lhs = 0.0;
    for (double t : {0.1, 0.2, 0.3}) lhs = std::max(lhs, ext.dist_to_identity(t));
    double rhs = 0.0;
    const auto base = scalar_family(-1.0);
    for (double t : {0.1, 0.2, 0.3})
        for (int n = 1; n <= 3; ++n)
            rhs = std::max(rhs, op_norm(base.at(n * t) - identity(1)));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    // Block generators are n^2 A and recoverable to O(h^2).
    CHECK(op_norm(ext.block_generator(3) - 9.0 * base.generator().matrix()) <= 1e-14);
    for (int n = 1; n <= 3; ++n) {
        const double h = 1.0 / (32.0 * n * n);
        const double err = op_norm(ext.block_generator_recover(n, h) - ext.block_generator(n));
        const double err_half =
            op_norm(ext.block_generator_recover(n, h / 2.0) - ext.block_generator(n));
        CHECK(err / err_half == doctest::Approx(4.0).epsilon(0.2));
    }

    CHECK_THROWS_AS(ext.block_at(0, 0.1), invalid_input);
    CHECK_THROWS_AS(ext.block_at(4, 0.1), invalid_input);
    CHECK_THROWS_AS(ext.block_generator_recover(1, 0.0), invalid_input);
    CHECK_THROWS_AS(ext.block_generator_recover(1, 1.5), invalid_input);
    CHECK_THROWS_AS(ExtensionFamily(scalar_family(-1.0), 0), invalid_input);
}

TEST_CASE("scalar_distance_sup: the 8/(3 sqrt 3) constant") {
    const double analytic = scalar_distance_closed_form();
    CHECK(analytic == doctest::Approx(1.539600717839002).epsilon(1e-15));

    const double sup = scalar_distance_sup(1.0, 200000);
    CHECK(std::abs(sup - analytic) <= 1e-6);
    CHECK(sup < 2.0);

    // Independent of a by the substitution x = a t.
    CHECK(std::abs(scalar_distance_sup(1.0, 200000) - scalar_distance_sup(2.5, 200000)) <= 1e-6);

    CHECK_THROWS_AS(scalar_distance_sup(0.0, 100), invalid_input);
    CHECK_THROWS_AS(scalar_distance_sup(1.0, 0), invalid_input);
}
