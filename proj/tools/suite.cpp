#include "suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coslab/sampling.hpp"

namespace coslab::suite {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<ComplexMatrix> generator_set(std::uint64_t seed) {
    auto rng = seeded_engine(seed);
    std::vector<ComplexMatrix> out;
    out.reserve(kGeneratorCount);
    for (int i = 0; i < kGeneratorCount; ++i)
        out.push_back(random_matrix(rng, kGeneratorDim, kGeneratorNormBound));
    return out;
}

DalembertChecks run_dalembert_suite(std::uint64_t seed) {
    DalembertChecks out;
    const auto gens = generator_set(seed);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        CosineFamily fam{Generator(gens[g])};
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const double t = static_cast<double>(i) / 9.0;
                const double s = static_cast<double>(j) / 9.0;
                const double r = dalembert_residual(fam, t, s);
                out.rows.push_back({g, t, s, r});
                out.max_residual = std::max(out.max_residual, r);
            }
        }
    }
    out.pass = out.max_residual <= 1e-8;
    return out;
}

std::vector<Complex> sweep_lambdas() {
    return {Complex(1, 0), Complex(2, 0), Complex(1, 1), Complex(2, -1)};
}

std::vector<double> sweep_s_values() { return {0.25, 0.5, 1.0}; }

IdentityChecks run_identity_suite(std::uint64_t seed) {
    IdentityChecks out;
    const auto gens = generator_set(seed);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        CosineFamily fam{Generator(gens[g])};
        for (Complex lambda : sweep_lambdas()) {
            for (double s : sweep_s_values()) {
                const auto rule = QuadratureRule::for_interval(s, lambda);
                const auto check = resolvent_identity_residual(fam, lambda, s, rule);
                out.rows.push_back({g, lambda, s, check.identity});
                out.max_residual = std::max(out.max_residual, check.identity);
            }
        }
    }
    out.pass = out.max_residual <= 1e-7;
    return out;
}

OracleChecks run_oracle_suite(std::uint64_t seed) {
    OracleChecks out;
    const auto gens = generator_set(seed);
    bool all_ok = true;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        CosineFamily fam{Generator(gens[g])};
        const Eigen::Index n = fam.generator().dim();
        for (Complex lambda : sweep_lambdas()) {
            for (double s : sweep_s_values()) {
                OracleChecks::Row row{g, lambda, s, 0.0, false};
                try {
                    const auto rule = QuadratureRule::for_interval(s, lambda);
                    const auto report = resolvent_via_s(fam, lambda, s, rule);
                    const ComplexMatrix direct =
                        solve(lambda * lambda * identity(n) - gens[g], identity(n));
                    row.rel_diff = op_norm(report.resolvent - direct) / op_norm(direct);
                    row.ok = row.rel_diff <= 1e-6;
                } catch (const error&) {
                    row.ok = false;
                    row.rel_diff = std::numeric_limits<double>::infinity();
                }
                all_ok = all_ok && row.ok;
                out.max_rel_diff = std::max(out.max_rel_diff, row.rel_diff);
                out.rows.push_back(row);
            }
        }
    }
    out.pass = all_ok;
    return out;
}

SBoundChecks run_s_bound_suite(std::uint64_t seed) {
    SBoundChecks out;
    const auto gens = generator_set(seed);
    double worst = -std::numeric_limits<double>::infinity();
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        CosineFamily fam{Generator(gens[g])};
        for (Complex lambda : sweep_lambdas()) {
            for (double s : sweep_s_values()) {
                const auto rule = QuadratureRule::for_interval(s, lambda);
                const auto check = s_norm_bound_check(fam, lambda, s, rule);
                out.rows.push_back({g, lambda, s, check.lhs, check.rhs});
                worst = std::max(worst, check.lhs - check.rhs);
            }
        }
    }
    auto rng = seeded_engine(seed + 4);
    for (int i = 0; i < 1000; ++i) {
        const double s = -3.0 + 6.0 * uniform01(rng);
        const double x = 1e-3 + 3.0 * uniform01(rng);
        const double lhs = std::sinh(std::abs(s) * x) / x;
        const double rhs = 2.0 * std::abs(s) * std::exp(std::abs(s * x));
        out.scalar_rows.push_back({s, x, lhs, rhs});
        worst = std::max(worst, lhs - rhs);
    }
    out.worst_slack = worst;
    out.pass = worst <= 1e-8;
    return out;
}

GrowthBoundChecks run_growth_bound_suite(std::uint64_t seed) {
    GrowthBoundChecks out;
    const auto gens = generator_set(seed);
    auto rng = seeded_engine(seed + 5);
    double worst = -std::numeric_limits<double>::infinity();
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        CosineFamily fam{Generator(gens[g])};
        const GrowthBound gb = growth_bound_estimate(fam, 16.0, 641);
        const Eigen::Index n = fam.generator().dim();
        for (int k = 0; k < 50; ++k) {
            const double re = gb.omega + 0.5 + 2.5 * uniform01(rng);
            const double im = -5.0 + 10.0 * uniform01(rng);
            const Complex lambda(re, im);
            const Complex mu = lambda * lambda;
            const double value = std::abs(mu) * op_norm(solve(mu * identity(n) - gens[g], identity(n)));
            const double bound = gb.m_const * std::abs(lambda) / (re - gb.omega);
            out.rows.push_back({g, lambda, value, bound});
            worst = std::max(worst, value - bound);
        }
    }
    out.worst_slack = worst;
    out.pass = worst <= 1e-6;
    return out;
}

namespace {

double diag_window_sup(int n, double t_max, int grid_points) {
    CosineFamily fam = diag_cosine_example(n);
    const Eigen::Index d = fam.generator().dim();
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = t_max * static_cast<double>(i) / (grid_points - 1);
        best = std::max(best, op_norm(fam.at(t) - identity(d)));
    }
    return best;
}

}  // namespace

DiagOptimality run_diag_optimality() {
    DiagOptimality out;
    out.sup32 = diag_window_sup(32, 0.1, 2000);
    out.sup8 = diag_window_sup(8, 0.1, 2000);
    out.expected8 = 1.0 - std::cos(0.8);
    out.pass = out.sup32 >= 2.0 - 1e-6 && std::abs(out.sup8 - out.expected8) <= 1e-9;
    return out;
}

ScalarDistance run_scalar_distance() {
    ScalarDistance out;
    out.grid_sup = scalar_distance_sup(1.0, 1000000);
    out.analytic = scalar_distance_closed_form();
    out.pass = std::abs(out.grid_sup - out.analytic) <= 1e-6 &&
               std::abs(out.grid_sup - 1.5396007) <= 1e-6;
    return out;
}

LimsupChecks run_limsup_suite(std::uint64_t seed) {
    LimsupChecks out;
    bool ok = true;
    const auto gens = generator_set(seed);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        CosineFamily fam{Generator(gens[g])};
        const double est = limsup_zero_estimate(fam, 1.0, 30);
        out.bounded.push_back({"random-" + std::to_string(g), est});
        ok = ok && est <= 1e-6;
    }
    {
        ComplexMatrix neg1(1, 1);
        neg1(0, 0) = Complex(-1.0, 0.0);
        ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
        nil(0, 1) = Complex(1.0, 0.0);
        const std::vector<std::pair<std::string, ComplexMatrix>> named = {
            {"scalar-neg1", neg1}, {"nilpotent", nil}};
        for (const auto& [label, a] : named) {
            CosineFamily fam{Generator(a)};
            const double est = limsup_zero_estimate(fam, 1.0, 30);
            out.bounded.push_back({label, est});
            ok = ok && est <= 1e-6;
        }
        const double est8 = limsup_zero_estimate(diag_cosine_example(8), 1.0, 30);
        out.bounded.push_back({"diag-8", est8});
        ok = ok && est8 <= 1e-6;
    }
    for (int n : {64, 96, 128}) {
        const double est = limsup_zero_estimate(diag_cosine_example(n), 1.0, 4);
        out.diagonal.push_back({"diag-" + std::to_string(n), est});
        ok = ok && est >= 1.9;
    }
    out.pass = ok;
    return out;
}

FrequencyChecks run_frequency_suite() {
    FrequencyChecks out;
    ComplexMatrix a(1, 1);
    a(0, 0) = Complex(-0.1, 0.0);
    Semigroup sg{Generator(a)};
    for (int i = 0; i < 2001; ++i) {
        const double s = 50.0 * static_cast<double>(i) / 2000.0;
        out.r = std::max(out.r, op_norm(sg.at(s) - identity(1)));
    }
    const GrowthBound gb = growth_bound_estimate(sg);
    bool ok = true;
    for (double lambda : {1.0, 10.0, 100.0}) {
        FrequencyChecks::Row row{lambda, 0.0, 0.0};
        const ComplexMatrix direct = solve(Complex(lambda, 0) * identity(1) - a, identity(1));
        row.norm_distance = op_norm(Complex(lambda, 0) * direct - identity(1));
        const double horizon = laplace_horizon_for(gb, Complex(lambda, 0));
        const auto rule = QuadratureRule::for_interval(horizon, Complex(lambda, 0));
        const ComplexMatrix lap = laplace_resolvent(sg, Complex(lambda, 0), horizon, rule);
        row.laplace_rel_diff = op_norm(lap - direct) / op_norm(direct);
        ok = ok && row.norm_distance <= out.r + 1e-8 && row.laplace_rel_diff <= 1e-6;
        out.rows.push_back(row);
    }
    out.pass = ok;
    return out;
}

CesaroChecks run_cesaro_suite() {
    CesaroChecks out;
    ComplexMatrix scal(1, 1);
    scal(0, 0) = Complex(-0.1, 0.0);
    ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
    nil(0, 1) = Complex(1.0, 0.0);
    const std::vector<std::pair<std::string, ComplexMatrix>> examples = {{"scalar-neg01", scal},
                                                                         {"nilpotent", nil}};
    bool ok = true;
    for (const auto& [label, a] : examples) {
        Semigroup sg{Generator(a)};
        for (double t : {0.5, 1.0, 2.0}) {
            const auto rule = QuadratureRule::for_interval(t, Complex(1, 0));
            const auto check = cesaro_check(sg, t, rule);
            out.rows.push_back({label, t, check.identity_residual, check.inv_norm, check.bound,
                                check.bound_applicable});
            ok = ok && check.identity_residual <= 1e-8;
            if (check.bound_applicable) ok = ok && check.inv_norm <= check.bound + 1e-8;
        }
    }
    out.pass = ok;
    return out;
}

ExtensionChecks run_extension_suite(std::uint64_t seed) {
    ExtensionChecks out;
    ComplexMatrix scal(1, 1);
    scal(0, 0) = Complex(-1.0, 0.0);
    auto rng = seeded_engine(seed + 11);
    const ComplexMatrix rnd = random_matrix(rng, 2, 2.0);
    const std::vector<std::pair<std::string, ComplexMatrix>> bases = {{"scalar-neg1", scal},
                                                                      {"random-2x2", rnd}};
    bool ok = true;
    for (const auto& [label, a] : bases) {
        ExtensionFamily ext{CosineFamily{Generator(a)}, 8};
        const Eigen::Index total = ext.dim();
        for (double t : {0.1, 0.37, 0.8}) {
            const double materialized = op_norm(ext.materialize(t) - identity(total));
            const double block_max = ext.dist_to_identity(t);
            const double diff = std::abs(materialized - block_max);
            out.norm_rows.push_back({label, t, materialized, block_max, diff});
            ok = ok && diff <= 1e-10;
        }
        for (int block = 1; block <= 8; ++block) {
            const double h = 1.0 / (32.0 * block * block);
            const ComplexMatrix target = ext.block_generator(block);
            const double err = op_norm(ext.block_generator_recover(block, h) - target);
            const double err_half = op_norm(ext.block_generator_recover(block, h / 2.0) - target);
            const double ratio = err / err_half;
            out.recovery_rows.push_back({label, block, h, err, err_half, ratio});
            ok = ok && ratio >= 3.2 && ratio <= 4.8;
        }
    }
    out.pass = ok;
    return out;
}

RegionChecks run_region_suite(std::uint64_t seed) {
    RegionChecks out;
    const double c = 0.5;
    const double t0 = kPi / 6.0;
    out.params = region_params(c, t0);
    out.certificate = find_r_tilde(c);
    out.params_ok = kPi * std::cos(out.params.phi_c) < out.params.r_tilde &&
                    kPi / out.params.r_c < out.params.t0;

    // Certificate holds at r_tilde and fails at r_tilde + 1e-4.
    const double threshold = (2.0 - c) / 2.0;
    double bump_max = 0.0;
    for (int i = 0; i < 2048; ++i) {
        const double theta = 2.0 * kPi * static_cast<double>(i) / 2048;
        const double r = out.certificate.r_tilde + 1e-4;
        const Complex w(r * std::cos(theta), kPi + r * std::sin(theta));
        bump_max = std::max(bump_max, std::abs(std::cosh(w) + 1.0));
    }
    out.cert_max_at_bump = bump_max;
    out.certificate_ok = out.certificate.boundary_max < threshold && bump_max > threshold;

    ComplexMatrix a(1, 1);
    a(0, 0) = Complex(-1.0, 0.0);
    CosineFamily fam{Generator(a)};
    auto rng = seeded_engine(seed + 12);
    const auto mus = sample_region_mu(rng, out.params, 25, 3.0 * out.params.r_c);
    out.verification = verify_region_bound(fam, out.params, mus);
    out.pass = out.params_ok && out.certificate_ok && out.verification.all_pass;
    return out;
}

}  // namespace coslab::suite
