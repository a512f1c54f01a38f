#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <vector>

#include "coslab/error.hpp"
#include "coslab/io.hpp"
#include "coslab/laws.hpp"
#include "coslab/resolvent.hpp"
#include "coslab/sampling.hpp"
#include "coslab/spectral.hpp"

namespace coslab::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Builtin generators addressable as "zero:N", "scalar:X", "nilpotent",
// "diag:N" without a matrix file.
ComplexMatrix example_matrix(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "zero") {
        const int n = std::stoi(arg);
        if (n < 1) throw invalid_input("example: zero dimension must be >= 1");
        return ComplexMatrix::Zero(n, n);
    }
    if (head == "scalar") {
        ComplexMatrix m(1, 1);
        m(0, 0) = Complex(std::stod(arg), 0.0);
        return m;
    }
    if (head == "nilpotent") {
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 1) = Complex(1.0, 0.0);
        return m;
    }
    if (head == "diag") {
        const int n = std::stoi(arg);
        return diag_cosine_example(n).generator().matrix();
    }
    throw invalid_input("example: unknown spec '" + spec + "'");
}

ComplexMatrix generator_from(const nlohmann::json& config) {
    if (config.contains("generator") && !config.at("generator").get<std::string>().empty())
        return load_matrix(config.at("generator").get<std::string>());
    return example_matrix(config.at("example").get<std::string>());
}

EvalOptions eval_options_from(const nlohmann::json& config) {
    EvalOptions o;
    if (config.contains("taylor_terms")) o.taylor_terms = config.at("taylor_terms").get<int>();
    if (config.contains("scaling_threshold"))
        o.scaling_threshold = config.at("scaling_threshold").get<double>();
    if (o.taylor_terms < 1) throw invalid_input("config: taylor_terms must be >= 1");
    if (!(o.scaling_threshold > 0.0)) throw invalid_input("config: scaling_threshold must be > 0");
    return o;
}

std::vector<double> linspace(double start, double stop, int points) {
    if (points < 2) throw invalid_input("config: grid needs at least 2 points");
    if (!(stop > start)) throw invalid_input("config: grid stop must exceed start");
    std::vector<double> out;
    out.reserve(points);
    for (int i = 0; i < points; ++i)
        out.push_back(start + (stop - start) * static_cast<double>(i) / (points - 1));
    return out;
}

std::vector<double> grid_from(const nlohmann::json& config) {
    const auto& g = config.at("grid");
    return linspace(g.at("start").get<double>(), g.at("stop").get<double>(),
                    g.at("points").get<int>());
}

LawId law_from(const std::string& name) {
    if (name == "zero-two-local") return LawId::zero_two_local;
    if (name == "zero-two-global") return LawId::zero_two_global;
    if (name == "zero-one-global") return LawId::zero_one_global;
    if (name == "scalar-distance") return LawId::scalar_distance;
    throw invalid_input("config: unknown law '" + name + "'");
}

int report_violation(const char* contract) {
    std::fprintf(stderr, "contract violated: %s\n", contract);
    return 2;
}

}  // namespace

nlohmann::json effective_config(nlohmann::json defaults, const CommonOpts& opts,
                                const nlohmann::json& overrides) {
    if (!opts.config_path.empty()) defaults.merge_patch(load_json(opts.config_path));
    defaults.merge_patch(overrides);
    return defaults;
}

std::string out_path(const CommonOpts& opts, const std::string& name) {
    std::filesystem::create_directories(opts.out_dir);
    return (std::filesystem::path(opts.out_dir) / name).string();
}

int run_profile(const CommonOpts& opts, const nlohmann::json& overrides) {
    nlohmann::json config = {{"example", "zero:4"},
                             {"kind", "cosine"},
                             {"law", "zero-two-global"},
                             {"grid", {{"start", 0.0}, {"stop", 10.0}, {"points", 401}}},
                             {"margin", 1e-3},
                             {"scalar_a", 1.0},
                             {"seed", 42}};
    config = effective_config(std::move(config), opts, overrides);

    const ComplexMatrix a = generator_from(config);
    const EvalOptions eval = eval_options_from(config);
    const LawId law = law_from(config.at("law").get<std::string>());
    const auto grid = grid_from(config);
    const std::string kind = config.at("kind").get<std::string>();

    NormProfile profile;
    if (kind == "semigroup") {
        profile = norm_profile(Semigroup{Generator(a), eval}, grid);
    } else if (kind == "cosine") {
        if (law == LawId::scalar_distance)
            profile = norm_profile_vs_scalar(CosineFamily{Generator(a), eval},
                                             config.at("scalar_a").get<double>(), grid);
        else
            profile = norm_profile(CosineFamily{Generator(a), eval}, grid);
    } else {
        throw invalid_input("config: kind must be cosine or semigroup");
    }

    const LawVerdict verdict = classify(profile, law, config.at("margin").get<double>());

    CsvTable table;
    table.header = {"t", "dist"};
    for (std::size_t i = 0; i < profile.t.size(); ++i)
        table.rows.push_back({format_double(profile.t[i]), format_double(profile.dist[i])});
    write_csv(out_path(opts, "profile.csv"), config, table);
    write_report(out_path(opts, "verdict.json"), config, to_json(verdict));
    return 0;
}

int run_dalembert(const CommonOpts& opts, const nlohmann::json& overrides) {
    nlohmann::json config = {
        {"example", "scalar:-1"}, {"t_max", 1.0}, {"points", 10}, {"tol", 1e-8}, {"seed", 42}};
    config = effective_config(std::move(config), opts, overrides);

    CosineFamily fam{Generator(generator_from(config)), eval_options_from(config)};
    const double t_max = config.at("t_max").get<double>();
    const int points = config.at("points").get<int>();
    if (points < 2) throw invalid_input("config: points must be >= 2");
    const double tol = config.at("tol").get<double>();

    CsvTable table;
    table.header = {"t", "s", "residual"};
    double max_residual = 0.0;
    for (int i = 0; i < points; ++i) {
        for (int j = 0; j < points; ++j) {
            const double t = t_max * static_cast<double>(i) / (points - 1);
            const double s = t_max * static_cast<double>(j) / (points - 1);
            const double r = dalembert_residual(fam, t, s);
            max_residual = std::max(max_residual, r);
            table.rows.push_back({format_double(t), format_double(s), format_double(r)});
        }
    }
    write_csv(out_path(opts, "dalembert.csv"), config, table);
    if (max_residual > tol)
        return report_violation("d'Alembert residual 2C(t)C(s) = C(t+s)+C(t-s) exceeded tol");
    return 0;
}

int run_resolvent(const CommonOpts& opts, const nlohmann::json& overrides) {
    nlohmann::json config = {{"example", "scalar:-1"},
                             {"lambdas", {{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}, {2.0, -1.0}}},
                             {"s_values", {0.25, 0.5, 1.0}},
                             {"identity_tol", 1e-6},
                             {"oracle_tol", 1e-6},
                             {"seed", 42}};
    config = effective_config(std::move(config), opts, overrides);

    const ComplexMatrix a = generator_from(config);
    CosineFamily fam{Generator(a), eval_options_from(config)};
    const Eigen::Index n = fam.generator().dim();
    const double identity_tol = config.at("identity_tol").get<double>();
    const double oracle_tol = config.at("oracle_tol").get<double>();

    CsvTable table;
    table.header = {"re_lambda", "im_lambda", "s", "identity_residual", "bound_slack",
                    "rel_diff_direct"};
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    for (const auto& l : config.at("lambdas")) {
        const Complex lambda(l.at(0).get<double>(), l.at(1).get<double>());
        for (const auto& sv : config.at("s_values")) {
            const double s = sv.get<double>();
            const auto rule = QuadratureRule::for_interval(s, lambda);
            const ResolventReport report = resolvent_via_s(fam, lambda, s, rule);
            const ComplexMatrix direct = solve(lambda * lambda * identity(n) - a, identity(n));
            const double rel_diff = op_norm(report.resolvent - direct) / op_norm(direct);
            ok = ok && report.identity_residual <= identity_tol &&
                 report.bound_slack >= -1e-8 && rel_diff <= oracle_tol;
            table.rows.push_back({format_double(lambda.real()), format_double(lambda.imag()),
                                  format_double(s), format_double(report.identity_residual),
                                  format_double(report.bound_slack), format_double(rel_diff)});
            reports.push_back(to_json(report));
        }
    }
    write_csv(out_path(opts, "resolvent.csv"), config, table);
    write_report(out_path(opts, "resolvent.json"), config, nlohmann::json{{"reports", reports}});
    if (!ok)
        return report_violation(
            "resolvent contracts (identity residual / sinh norm-bound slack / direct-solve match)");
    return 0;
}

int run_region(const CommonOpts& opts, const nlohmann::json& overrides) {
    nlohmann::json config = {{"example", "scalar:-1"}, {"c", 0.5},
                             {"t0", kPi / 6.0},        {"count", 25},
                             {"radius_cap_factor", 3.0}, {"seed", 42}};
    config = effective_config(std::move(config), opts, overrides);

    CosineFamily fam{Generator(generator_from(config)), eval_options_from(config)};
    const SpectralRegionParams params =
        region_params(config.at("c").get<double>(), config.at("t0").get<double>());
    auto rng = seeded_engine(config.at("seed").get<std::uint64_t>());
    const auto mus =
        sample_region_mu(rng, params, config.at("count").get<int>(),
                         config.at("radius_cap_factor").get<double>() * params.r_c);
    const RegionVerification verification = verify_region_bound(fam, params, mus);

    write_report(out_path(opts, "region_params.json"), config,
                 nlohmann::json{{"c", params.c},
                                {"t0", params.t0},
                                {"r_tilde", params.r_tilde},
                                {"phi_c", params.phi_c},
                                {"r_c", params.r_c},
                                {"m_c", params.m_c},
                                {"sup_c", verification.sup_c}});
    CsvTable table;
    table.header = {"re_mu", "im_mu", "s_lambda", "resolvent_norm", "bound", "pass"};
    for (const auto& smp : verification.samples)
        table.rows.push_back({format_double(smp.mu.real()), format_double(smp.mu.imag()),
                              format_double(smp.s), format_double(smp.resolvent_norm),
                              format_double(smp.bound), smp.pass ? "1" : "0"});
    write_csv(out_path(opts, "region.csv"), config, table);
    if (!verification.all_pass)
        return report_violation("region bound ||mu R(mu,A)|| <= M_c sup||C|| on sampled mu");
    return 0;
}

int run_semigroup_laws(const CommonOpts& opts, const nlohmann::json& overrides) {
    nlohmann::json config = {{"example", "scalar:-0.1"},
                             {"t_values", {0.5, 1.0, 2.0}},
                             {"lambdas", {1.0, 10.0, 100.0}},
                             {"sup_horizon", 50.0},
                             {"sup_samples", 2001},
                             {"identity_tol", 1e-8},
                             {"laplace_tol", 1e-6},
                             {"seed", 42}};
    config = effective_config(std::move(config), opts, overrides);

    const ComplexMatrix a = generator_from(config);
    Semigroup sg{Generator(a), eval_options_from(config)};
    const Eigen::Index n = sg.generator().dim();
    const double identity_tol = config.at("identity_tol").get<double>();
    const double laplace_tol = config.at("laplace_tol").get<double>();
    const double sup_horizon = config.at("sup_horizon").get<double>();
    const int sup_samples = config.at("sup_samples").get<int>();

    bool ok = true;
    nlohmann::json cesaro = nlohmann::json::array();
    for (const auto& tv : config.at("t_values")) {
        const double t = tv.get<double>();
        const auto rule = QuadratureRule::for_interval(t, Complex(1, 0));
        const CesaroCheck check = cesaro_check(sg, t, rule, sup_horizon, sup_samples);
        ok = ok && check.identity_residual <= identity_tol;
        if (check.bound_applicable) ok = ok && check.inv_norm <= check.bound + 1e-8;
        cesaro.push_back({{"t", t},
                          {"identity_residual", check.identity_residual},
                          {"inv_norm", check.inv_norm},
                          {"sup_distance", check.sup_distance},
                          {"bound", check.bound},
                          {"bound_applicable", check.bound_applicable}});
    }

    double r = 0.0;
    for (int i = 0; i < sup_samples; ++i) {
        const double s = sup_horizon * static_cast<double>(i) / (sup_samples - 1);
        r = std::max(r, op_norm(sg.at(s) - identity(n)));
    }
    const GrowthBound gb = growth_bound_estimate(sg);
    nlohmann::json frequency = nlohmann::json::array();
    for (const auto& lv : config.at("lambdas")) {
        const Complex lambda(lv.get<double>(), 0.0);
        const ComplexMatrix direct = solve(lambda * identity(n) - a, identity(n));
        const double norm_distance = op_norm(lambda * direct - identity(n));
        const double horizon = laplace_horizon_for(gb, lambda);
        const auto rule = QuadratureRule::for_interval(horizon, lambda);
        const double rel_diff =
            op_norm(laplace_resolvent(sg, lambda, horizon, rule) - direct) / op_norm(direct);
        ok = ok && norm_distance <= r + 1e-8 && rel_diff <= laplace_tol;
        frequency.push_back({{"lambda", complex_to_json(lambda)},
                             {"norm_distance", norm_distance},
                             {"laplace_rel_diff", rel_diff}});
    }

    write_report(out_path(opts, "semigroup_laws.json"), config,
                 nlohmann::json{{"cesaro", cesaro},
                                {"frequency", frequency},
                                {"r_grid_sup", r},
                                {"growth", {{"m_const", gb.m_const}, {"omega", gb.omega}}}});
    if (!ok)
        return report_violation(
            "semigroup law contracts (Cesaro identity/inverse bound, Laplace-resolvent match)");
    return 0;
}

}  // namespace coslab::cli
