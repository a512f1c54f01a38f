#include <string>

#include "commands.hpp"
#include "coslab/io.hpp"
#include "suite.hpp"

namespace coslab::cli {

namespace {

std::string cell(double x) { return format_double(x); }
std::string cell(bool b) { return b ? "1" : "0"; }
std::string cell(int i) { return std::to_string(i); }

}  // namespace

// Regenerates every acceptance-criterion number into one directory. All
// randomness derives from the configured seed, so two runs with the same seed
// produce byte-identical files.
int run_reproduce(const CommonOpts& opts, const nlohmann::json& overrides) {
    nlohmann::json config = {{"command", "reproduce"}, {"seed", 42}};
    config = effective_config(std::move(config), opts, overrides);
    const auto seed = config.at("seed").get<std::uint64_t>();

    nlohmann::json summary;

    {
        const auto res = suite::run_dalembert_suite(seed);
        CsvTable t;
        t.header = {"gen", "t", "s", "residual"};
        for (const auto& r : res.rows)
            t.rows.push_back({cell(r.gen), cell(r.t), cell(r.s), cell(r.residual)});
        write_csv(out_path(opts, "c01_dalembert.csv"), config, t);
        summary["c01_dalembert"] = {{"max_residual", res.max_residual}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_identity_suite(seed);
        CsvTable t;
        t.header = {"gen", "re_lambda", "im_lambda", "s", "residual"};
        for (const auto& r : res.rows)
            t.rows.push_back({cell(r.gen), cell(r.lambda.real()), cell(r.lambda.imag()),
                              cell(r.s), cell(r.residual)});
        write_csv(out_path(opts, "c02_identity.csv"), config, t);
        summary["c02_identity"] = {{"max_residual", res.max_residual}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_oracle_suite(seed);
        CsvTable t;
        t.header = {"gen", "re_lambda", "im_lambda", "s", "rel_diff", "ok"};
        for (const auto& r : res.rows)
            t.rows.push_back({cell(r.gen), cell(r.lambda.real()), cell(r.lambda.imag()),
                              cell(r.s), cell(r.rel_diff), cell(r.ok)});
        write_csv(out_path(opts, "c03_oracle.csv"), config, t);
        summary["c03_oracle"] = {{"max_rel_diff", res.max_rel_diff}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_s_bound_suite(seed);
        CsvTable sweep;
        sweep.header = {"gen", "re_lambda", "im_lambda", "s", "lhs", "rhs"};
        for (const auto& r : res.rows)
            sweep.rows.push_back({cell(r.gen), cell(r.lambda.real()), cell(r.lambda.imag()),
                                  cell(r.s), cell(r.lhs), cell(r.rhs)});
        write_csv(out_path(opts, "c04_bdds_sweep.csv"), config, sweep);
        CsvTable scal;
        scal.header = {"s", "x", "lhs", "rhs"};
        for (const auto& r : res.scalar_rows)
            scal.rows.push_back({cell(r.s), cell(r.x), cell(r.lhs), cell(r.rhs)});
        write_csv(out_path(opts, "c04_bdds_scalar.csv"), config, scal);
        summary["c04_bdds"] = {{"worst_slack", res.worst_slack}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_growth_bound_suite(seed);
        CsvTable t;
        t.header = {"gen", "re_lambda", "im_lambda", "value", "bound"};
        for (const auto& r : res.rows)
            t.rows.push_back({cell(r.gen), cell(r.lambda.real()), cell(r.lambda.imag()),
                              cell(r.value), cell(r.bound)});
        write_csv(out_path(opts, "c05_growth.csv"), config, t);
        summary["c05_growth"] = {{"worst_slack", res.worst_slack}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_diag_optimality();
        write_report(out_path(opts, "c06_optimality.json"), config,
                     nlohmann::json{{"sup32", res.sup32},
                                    {"sup8", res.sup8},
                                    {"expected8", res.expected8},
                                    {"pass", res.pass}});
        summary["c06_optimality"] = {{"sup32", res.sup32}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_scalar_distance();
        write_report(out_path(opts, "c07_scalar_distance.json"), config,
                     nlohmann::json{{"grid_sup", res.grid_sup},
                                    {"analytic", res.analytic},
                                    {"pass", res.pass}});
        summary["c07_scalar_distance"] = {{"grid_sup", res.grid_sup}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_limsup_suite(seed);
        CsvTable bounded;
        bounded.header = {"label", "estimate"};
        for (const auto& r : res.bounded) bounded.rows.push_back({r.label, cell(r.estimate)});
        write_csv(out_path(opts, "c08_limsup_bounded.csv"), config, bounded);
        CsvTable diag;
        diag.header = {"label", "estimate"};
        for (const auto& r : res.diagonal) diag.rows.push_back({r.label, cell(r.estimate)});
        write_csv(out_path(opts, "c08_limsup_diag.csv"), config, diag);
        summary["c08_limsup"] = {{"pass", res.pass}};
    }
    {
        const auto res = suite::run_frequency_suite();
        CsvTable t;
        t.header = {"lambda", "norm_distance", "r", "laplace_rel_diff"};
        for (const auto& r : res.rows)
            t.rows.push_back({cell(r.lambda), cell(r.norm_distance), cell(res.r),
                              cell(r.laplace_rel_diff)});
        write_csv(out_path(opts, "c09_frequency.csv"), config, t);
        summary["c09_frequency"] = {{"r", res.r}, {"pass", res.pass}};
    }
    {
        const auto res = suite::run_cesaro_suite();
        CsvTable t;
        t.header = {"example", "t", "identity_residual", "inv_norm", "bound", "applicable"};
        for (const auto& r : res.rows)
            t.rows.push_back({r.example, cell(r.t), cell(r.identity_residual), cell(r.inv_norm),
                              cell(r.bound), cell(r.applicable)});
        write_csv(out_path(opts, "c10_cesaro.csv"), config, t);
        summary["c10_cesaro"] = {{"pass", res.pass}};
    }
    {
        const auto res = suite::run_extension_suite(seed);
        CsvTable norms;
        norms.header = {"base", "t", "materialized", "block_max", "diff"};
        for (const auto& r : res.norm_rows)
            norms.rows.push_back(
                {r.base, cell(r.t), cell(r.materialized), cell(r.block_max), cell(r.diff)});
        write_csv(out_path(opts, "c11_extension_norms.csv"), config, norms);
        CsvTable rec;
        rec.header = {"base", "block", "h", "err", "err_half", "ratio"};
        for (const auto& r : res.recovery_rows)
            rec.rows.push_back(
                {r.base, cell(r.block), cell(r.h), cell(r.err), cell(r.err_half), cell(r.ratio)});
        write_csv(out_path(opts, "c11_extension_recovery.csv"), config, rec);
        summary["c11_extension"] = {{"pass", res.pass}};
    }
    {
        const auto res = suite::run_region_suite(seed);
        write_report(out_path(opts, "c12_params.json"), config,
                     nlohmann::json{{"c", res.params.c},
                                    {"t0", res.params.t0},
                                    {"r_tilde", res.params.r_tilde},
                                    {"phi_c", res.params.phi_c},
                                    {"r_c", res.params.r_c},
                                    {"m_c", res.params.m_c},
                                    {"boundary_max", res.certificate.boundary_max},
                                    {"boundary_max_at_bump", res.cert_max_at_bump},
                                    {"threshold", res.certificate.threshold},
                                    {"sup_c", res.verification.sup_c},
                                    {"params_ok", res.params_ok},
                                    {"certificate_ok", res.certificate_ok}});
        CsvTable t;
        t.header = {"re_mu", "im_mu", "s_lambda", "resolvent_norm", "bound", "pass"};
        for (const auto& smp : res.verification.samples)
            t.rows.push_back({cell(smp.mu.real()), cell(smp.mu.imag()), cell(smp.s),
                              cell(smp.resolvent_norm), cell(smp.bound), cell(smp.pass)});
        write_csv(out_path(opts, "c12_region.csv"), config, t);
        summary["c12_region"] = {{"pass", res.pass}};
    }

    bool all_pass = true;
    for (const auto& [key, value] : summary.items())
        if (value.contains("pass")) all_pass = all_pass && value.at("pass").get<bool>();
    summary["all_pass"] = all_pass;
    write_report(out_path(opts, "summary.json"), config, std::move(summary));
    return all_pass ? 0 : 2;
}

}  // namespace coslab::cli
