#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "coslab/error.hpp"

namespace {

// Collects only the flags the user actually set, so config-file values are not
// clobbered by defaults.
struct FlagSet {
    CLI::App* cmd = nullptr;
    nlohmann::json overrides;

    void add_string(const char* flag, const char* key, const char* desc) {
        auto* opt = cmd->add_option_function<std::string>(
            flag, [this, key](const std::string& v) { overrides[key] = v; }, desc);
        opt->expected(1);
    }
    void add_double(const char* flag, const char* key, const char* desc) {
        cmd->add_option_function<double>(
            flag, [this, key](double v) { overrides[key] = v; }, desc);
    }
    void add_int(const char* flag, const char* key, const char* desc) {
        cmd->add_option_function<int>(flag, [this, key](int v) { overrides[key] = v; }, desc);
    }
    void add_seed() {
        cmd->add_option_function<std::uint64_t>(
            "--seed", [this](std::uint64_t v) { overrides["seed"] = v; },
            "seed for randomized sampling (default 42)");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coslab: cosine-family and semigroup numerical laboratory"};
    app.require_subcommand(1);

    coslab::cli::CommonOpts common;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", common.config_path, "JSON config; flags override its fields");
        cmd->add_option("--out", common.out_dir, "output directory (default .)");
    };

    FlagSet profile;
    profile.cmd = app.add_subcommand("profile", "norm profile t -> ||F(t)-I|| plus law verdict");
    add_common(profile.cmd);
    profile.add_string("--generator", "generator", "path to generator matrix JSON");
    profile.add_string("--example", "example", "builtin generator (zero:N, scalar:X, nilpotent, diag:N)");
    profile.add_string("--kind", "kind", "cosine | semigroup");
    profile.add_string("--law", "law",
                       "zero-two-local | zero-two-global | zero-one-global | scalar-distance");
    profile.add_double("--margin", "margin", "classifier margin below the threshold");
    profile.add_double("--scalar-a", "scalar_a", "frequency of the scalar comparison family");
    profile.add_seed();

    FlagSet dal;
    dal.cmd = app.add_subcommand("dalembert", "d'Alembert residual over a (t,s) grid");
    add_common(dal.cmd);
    dal.add_string("--generator", "generator", "path to generator matrix JSON");
    dal.add_string("--example", "example", "builtin generator spec");
    dal.add_double("--t-max", "t_max", "grid upper limit");
    dal.add_int("--points", "points", "grid points per axis");
    dal.add_double("--tol", "tol", "residual tolerance");
    dal.add_seed();

    FlagSet res;
    res.cmd = app.add_subcommand("resolvent", "S(lambda,s) resolvent sweep with oracle checks");
    add_common(res.cmd);
    res.add_string("--generator", "generator", "path to generator matrix JSON");
    res.add_string("--example", "example", "builtin generator spec");
    res.add_double("--identity-tol", "identity_tol", "identity residual tolerance");
    res.add_double("--oracle-tol", "oracle_tol", "direct-solve match tolerance");
    res.add_seed();

    FlagSet reg;
    reg.cmd = app.add_subcommand("region", "spectral region parameters and bound verification");
    add_common(reg.cmd);
    reg.add_string("--generator", "generator", "path to generator matrix JSON");
    reg.add_string("--example", "example", "builtin generator spec");
    reg.add_double("--c", "c", "norm-distance level c in (0,2)");
    reg.add_double("--t0", "t0", "hypothesis window [0, t0)");
    reg.add_int("--count", "count", "number of sampled mu");
    reg.add_double("--radius-cap-factor", "radius_cap_factor", "|lambda| cap as a multiple of r_c");
    reg.add_seed();

    FlagSet sgl;
    sgl.cmd = app.add_subcommand("semigroup-laws", "Laplace and Cesaro checks for a semigroup");
    add_common(sgl.cmd);
    sgl.add_string("--generator", "generator", "path to generator matrix JSON");
    sgl.add_string("--example", "example", "builtin generator spec");
    sgl.add_double("--sup-horizon", "sup_horizon", "horizon for the grid sup of ||T(s)-I||");
    sgl.add_int("--sup-samples", "sup_samples", "samples for the grid sup");
    sgl.add_seed();

    FlagSet rep;
    rep.cmd = app.add_subcommand("reproduce", "regenerate the bundled verification suite");
    add_common(rep.cmd);
    rep.add_seed();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (profile.cmd->parsed()) return coslab::cli::run_profile(common, profile.overrides);
        if (dal.cmd->parsed()) return coslab::cli::run_dalembert(common, dal.overrides);
        if (res.cmd->parsed()) return coslab::cli::run_resolvent(common, res.overrides);
        if (reg.cmd->parsed()) return coslab::cli::run_region(common, reg.overrides);
        if (sgl.cmd->parsed()) return coslab::cli::run_semigroup_laws(common, sgl.overrides);
        if (rep.cmd->parsed()) return coslab::cli::run_reproduce(common, rep.overrides);
    } catch (const coslab::invalid_input& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const coslab::precondition_violation& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const coslab::degenerate_region& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const coslab::not_in_resolvent_set& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const coslab::range_overflow& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const coslab::error& e) {
        std::fprintf(stderr, "computation failed: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "computation failed: %s\n", e.what());
        return 2;
    }
    return 1;
}
