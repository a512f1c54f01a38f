#pragma once

#include <string>

#include <json.hpp>

namespace coslab::cli {

struct CommonOpts {
    std::string config_path;  // optional JSON config, merged under the defaults
    std::string out_dir = ".";
};

// Each runner merges defaults <- config file <- flag overrides, writes its
// report files into out_dir, and returns the process exit code: 0 when every
// asserted contract passed, 2 on a contract violation. Input problems are
// thrown and mapped to exit 1 by main.
int run_profile(const CommonOpts& opts, const nlohmann::json& overrides);
int run_dalembert(const CommonOpts& opts, const nlohmann::json& overrides);
int run_resolvent(const CommonOpts& opts, const nlohmann::json& overrides);
int run_region(const CommonOpts& opts, const nlohmann::json& overrides);
int run_semigroup_laws(const CommonOpts& opts, const nlohmann::json& overrides);
int run_reproduce(const CommonOpts& opts, const nlohmann::json& overrides);

// Shared helpers (defined in commands.cpp, used by reproduce.cpp too).
nlohmann::json effective_config(nlohmann::json defaults, const CommonOpts& opts,
                                const nlohmann::json& overrides);
std::string out_path(const CommonOpts& opts, const std::string& name);

}  // namespace coslab::cli
