#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cva/model.hpp"

// flat key = value configuration files. keys are named exactly after the
// parameter fields (s0, v0, r, eta, kappa, theta, sigma, rho, lambda, alpha,
// beta2, kind, exercise, strike, maturity, delta, recovery, label, n_time,
// n_y, n_paths, y_halfwidth_sds, jump_trunc_sds, seed, methods).
// '#' starts a comment; blank lines are ignored. parse errors name the
// offending key.

namespace cva {

enum class Method { c_htfd, htfd_htmc };

std::string to_string(Method m);                 // "c-htfd" / "htfd-htmc"
std::optional<Method> method_from_string(const std::string& s);

// resolution presets for the benchmark battery; the hybrid methods share
// (n_time, n_y), only the MC estimator uses n_paths.
struct LabelPreset {
    int n_time;
    int n_y;
    int n_paths;
};
std::optional<LabelPreset> label_preset(const std::string& label);
std::vector<std::string> battery_labels();  // {"A", "B", "C", "D"}

struct RunConfig {
    std::string label = "custom";  // A|B|C|D|custom
    BatesParams params;
    OptionSpec option;
    DefaultModel credit;
    NumericsConfig numerics;
    std::vector<Method> methods;

    bool operator==(const RunConfig&) const = default;
    void validate() const;
};

// throws std::invalid_argument naming the offending key on malformed input
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

std::string serialize_config(const RunConfig& cfg);

// scenario written by the `init` subcommand
RunConfig default_config();

}  // namespace cva
