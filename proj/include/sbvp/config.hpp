#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace sbvp {

enum class Scenario {
    solve,
    linear_sweep,
    girsanov_check,
    det2_compare,
    alpha_table,
    condition_check,
    exp_moment,
    resonance_variance,
};

std::string scenario_name(Scenario s);

struct ExperimentConfig {
    Scenario scenario = Scenario::solve;
    int n = 512;
    long paths = 10000;
    std::uint64_t seed = 20240901;
    std::string f_name = "zero";
    std::vector<double> f_params;
    double tol = 1e-8;
    int max_iter = 200;
    std::string output_dir = "out";
    bool assert_mode = false;
    std::vector<std::string> warnings;  // e.g. defaulted seed
};

/// Parse "key=value" lines; '#' starts a comment. Later keys override.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Typed config or the full list of violations (not just the first).
std::variant<ExperimentConfig, std::vector<std::string>> validate_config(
    const std::map<std::string, std::string>& raw);

}  // namespace sbvp
