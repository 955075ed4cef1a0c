#pragma once

#include <string>

#include "sbvp/config.hpp"

namespace sbvp {

/// Run one configured scenario: writes manifest.txt, <scenario>.csv and
/// optional <scenario>.svg under output_dir. Returns 0 on success, 2 when
/// assert_mode is on and the scenario's documented pass condition failed.
/// Throws std::runtime_error on I/O failures.
int run_experiment(const ExperimentConfig& config);

/// Config text -> validation -> run. Returns 0/2 as above, 1 on config
/// errors (violations written to `messages`, one per line).
int run_from_text(const std::string& config_text, std::string& messages);

}  // namespace sbvp
