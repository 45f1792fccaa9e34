#pragma once

#include <string>

#include "fgof/report.hpp"

namespace fgof {

struct CmdResult {
    int exit_code;  // 0 ok / no rejection, 1 rejection (test only), 2 error
    Report report;
    std::string error;  // set when exit_code == 2
};

struct TestArgs {
    std::string data_path;
    GofConfig config;
};

struct CalibrateArgs {
    A1Options options;
};

struct ExperimentArgs {
    std::string spec_path;
    unsigned workers = 0;
    bool has_seed_override = false;
    std::uint64_t seed_override = 0;
};

CmdResult cmd_test(const TestArgs& args);
CmdResult cmd_calibrate_a1(const CalibrateArgs& args);
CmdResult cmd_experiment(const ExperimentArgs& args);

// Experiment description, either a flat JSON object or key=value lines with
// '#' comments. Unknown keys are rejected.
ExperimentSpec parse_experiment_spec(const std::string& text);
ExperimentSpec load_experiment_spec(const std::string& path);

// Default seed when a command does not receive one explicitly.
std::uint64_t default_seed();

}  // namespace fgof
