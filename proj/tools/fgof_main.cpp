#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fgof/cli.hpp"
#include "fgof/errors.hpp"

namespace {

void emit(const fgof::CmdResult& result, bool json) {
    if (result.exit_code == 2) {
        std::cerr << "error: " << result.error << '\n';
        return;
    }
    if (json)
        std::cout << fgof::to_json(result.report) << '\n';
    else
        std::cout << fgof::to_text(result.report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affinity test for the upper boundary of one-sided regression data"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help and exit");

    // test
    auto* test = app.add_subcommand("test", "Run both boundary-affinity tests on a data file");
    test->set_help_flag("--help", "print help and exit");
    fgof::TestArgs test_args;
    bool test_json = false;
    std::string cx_mode = "auto";
    double gamma_known = 0.0;
    test->add_option("--data", test_args.data_path, "two-column series file")->required();
    test->add_option("--h", test_args.config.h, "statistic bandwidth")->capture_default_str();
    test->add_option("--h1", test_args.config.h1, "residual bandwidth")->capture_default_str();
    test->add_option("--k", test_args.config.k, "tail order-statistic depth")
        ->capture_default_str();
    test->add_option("--level", test_args.config.level, "test level in (0,1)")
        ->capture_default_str();
    auto* gamma_opt = test->add_option("--gamma", gamma_known, "known tail scale (else estimated)");
    test->add_option("--a1", test_args.config.a1, "calibration constant")->capture_default_str();
    test->add_option("--cx", cx_mode, "design constant: auto or a number")
        ->capture_default_str();
    test->add_flag("--json", test_json, "machine-readable output");

    // calibrate-a1
    auto* cal = app.add_subcommand("calibrate-a1",
                                   "Estimate the calibration constant by Poisson simulation");
    cal->set_help_flag("--help", "print help and exit");
    fgof::CalibrateArgs cal_args;
    bool cal_json = false;
    long long cal_reps = 0;
    bool cal_has_seed = false;
    unsigned long long cal_seed = 0;
    cal->add_option("--reps", cal_reps, "number of replicates")->required();
    auto* cal_seed_opt = cal->add_option("--seed", cal_seed, "master seed");
    cal->add_option("--gamma", cal_args.options.gamma, "process intensity")
        ->capture_default_str();
    cal->add_option("--depth", cal_args.options.depth, "strip depth (default 20/gamma)");
    cal->add_option("--grid", cal_args.options.grid_n, "integration grid panels (even)")
        ->capture_default_str();
    cal->add_option("--threads", cal_args.options.workers, "worker threads (0 = all)");
    cal->add_flag("--json", cal_json, "machine-readable output");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a declarative rejection-rate experiment");
    exp->set_help_flag("--help", "print help and exit");
    fgof::ExperimentArgs exp_args;
    bool exp_json = false;
    unsigned long long exp_seed = 0;
    exp->add_option("--spec", exp_args.spec_path, "experiment spec file")->required();
    auto* exp_seed_opt = exp->add_option("--seed", exp_seed, "override the spec seed");
    exp->add_option("--threads", exp_args.workers, "worker threads (0 = all)");
    exp->add_flag("--json", exp_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*test) {
            if (*gamma_opt) test_args.config.gamma = gamma_known;
            if (cx_mode != "auto") {
                test_args.config.cx_policy = fgof::CxPolicy::fixed;
                try {
                    test_args.config.cx_value = std::stod(cx_mode);
                } catch (...) {
                    std::cerr << "error: --cx expects 'auto' or a number, got " << cx_mode
                              << '\n';
                    return 2;
                }
            }
            const fgof::CmdResult r = fgof::cmd_test(test_args);
            emit(r, test_json);
            return r.exit_code;
        }
        if (*cal) {
            if (cal_reps < 2) {
                std::cerr << "error: --reps must be at least 2\n";
                return 2;
            }
            cal_args.options.reps = static_cast<std::size_t>(cal_reps);
            cal_has_seed = static_cast<bool>(*cal_seed_opt);
            cal_args.options.seed = cal_has_seed ? cal_seed : fgof::default_seed();
            const fgof::CmdResult r = fgof::cmd_calibrate_a1(cal_args);
            emit(r, cal_json);
            return r.exit_code;
        }
        if (*exp) {
            if (*exp_seed_opt) {
                exp_args.has_seed_override = true;
                exp_args.seed_override = exp_seed;
            }
            const fgof::CmdResult r = fgof::cmd_experiment(exp_args);
            emit(r, exp_json);
            return r.exit_code;
        }
    } catch (const fgof::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
