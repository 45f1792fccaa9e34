#include "fgof/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fgof/errors.hpp"
#include "fgof/series.hpp"

namespace fgof {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Window occupancy spread beyond 3x means the evenly-scattered-design
// assumption behind the calibrated test is doubtful.
void add_design_warnings(Report& report, const GofOutcome& o) {
    if (o.window_min <= 0 || o.window_max > 3 * o.window_min)
        report.warnings.push_back(
            "irregular design: half-bandwidth window occupancy ranges from " +
            std::to_string(o.window_min) + " to " + std::to_string(o.window_max) +
            "; the calibrated test phi2 assumes evenly scattered points");
}

}  // namespace

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GOF_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            raise(Errc::invalid_spec, std::string("GOF_SEED is not an integer: ") + env);
        }
    }
    return 12345;
}

CmdResult cmd_test(const TestArgs& args) {
    const auto t0 = Clock::now();
    CmdResult result;
    result.report.command = "test";
    try {
        const LoadedSeries series = load_series_detail(args.data_path, args.config.h);
        const GofOutcome outcome = run_test(series.sample, args.config);
        result.report.gof = outcome;
        result.report.gof_config = args.config;
        if (series.skipped_count > 0)
            result.report.warnings.push_back(
                std::to_string(series.skipped_count) +
                " rows skipped; positions were assigned after dropping them");
        if (series.sample.dropped_last())
            result.report.warnings.push_back("last point dropped to keep the point count even");
        add_design_warnings(result.report, outcome);
        result.exit_code = (outcome.reject1 || outcome.reject2) ? 1 : 0;
    } catch (const Error& e) {
        result.exit_code = 2;
        result.error = e.what();
    }
    result.report.wall_ms = ms_since(t0);
    return result;
}

CmdResult cmd_calibrate_a1(const CalibrateArgs& args) {
    const auto t0 = Clock::now();
    CmdResult result;
    result.report.command = "calibrate-a1";
    try {
        result.report.a1 = estimate_a1(args.options);
        result.exit_code = 0;
    } catch (const Error& e) {
        result.exit_code = 2;
        result.error = e.what();
    }
    result.report.wall_ms = ms_since(t0);
    return result;
}

CmdResult cmd_experiment(const ExperimentArgs& args) {
    const auto t0 = Clock::now();
    CmdResult result;
    result.report.command = "experiment";
    try {
        ExperimentSpec spec = load_experiment_spec(args.spec_path);
        if (args.has_seed_override) spec.seed = args.seed_override;
        result.report.experiment = run_experiment(spec, args.workers);
        if (result.report.experiment->reps_failed > 0)
            result.report.warnings.push_back(
                std::to_string(result.report.experiment->reps_failed) +
                " replicates failed and are excluded from the rates");
        result.exit_code = 0;
    } catch (const Error& e) {
        result.exit_code = 2;
        result.error = e.what();
    }
    result.report.wall_ms = ms_since(t0);
    return result;
}

namespace {

void apply_key(ExperimentSpec& spec, const std::string& key, const std::string& value,
               bool& saw_seed) {
    auto as_int = [&](const char* what) {
        try {
            return std::stoi(value);
        } catch (...) {
            raise(Errc::invalid_spec, std::string(what) + " is not an integer: " + value);
        }
    };
    auto as_double = [&](const char* what) {
        try {
            return std::stod(value);
        } catch (...) {
            raise(Errc::invalid_spec, std::string(what) + " is not a number: " + value);
        }
    };

    if (key == "n") spec.n = as_int("n");
    else if (key == "h") spec.h = as_double("h");
    else if (key == "h1") spec.h1 = as_double("h1");
    else if (key == "k") spec.k = as_int("k");
    else if (key == "level") spec.level = as_double("level");
    else if (key == "gamma_mode") {
        if (value == "known") spec.gamma_mode = GammaMode::known;
        else if (value == "estimated") spec.gamma_mode = GammaMode::estimated;
        else raise(Errc::invalid_spec, "gamma_mode must be known or estimated, got " + value);
    } else if (key == "gamma") spec.known_gamma = as_double("gamma");
    else if (key == "truth") {
        if (value == "zero") spec.truth.kind = Truth::Kind::zero;
        else if (value == "sin") spec.truth.kind = Truth::Kind::sine;
        else if (value == "power") spec.truth.kind = Truth::Kind::power;
        else if (value == "neg_power") spec.truth.kind = Truth::Kind::neg_power;
        else raise(Errc::invalid_spec, "unknown truth " + value);
    } else if (key == "c") spec.truth.c = as_double("c");
    else if (key == "alpha") spec.truth.alpha = as_double("alpha");
    else if (key == "p") spec.truth.p = as_double("p");
    else if (key == "x0") spec.truth.x0 = as_double("x0");
    else if (key == "errors") {
        if (value == "uniform") spec.errors = ErrorLaw::uniform_unit;
        else if (value == "neg_exponential") spec.errors = ErrorLaw::neg_exponential;
        else raise(Errc::invalid_spec, "unknown error law " + value);
    } else if (key == "reps") spec.reps = as_int("reps");
    else if (key == "seed") {
        try {
            spec.seed = std::stoull(value);
        } catch (...) {
            raise(Errc::invalid_spec, "seed is not an integer: " + value);
        }
        saw_seed = true;
    } else if (key == "a1") spec.a1 = as_double("a1");
    else raise(Errc::invalid_spec, "unknown key '" + key + "'");
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentSpec parse_experiment_spec(const std::string& text) {
    ExperimentSpec spec;
    bool saw_seed = false;

    const std::string stripped = strip(text);
    if (!stripped.empty() && stripped.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(stripped);
        } catch (const nlohmann::json::exception& e) {
            raise(Errc::invalid_spec, e.what());
        }
        for (const auto& [key, value] : j.items()) {
            std::string v = value.is_string() ? value.get<std::string>() : value.dump();
            apply_key(spec, key, v, saw_seed);
        }
    } else {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            std::string line = raw;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            line = strip(line);
            if (line.empty()) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                raise(Errc::invalid_spec, "expected key=value, got '" + line + "'");
            apply_key(spec, strip(line.substr(0, eq)), strip(line.substr(eq + 1)), saw_seed);
        }
    }

    if (!saw_seed) spec.seed = default_seed();
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::invalid_spec, "cannot open spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_spec(buf.str());
}

}  // namespace fgof
