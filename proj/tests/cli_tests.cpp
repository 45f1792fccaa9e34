// End-to-end checks of the command-line binary: exit-code contract, json
// output, seeding and determinism. Everything runs through popen on the built
// executable.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "fgof/report.hpp"
#include "fgof/rng.hpp"

namespace {

int g_failures = 0;

#define REQUIRE_MSG(cond, msg)                                                      \
    do {                                                                            \
        if (!(cond)) {                                                              \
            ++g_failures;                                                           \
            std::cerr << "FAIL " << __LINE__ << ": " << (msg) << "\n";              \
        }                                                                           \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(FGOF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult result{-1, {}};
    if (!pipe) return result;
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe)) result.out += buf;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_flat_series(const std::string& path, std::uint64_t seed) {
    fgof::Rng rng(seed);
    std::ofstream out(path);
    out << "year,value\n";
    for (int i = 0; i <= 140; ++i) {
        const double x = i / 100.0 - 0.2;
        out << (1900 + i) << "," << (1.0 + 2.0 * x - rng.uniform01()) << "\n";
    }
}

void write_curved_series(const std::string& path, std::uint64_t seed) {
    fgof::Rng rng(seed);
    std::ofstream out(path);
    for (int i = 0; i <= 140; ++i) {
        const double x = i / 100.0 - 0.2;
        out << (1900 + i) << "," << (2.0 * std::sin(2.0 * M_PI * x) - rng.uniform01()) << "\n";
    }
}

}  // namespace

int main() {
    // usage errors
    REQUIRE_MSG(run("test").exit_code == 2, "missing --data must exit 2");
    REQUIRE_MSG(run("test --data nosuchfile.csv").exit_code == 2, "unreadable data exits 2");
    REQUIRE_MSG(run("bogus-subcommand").exit_code == 2, "unknown subcommand exits 2");
    REQUIRE_MSG(run("test --data x --nonsense 1").exit_code == 2, "unknown flag exits 2");
    REQUIRE_MSG(run("calibrate-a1 --reps 0 --seed 1").exit_code == 2, "reps 0 exits 2");
    REQUIRE_MSG(run("--help").exit_code == 0, "help exits 0");

    // a null-like series: affine boundary, one-sided noise
    write_flat_series("cli_flat.tmp", 2025);
    {
        const RunResult r = run("test --data cli_flat.tmp --h 0.2 --h1 0.2 --k 20 --level 0.01");
        REQUIRE_MSG(r.exit_code == 0, "affine data accepted, exit 0 (got " +
                                          std::to_string(r.exit_code) + ")");
        REQUIRE_MSG(r.out.find("reject2") != std::string::npos, "human output lists decisions");
    }

    // a strongly curved boundary must be rejected
    write_curved_series("cli_curved.tmp", 2025);
    {
        const RunResult r = run("test --data cli_curved.tmp --json");
        REQUIRE_MSG(r.exit_code == 1, "curved data rejected, exit 1 (got " +
                                          std::to_string(r.exit_code) + ")");
        const fgof::Report report = fgof::report_from_json(r.out);
        REQUIRE_MSG(report.command == "test", "command echo");
        REQUIRE_MSG(report.gof.has_value(), "payload present");
        REQUIRE_MSG(report.gof->reject2, "calibrated test rejects");
        // serialize-parse closes the loop
        REQUIRE_MSG(fgof::report_from_json(fgof::to_json(report)) == report, "round trip");
    }

    // fixed design constant
    {
        const RunResult r = run("test --data cli_curved.tmp --cx 0.5 --json");
        const fgof::Report report = fgof::report_from_json(r.out);
        REQUIRE_MSG(report.gof->cx == 0.5, "fixed cx honoured");
        REQUIRE_MSG(run("test --data cli_curved.tmp --cx wat").exit_code == 2, "bad cx exits 2");
    }

    // unevenly scattered labels trip the design warning
    {
        fgof::Rng rng(77);
        std::ofstream out("cli_sparse.tmp");
        int label = 0;
        for (int i = 0; i <= 140; ++i) {
            // long label gaps through the middle make window occupancy uneven
            label += (i > 40 && i < 70) ? 11 : 1;
            out << label << "," << (1.0 - rng.uniform01()) << "\n";
        }
        out.close();
        const RunResult r = run("test --data cli_sparse.tmp --gamma 1 --json");
        REQUIRE_MSG(r.exit_code != 2, "sparse series still runs");
        const fgof::Report report = fgof::report_from_json(r.out);
        bool warned = false;
        for (const std::string& w : report.warnings)
            if (w.find("irregular design") != std::string::npos) warned = true;
        REQUIRE_MSG(warned, "irregular design warning raised");
        std::remove("cli_sparse.tmp");
    }

    // calibration: determinism across runs and thread counts
    {
        const RunResult a = run("calibrate-a1 --reps 60 --seed 7 --grid 128 --json");
        const RunResult b = run("calibrate-a1 --reps 60 --seed 7 --grid 128 --json");
        const RunResult c =
            run("calibrate-a1 --reps 60 --seed 7 --grid 128 --threads 3 --json");
        REQUIRE_MSG(a.exit_code == 0, "calibration exits 0");
        const fgof::Report ra = fgof::report_from_json(a.out);
        const fgof::Report rb = fgof::report_from_json(b.out);
        const fgof::Report rc = fgof::report_from_json(c.out);
        REQUIRE_MSG(ra.a1->value == rb.a1->value, "same seed, same value");
        REQUIRE_MSG(ra.a1->value == rc.a1->value, "worker count does not matter");
        const RunResult d = run("calibrate-a1 --reps 60 --seed 8 --grid 128 --json");
        REQUIRE_MSG(fgof::report_from_json(d.out).a1->value != ra.a1->value,
                    "different seed, different value");
    }

    // experiments: spec file, seed override, env default
    {
        std::ofstream spec("cli_exp.tmp");
        spec << "n = 60\nreps = 30\ntruth = sin\nc = 0.5\nalpha = 2\nseed = 5\n";
        spec.close();
        const RunResult a = run("experiment --spec cli_exp.tmp --json");
        REQUIRE_MSG(a.exit_code == 0, "experiment exits 0");
        const fgof::Report ra = fgof::report_from_json(a.out);
        REQUIRE_MSG(ra.experiment.has_value(), "experiment payload");
        REQUIRE_MSG(ra.experiment->spec.seed == 5, "spec seed used");
        REQUIRE_MSG(ra.experiment->reps_done + ra.experiment->reps_failed == 30, "rep count");

        const RunResult b = run("experiment --spec cli_exp.tmp --seed 77 --json");
        REQUIRE_MSG(fgof::report_from_json(b.out).experiment->spec.seed == 77, "seed override");

        const RunResult c = run("experiment --spec cli_exp.tmp --threads 3 --json");
        REQUIRE_MSG(fgof::report_from_json(c.out).experiment->rate_phi2 ==
                        ra.experiment->rate_phi2,
                    "experiment worker independence");

        std::ofstream spec2("cli_exp2.tmp");
        spec2 << "n = 60\nreps = 5\n";
        spec2.close();
        const RunResult d = run("experiment --spec cli_exp2.tmp --json", "GOF_SEED=123");
        REQUIRE_MSG(fgof::report_from_json(d.out).experiment->spec.seed == 123,
                    "env seed fallback");

        const RunResult e = run("experiment --spec nosuch.spec");
        REQUIRE_MSG(e.exit_code == 2, "missing spec file exits 2");
    }

    std::remove("cli_flat.tmp");
    std::remove("cli_curved.tmp");
    std::remove("cli_exp.tmp");
    std::remove("cli_exp2.tmp");

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << g_failures << " failures\n";
    return 1;
}
