#include "fgof/sims.hpp"

#include <cmath>
#include <string>

#include "fgof/errors.hpp"
#include "fgof/parallel.hpp"

namespace fgof {

double truth_eval(const Truth& truth, double x) {
    switch (truth.kind) {
        case Truth::Kind::zero: return 0.0;
        case Truth::Kind::sine: return truth.c * std::sin(truth.alpha * M_PI * x);
        case Truth::Kind::power: return truth.c * std::pow(x - truth.x0, truth.p);
        case Truth::Kind::neg_power: return -truth.c * std::pow(x - truth.x0, truth.p);
    }
    return 0.0;
}

std::vector<double> gen_design(int n, double h) {
    if (n < 1) raise(Errc::invalid_spec, "n must be >= 1");
    if (h <= 0.0) raise(Errc::invalid_spec, "h must be > 0");
    const int count = static_cast<int>(std::floor(n * (1.0 + 2.0 * h) + 1e-9)) + 1;
    std::vector<double> xs(count);
    for (int j = 0; j < count; ++j) xs[j] = static_cast<double>(j) / n - h;
    return xs;
}

std::vector<double> gen_errors(ErrorLaw law, std::size_t count, Rng& rng) {
    std::vector<double> out(count);
    switch (law) {
        case ErrorLaw::uniform_unit:
            for (auto& e : out) e = -rng.uniform01();
            break;
        case ErrorLaw::neg_exponential:
            for (auto& e : out) e = -rng.exponential();
            break;
    }
    return out;
}

namespace {

void validate(const ExperimentSpec& spec) {
    if (spec.reps < 1) raise(Errc::invalid_spec, "reps must be >= 1");
    if (spec.n < 4) raise(Errc::invalid_spec, "n must be >= 4");
    if (spec.h <= 0.0 || spec.h1 <= 0.0) raise(Errc::invalid_spec, "bandwidths must be > 0");
    if (!(spec.level > 0.0 && spec.level < 1.0))
        raise(Errc::invalid_spec, "level must lie in (0,1)");
    if (spec.gamma_mode == GammaMode::estimated && 2 * spec.k >= spec.n)
        raise(Errc::invalid_spec,
              "estimated tail scale needs k < n/2, got k=" + std::to_string(spec.k));
    if (spec.gamma_mode == GammaMode::known && spec.known_gamma <= 0.0)
        raise(Errc::invalid_spec, "known gamma must be > 0");
}

GofConfig config_of(const ExperimentSpec& spec) {
    GofConfig cfg;
    cfg.h = spec.h;
    cfg.h1 = spec.h1;
    cfg.k = spec.k;
    cfg.level = spec.level;
    if (spec.gamma_mode == GammaMode::known) cfg.gamma = spec.known_gamma;
    cfg.a1 = spec.a1;
    cfg.cx_policy = CxPolicy::automatic;
    return cfg;
}

}  // namespace

GofOutcome run_replicate(const ExperimentSpec& spec, std::uint64_t rep_index) {
    validate(spec);
    Rng rng(mix_seed(spec.seed, rep_index));
    const std::vector<double> xs = gen_design(spec.n, spec.h);
    const std::vector<double> errors = gen_errors(spec.errors, xs.size(), rng);

    std::vector<SamplePoint> pts(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        pts[i] = {xs[i], truth_eval(spec.truth, xs[i]) + errors[i]};

    return run_test(Sample::from_points(std::move(pts)), config_of(spec));
}

ExperimentReport run_experiment(const ExperimentSpec& spec, unsigned workers) {
    validate(spec);

    enum : std::uint8_t { kFailed = 0xff };
    std::vector<std::uint8_t> outcome(spec.reps, 0);

    parallel_for(spec.reps, workers, [&](std::size_t rep) {
        try {
            const GofOutcome o = run_replicate(spec, rep);
            outcome[rep] =
                static_cast<std::uint8_t>((o.reject1 ? 1 : 0) | (o.reject2 ? 2 : 0));
        } catch (const Error&) {
            outcome[rep] = kFailed;
        }
    });

    ExperimentReport report;
    report.spec = spec;
    int hits1 = 0, hits2 = 0;
    for (std::uint8_t o : outcome) {
        if (o == kFailed) {
            ++report.reps_failed;
            continue;
        }
        ++report.reps_done;
        if (o & 1) ++hits1;
        if (o & 2) ++hits2;
    }
    if (report.reps_done > 0) {
        report.rate_phi1 = static_cast<double>(hits1) / report.reps_done;
        report.rate_phi2 = static_cast<double>(hits2) / report.reps_done;
        report.ci3_phi1 =
            3.0 * std::sqrt(report.rate_phi1 * (1.0 - report.rate_phi1) / report.reps_done);
        report.ci3_phi2 =
            3.0 * std::sqrt(report.rate_phi2 * (1.0 - report.rate_phi2) / report.reps_done);
    }
    return report;
}

}  // namespace fgof
