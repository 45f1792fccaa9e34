#pragma once

#include <cstdint>
#include <vector>

#include "fgof/decision.hpp"
#include "fgof/rng.hpp"

namespace fgof {

enum class ErrorLaw { uniform_unit, neg_exponential };
enum class GammaMode { known, estimated };

struct Truth {
    enum class Kind { zero, sine, power, neg_power };
    Kind kind = Kind::zero;
    double c = 0.0;
    double alpha = 0.0;  // sine frequency multiplier
    double p = 0.0;      // power exponent
    double x0 = 0.0;     // power offset
};

double truth_eval(const Truth& truth, double x);

// Design -h, -h + 1/n, ... up to 1 + h; points inside [0,1] are
// statistic-eligible.
std::vector<double> gen_design(int n, double h);

// i.i.d. draws, all <= 0; both laws have unit tail scale at the origin.
std::vector<double> gen_errors(ErrorLaw law, std::size_t count, Rng& rng);

struct ExperimentSpec {
    int n = 100;
    double h = 0.2;
    double h1 = 0.2;
    int k = 20;
    double level = 0.05;
    GammaMode gamma_mode = GammaMode::estimated;
    double known_gamma = 1.0;
    Truth truth;
    ErrorLaw errors = ErrorLaw::uniform_unit;
    int reps = 1000;
    std::uint64_t seed = 0;
    double a1 = 13.7;
};

struct ExperimentReport {
    double rate_phi1 = 0;
    double rate_phi2 = 0;
    int reps_done = 0;
    int reps_failed = 0;
    double ci3_phi1 = 0;  // 3 * sqrt(p(1-p)/reps_done)
    double ci3_phi2 = 0;
    ExperimentSpec spec;
};

// One replicate of the experiment, usable directly for per-replicate
// invariance checks.
GofOutcome run_replicate(const ExperimentSpec& spec, std::uint64_t rep_index);

// Rejection rates over seeded replicates; estimator failures are counted, not
// folded into the denominator. Bit-identical for any worker count.
ExperimentReport run_experiment(const ExperimentSpec& spec, unsigned workers = 0);

}  // namespace fgof
