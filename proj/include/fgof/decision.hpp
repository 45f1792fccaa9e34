#pragma once

#include <optional>

#include "fgof/sample.hpp"
#include "fgof/statistic.hpp"

namespace fgof {

// Standard normal quantile, accurate so that |Phi(result) - q| <= 1e-12.
double normal_quantile(double q);
// Standard normal CDF via the complementary error function.
double normal_cdf(double x);

struct TestDecision {
    double crit;
    bool reject;
    double p;
};

// Conservative test: critical value from the elementary variance bound
// 8 / cx^3 * n^-2 h^-3 gamma^-4. One-sided, rejects for large t.
TestDecision phi1(double t, double n, double h, double gamma_used, double cx, double level);

// Calibrated test: same shape with the simulated limit constant a1 in place of
// the bound.
TestDecision phi2(double t, double n, double h, double gamma_used, double a1, double level);

enum class CxPolicy { automatic, fixed };

struct GofConfig {
    double h = 0.2;
    double h1 = 0.2;
    int k = 20;
    double level = 0.05;
    std::optional<double> gamma;  // known tail scale; estimated when absent
    double a1 = 13.7;
    CxPolicy cx_policy = CxPolicy::automatic;
    double cx_value = 0.0;  // used when cx_policy == fixed
};

struct GofOutcome {
    double t = 0;
    double gamma_used = 0;
    double cx = 0;
    double crit1 = 0, crit2 = 0;
    bool reject1 = false, reject2 = false;
    double p1 = 0, p2 = 0;
    StatBreakdown breakdown{};
    int n_used = 0;         // sample size entering the critical values
    int n_stat = 0;         // statistic-eligible point count
    int window_min = 0;     // half-bandwidth window occupancy extremes,
    int window_max = 0;     // for the design-regularity warning
};

// Full pipeline: residuals at bandwidth h1 -> tail scale -> boundary fit at the
// statistic points (bandwidth h) -> statistic -> design constant -> both tests.
// The tail estimate reads the order statistics of the nonzero residuals only:
// support points sit on the fitted boundary by construction and would flood
// the top ranks with exact zeros. Stage failures carry the stage name in the
// message.
GofOutcome run_test(const Sample& sample, const GofConfig& config);

}  // namespace fgof
