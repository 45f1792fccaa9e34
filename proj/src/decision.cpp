#include "fgof/decision.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fgof/errors.hpp"
#include "fgof/frontier.hpp"
#include "fgof/tail.hpp"

namespace fgof {

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

namespace {

// Rational initial guess (Acklam), then one Halley step against the erfc-based
// CDF, which lands within a few ulp.
double quantile_guess(double q) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    if (q < p_low) {
        const double u = std::sqrt(-2.0 * std::log(q));
        return (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    if (q > 1.0 - p_low) {
        const double u = std::sqrt(-2.0 * std::log(1.0 - q));
        return -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    const double u = q - 0.5;
    const double r = u * u;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

constexpr double kSqrt2Pi = 2.5066282746310002;

}  // namespace

double normal_quantile(double q) {
    if (!(q > 0.0 && q < 1.0)) raise(Errc::domain_error, "quantile level must lie in (0,1)");
    if (q == 0.5) return 0.0;
    // the CDF is relatively accurate only in the lower tail, so reflect
    if (q > 0.5) return -normal_quantile(1.0 - q);
    double z = quantile_guess(q);
    for (int iter = 0; iter < 2; ++iter) {
        const double err = normal_cdf(z) - q;
        const double u = err * kSqrt2Pi * std::exp(z * z / 2.0);
        z -= u / (1.0 + z * u / 2.0);
    }
    return z;
}

namespace {

TestDecision decide(double t, double n, double h, double gamma_used, double variance_const,
                    double level) {
    if (n <= 0.0 || h <= 0.0 || gamma_used <= 0.0 || variance_const <= 0.0)
        raise(Errc::domain_error, "scale inputs must be > 0");
    if (!(level > 0.0 && level < 1.0)) raise(Errc::domain_error, "level must lie in (0,1)");

    // scale = sqrt(const * n^-2 h^-3) / gamma^2, so rescaling gamma by a
    // power of two rescales the critical value exactly
    const double base = std::sqrt(variance_const / (n * n * h * h * h));
    const double scale = base / (gamma_used * gamma_used);
    const double crit = normal_quantile(1.0 - level) * scale;
    const double p = 0.5 * std::erfc(t / scale * M_SQRT1_2);
    return TestDecision{crit, t >= crit, p};
}

}  // namespace

TestDecision phi1(double t, double n, double h, double gamma_used, double cx, double level) {
    if (cx <= 0.0) raise(Errc::domain_error, "cx must be > 0");
    return decide(t, n, h, gamma_used, 8.0 / (cx * cx * cx), level);
}

TestDecision phi2(double t, double n, double h, double gamma_used, double a1, double level) {
    if (a1 <= 0.0) raise(Errc::domain_error, "a1 must be > 0");
    return decide(t, n, h, gamma_used, a1, level);
}

namespace {

[[noreturn]] void rethrow_staged(const char* stage, const Error& e) {
    throw Error(e.code(), std::string("stage ") + stage + ": " + e.what());
}

}  // namespace

GofOutcome run_test(const Sample& sample, const GofConfig& config) {
    if (config.h <= 0.0 || config.h1 <= 0.0) raise(Errc::domain_error, "bandwidths must be > 0");
    if (!(config.level > 0.0 && config.level < 1.0))
        raise(Errc::domain_error, "level must lie in (0,1)");
    if (config.a1 <= 0.0) raise(Errc::domain_error, "a1 must be > 0");
    if (config.k < 1) raise(Errc::domain_error, "k must be >= 1");

    GofOutcome out;
    out.n_stat = sample.n_stat();
    out.n_used = 2 * static_cast<int>(sample.odd_stat_points().size());

    std::vector<double> residuals;
    try {
        residuals = residuals_even(sample, config.h1);
    } catch (const Error& e) {
        rethrow_staged("residuals", e);
    }

    try {
        // Support points sit exactly on the fitted boundary; their zero
        // residuals are pinned by the construction and say nothing about the
        // error tail, so they are dropped before the order statistics.
        std::vector<double> informative;
        informative.reserve(residuals.size());
        for (double r : residuals)
            if (r != 0.0) informative.push_back(r);
        if (!config.gamma && informative.size() <= static_cast<std::size_t>(config.k))
            raise(Errc::zero_denominator,
                  "residuals are dominated by exact support zeros (" +
                      std::to_string(residuals.size() - informative.size()) + " of " +
                      std::to_string(residuals.size()) + "); supply gamma explicitly");
        out.gamma_used = resolve_gamma(config.gamma, informative, config.k);
    } catch (const Error& e) {
        rethrow_staged("gamma", e);
    }

    try {
        out.breakdown = t_statistic(sample, config.h, out.gamma_used);
        out.t = out.breakdown.t;
    } catch (const Error& e) {
        rethrow_staged("statistic", e);
    }

    try {
        std::vector<double> all_xs(sample.size());
        for (std::size_t i = 0; i < sample.size(); ++i) all_xs[i] = sample.points()[i].x;
        const CxSweep sweep = c_x_sweep(all_xs, config.h);
        out.window_min = sweep.min_count;
        out.window_max = sweep.max_count;
        out.cx = config.cx_policy == CxPolicy::fixed ? config.cx_value : sweep.cx;
    } catch (const Error& e) {
        rethrow_staged("cx", e);
    }

    try {
        const TestDecision d1 =
            phi1(out.t, out.n_used, config.h, out.gamma_used, out.cx, config.level);
        out.crit1 = d1.crit;
        out.reject1 = d1.reject;
        out.p1 = d1.p;
        const TestDecision d2 =
            phi2(out.t, out.n_used, config.h, out.gamma_used, config.a1, config.level);
        out.crit2 = d2.crit;
        out.reject2 = d2.reject;
        out.p2 = d2.p;
    } catch (const Error& e) {
        rethrow_staged("decision", e);
    }

    return out;
}

}  // namespace fgof
