#include "fgof/statistic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fgof/errors.hpp"
#include "fgof/frontier.hpp"

namespace fgof {

DesignSums design_sums(std::span<const double> odd_xs) {
    if (odd_xs.empty()) raise(Errc::degenerate_design, "empty statistic design");
    long double r = 0.0L, s = 0.0L;
    for (double x : odd_xs) {
        r += static_cast<long double>(x) * x;
        s += x;
    }
    const int m = static_cast<int>(odd_xs.size());
    const double rd = static_cast<double>(r);
    const double sd = static_cast<double>(s);
    const double denom = static_cast<double>(r * m - s * s);
    if (denom <= 0.0) raise(Errc::degenerate_design, "statistic abscissae have zero spread");
    return DesignSums{rd, sd, m, denom};
}

double t1(std::span<const double> ghat_odd, std::span<const double> odd_xs, double f_slope,
          double f_intercept) {
    if (ghat_odd.size() != odd_xs.size())
        raise(Errc::length_mismatch, "boundary values and abscissae differ in length");
    if (ghat_odd.size() < 3) raise(Errc::degenerate_design, "need at least 3 statistic points");

    const DesignSums ds = design_sums(odd_xs);
    const int m = ds.m;
    const double n = 2.0 * m;
    const double x_bar = ds.s / m;

    long double sq = 0.0L, lin = 0.0L, proj = 0.0L;
    for (int i = 0; i < m; ++i) {
        const long double d = ghat_odd[i] - (f_slope * odd_xs[i] + f_intercept);
        sq += d * d;
        lin += d;
        proj += d * (odd_xs[i] - x_bar);
    }
    return static_cast<double>(sq - (2.0L / n) * lin * lin - (m * proj * proj) / ds.denom);
}

namespace {

StatBreakdown assemble(const Sample& sample, double h, double gamma_prime, double f_slope,
                       double f_intercept, bool with_f) {
    if (gamma_prime <= 0.0) raise(Errc::domain_error, "gamma must be > 0");

    const std::vector<SamplePoint> odd = sample.odd_stat_points();
    std::vector<double> odd_xs(odd.size());
    for (std::size_t i = 0; i < odd.size(); ++i) odd_xs[i] = odd[i].x;

    const DesignSums ds = design_sums(odd_xs);
    const int m = ds.m;
    const double n = 2.0 * m;
    const double x_bar = ds.s / m;

    const FrontierFit fit = fit_grid(sample, odd_xs, h);

    long double sum_sq = 0.0L;       // boundary (minus reference) squared
    long double exceed = 0.0L;       // responses (minus reference) above the boundary
    long double center = 0.0L;       // boundary plus indicator mass (minus reference)
    long double proj = 0.0L;         // same, projected on centred abscissae
    long double t1_lin = 0.0L, t1_proj = 0.0L, t1_sq = 0.0L;
    int fired = 0;

    for (int i = 0; i < m; ++i) {
        const double g = fit.values[i];
        const double y = odd[i].y;
        const double f = with_f ? f_slope * odd_xs[i] + f_intercept : 0.0;
        const bool hit = y >= g;
        if (hit) ++fired;

        const long double gf = g - f;
        sum_sq += gf * gf;
        if (hit) exceed += y - f;
        const long double w = gf + (hit ? 1.0L / gamma_prime : 0.0L);
        center += w;
        proj += w * (odd_xs[i] - x_bar);

        t1_sq += gf * gf;
        t1_lin += gf;
        t1_proj += gf * (odd_xs[i] - x_bar);
    }

    const long double s1 = sum_sq + (2.0L / gamma_prime) * exceed;
    const long double s2 = (2.0L / n) * center * center;
    const long double s3 = (m * proj * proj) / ds.denom;

    StatBreakdown out;
    out.t = static_cast<double>(s1 - s2 - s3);
    out.t1 = static_cast<double>(t1_sq - (2.0L / n) * t1_lin * t1_lin -
                                 (m * t1_proj * t1_proj) / ds.denom);
    out.s1 = static_cast<double>(s1);
    out.s2 = static_cast<double>(s2);
    out.s3 = static_cast<double>(s3);
    out.gamma_used = gamma_prime;
    out.sum_sq = static_cast<double>(sum_sq);
    out.correction_count = fired;
    return out;
}

}  // namespace

StatBreakdown t_statistic(const Sample& sample, double h, double gamma_prime) {
    return assemble(sample, h, gamma_prime, 0.0, 0.0, false);
}

double t_f(const Sample& sample, double h, double gamma_prime, double f_slope,
           double f_intercept) {
    return assemble(sample, h, gamma_prime, f_slope, f_intercept, true).t;
}

CxSweep c_x_sweep(std::span<const double> all_xs, double h) {
    if (all_xs.empty()) raise(Errc::empty_design, "no design points");
    if (h <= 0.0) raise(Errc::domain_error, "bandwidth must be > 0");

    std::vector<double> xs(all_xs.begin(), all_xs.end());
    std::sort(xs.begin(), xs.end());

    int n_stat = 0;
    for (double x : xs)
        if (Sample::statistic_eligible(x)) ++n_stat;
    if (n_stat == 0) raise(Errc::empty_design, "no statistic-eligible design points");

    const double half = h / 2.0;
    const double lo = -h;
    const double hi = 1.0 + half;

    // The count of points in [x, x+h/2) is piecewise constant in x with
    // breakpoints where a point enters (xi - h/2) or leaves (just past xi);
    // sampling each piece at its midpoint realizes the exact infimum over the
    // open range, the one-sided limits at the ends included.
    std::vector<double> events{lo, hi};
    for (double x : xs) {
        if (x > lo && x < hi) events.push_back(x);
        const double e = x - half;
        if (e > lo && e < hi) events.push_back(e);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    int min_count = -1, max_count = -1;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const double t = events[i] + (events[i + 1] - events[i]) / 2.0;
        const auto first = std::lower_bound(xs.begin(), xs.end(), t);
        const auto last = std::lower_bound(xs.begin(), xs.end(), t + half);
        const int count = static_cast<int>(last - first);
        if (min_count < 0 || count < min_count) min_count = count;
        if (count > max_count) max_count = count;
    }

    return CxSweep{min_count / (n_stat * h), min_count, max_count};
}

double c_x(std::span<const double> all_xs, double h) { return c_x_sweep(all_xs, h).cx; }

}  // namespace fgof
