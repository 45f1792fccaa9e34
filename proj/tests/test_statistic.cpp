#include <doctest.h>

#include <cmath>
#include <vector>

#include "fgof/errors.hpp"
#include "fgof/frontier.hpp"
#include "fgof/rng.hpp"
#include "fgof/sample.hpp"
#include "fgof/statistic.hpp"

using namespace fgof;

namespace {

// Ordinary least-squares distance of the values to the affine span, solved
// through the normal equations.
double ls_affine_ssr(const std::vector<double>& g, const std::vector<double>& xs) {
    const int m = static_cast<int>(g.size());
    double sx = 0, sxx = 0, sg = 0, sxg = 0;
    for (int i = 0; i < m; ++i) {
        sx += xs[i];
        sxx += xs[i] * xs[i];
        sg += g[i];
        sxg += xs[i] * g[i];
    }
    const double det = m * sxx - sx * sx;
    const double slope = (m * sxg - sx * sg) / det;
    const double icept = (sg - slope * sx) / m;
    double ssr = 0;
    for (int i = 0; i < m; ++i) {
        const double r = g[i] - slope * xs[i] - icept;
        ssr += r * r;
    }
    return ssr;
}

// The statistic transcribed term by term from its defining display, fitted
// point by point.
double t_display(const Sample& sample, double h, double gp) {
    const std::vector<SamplePoint> odds = sample.odd_stat_points();
    const int m = static_cast<int>(odds.size());
    const double n = 2.0 * m;

    double r = 0, s = 0;
    for (const SamplePoint& p : odds) {
        r += p.x * p.x;
        s += p.x;
    }

    double term1 = 0, term2 = 0, center = 0, proj = 0;
    for (const SamplePoint& p : odds) {
        const double gh = fit_at(sample, p.x, h);
        const bool hit = p.y >= gh;
        term1 += gh * gh;
        if (hit) term2 += p.y;
        center += gh + (hit ? 1.0 / gp : 0.0);
        proj += (gh + (hit ? 1.0 / gp : 0.0)) * (p.x - s / m);
    }
    return term1 + (2.0 / gp) * term2 - (2.0 / n) * center * center -
           m * proj * proj / (r * m - s * s);
}

Sample design_sample(int n, double h, Rng& rng, double a = 0.0, double b = 0.0) {
    const int count = static_cast<int>(std::floor(n * (1.0 + 2.0 * h) + 1e-9)) + 1;
    std::vector<SamplePoint> pts(count);
    for (int j = 0; j < count; ++j) {
        const double x = static_cast<double>(j) / n - h;
        pts[j] = {x, a + b * x - rng.uniform01()};
    }
    return Sample::from_points(std::move(pts));
}

}  // namespace

TEST_SUITE_BEGIN("statistic");

TEST_CASE("design sums: arithmetic and closed forms") {
    CHECK(design_sums(std::vector<double>{0.25, 0.75}).r == doctest::Approx(0.625).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(design_sums(std::vector<double>{0.5, 0.5}),
                         doctest::Contains("DegenerateDesign"), Error);

    const DesignSums two = design_sums(std::vector<double>{0.0, 1.0});
    CHECK(two.r == 1.0);
    CHECK(two.s == 1.0);
    CHECK(two.denom == 1.0);

    for (int n : {4, 10, 100}) {
        std::vector<double> odd_xs;
        for (int i = 1; i <= n; i += 2) odd_xs.push_back(static_cast<double>(i) / n);
        const DesignSums ds = design_sums(odd_xs);
        CHECK(ds.r == doctest::Approx((n * n - 1.0) / (6.0 * n)).epsilon(1e-14));
        CHECK(ds.s == doctest::Approx(n / 4.0).epsilon(1e-14));
        CHECK(ds.m == n / 2);
    }
}

TEST_CASE("affine boundary values have zero affine distance") {
    const std::vector<double> xs{0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<double> g(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) g[i] = 2.0 - 3.0 * xs[i];
    CHECK(t1(g, xs, 0.4, -1.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("three-point tent against the least-squares solution") {
    const std::vector<double> xs{0.0, 0.5, 1.0};
    const std::vector<double> g{0.0, 1.0, 0.0};
    // best affine fit is the constant 1/3 with residuals (-1/3, 2/3, -1/3)
    CHECK(ls_affine_ssr(g, xs) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(t1(g, xs, 0.0, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("random instances match the normal-equations solution") {
    Rng rng(43);
    for (int rep = 0; rep < 1000; ++rep) {
        const int m = 3 + static_cast<int>(rng.uniform01() * 48);
        std::vector<double> xs, g;
        for (int i = 0; i < m; ++i) {
            xs.push_back(rng.uniform(-1.0, 2.0));
            g.push_back(rng.uniform(-5.0, 5.0));
        }
        const double want = ls_affine_ssr(g, xs);
        const double got = t1(g, xs, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("the affine reference drops out") {
    Rng rng(47);
    std::vector<double> xs, g;
    for (int i = 0; i < 25; ++i) {
        xs.push_back(rng.uniform(0.0, 1.0));
        g.push_back(rng.uniform(-1.0, 1.0));
    }
    const double base = t1(g, xs, 0.0, 0.0);
    for (int rep = 0; rep < 20; ++rep) {
        const double got = t1(g, xs, rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        CHECK(got == doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("responses below an affine boundary produce a zero statistic") {
    std::vector<SamplePoint> pts;
    for (int j = 0; j <= 28; ++j) {
        const double x = -0.2 + j * 0.05;
        const bool odd_position = j % 2 == 0;  // 1-based position j+1
        const double line = 1.0 + 0.5 * x;
        pts.push_back({x, odd_position ? line - 0.5 : line});
    }
    const Sample s = Sample::from_points(pts);
    const StatBreakdown b = t_statistic(s, 0.3, 1.0);
    CHECK(b.correction_count == 0);
    CHECK(b.t == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.t1 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("statistic equals its referenced form for affine references") {
    Rng rng(53);
    const Sample s = design_sample(60, 0.2, rng);
    const StatBreakdown b = t_statistic(s, 0.2, 1.3);
    for (int rep = 0; rep < 100; ++rep) {
        const double slope = rng.uniform(-4.0, 4.0);
        const double icept = rng.uniform(-4.0, 4.0);
        const double tf = t_f(s, 0.2, 1.3, slope, icept);
        CHECK(tf == doctest::Approx(b.t).epsilon(1e-8));
    }
    CHECK(t_f(s, 0.2, 1.3, 0.0, 0.0) == doctest::Approx(b.t).epsilon(1e-12));
}

TEST_CASE("seeded run matches the display transcription") {
    Rng rng(59);
    const Sample s = design_sample(100, 0.2, rng);
    const StatBreakdown b = t_statistic(s, 0.2, 1.0);
    CHECK(b.t == doctest::Approx(t_display(s, 0.2, 1.0)).epsilon(1e-12));
}

TEST_CASE("breakdown reassembles the statistic") {
    Rng rng(61);
    for (int rep = 0; rep < 20; ++rep) {
        const Sample s = design_sample(80, 0.2, rng);
        const StatBreakdown b = t_statistic(s, 0.2, 0.7 + rng.uniform01());
        CHECK(b.t == doctest::Approx(b.s1 - b.s2 - b.s3).epsilon(1e-9));
        CHECK(b.t1 >= -1e-12);
        CHECK(b.sum_sq >= 0.0);
    }
}

TEST_CASE("degenerate affine data collapses to the correction terms") {
    // errors identically zero on an affine truth: every indicator fires and
    // the statistic reduces to the pure correction value -m/gamma^2. Exactly
    // representable grid and slope keep the boundary fit equal to the line bit
    // for bit, so the inclusive indicator sees true equality.
    const double a = 0.5, b = 2.0, gp = 1.7;
    std::vector<SamplePoint> pts;
    for (int j = 0; j <= 192; ++j) {
        const double x = static_cast<double>(j) / 128.0 - 0.25;
        pts.push_back({x, a + b * x});
    }
    const Sample s = Sample::from_points(pts);
    const StatBreakdown br = t_statistic(s, 0.25, gp);
    const int m = static_cast<int>(s.odd_stat_points().size());
    CHECK(br.correction_count == m);
    CHECK(br.t == doctest::Approx(t_f(s, 0.25, gp, b, a)).epsilon(1e-9));
    CHECK(br.t == doctest::Approx(-m / (gp * gp)).epsilon(1e-9));

    // on a non-representable line the reduction to the referenced form is
    // algebraic and survives, whatever the rounding does to the indicators
    for (SamplePoint& p : pts) p.y += 0.3 - 0.2 * p.x;
    const Sample s2 = Sample::from_points(pts);
    const StatBreakdown br2 = t_statistic(s2, 0.25, gp);
    CHECK(br2.t == doctest::Approx(t_f(s2, 0.25, gp, b - 0.2, a + 0.3)).epsilon(1e-9));
}

TEST_CASE("design constant of an equidistant design") {
    std::vector<double> xs;
    const int n = 100;
    const double h = 0.2;
    for (int j = 0; j <= 140; ++j) xs.push_back(static_cast<double>(j) / n - h);
    const double cx = c_x(xs, h);
    CHECK(std::abs(cx - 0.5) <= 1.0 / (n * h) + h);
}

TEST_CASE("an interior gap wider than half a bandwidth forces zero") {
    std::vector<double> xs;
    for (double x = -0.2; x <= 0.3; x += 0.02) xs.push_back(x);
    for (double x = 0.6; x <= 1.2; x += 0.02) xs.push_back(x);
    CHECK(c_x(xs, 0.2) == 0.0);
}

TEST_CASE("points beyond the sweep range do not move the constant") {
    std::vector<double> xs;
    for (int j = 0; j <= 70; ++j) xs.push_back(static_cast<double>(j) / 50.0 - 0.2);
    const double base = c_x(xs, 0.2);
    std::vector<double> extended = xs;
    extended.push_back(5.0);
    extended.push_back(-7.0);
    CHECK(c_x(extended, 0.2) == base);
}

TEST_CASE("empty design is rejected") {
    CHECK_THROWS_WITH_AS(c_x(std::vector<double>{}, 0.2), doctest::Contains("EmptyDesign"),
                         Error);
}

TEST_SUITE_END();
