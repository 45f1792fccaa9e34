#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fgof/errors.hpp"
#include "fgof/rng.hpp"
#include "fgof/tail.hpp"

using namespace fgof;

TEST_SUITE_BEGIN("tail");

TEST_CASE("direct arithmetic on the order-statistic gap") {
    const std::vector<double> res{-0.5, -0.3, -0.2, -0.1};
    const TailEstimate est = neg_hill(res, 2);
    CHECK(est.gamma_hat == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(est.m == 4);
    CHECK(est.denominator == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(est.gamma_hat == (2.0 * est.k / (2.0 * est.m)) / est.denominator);
}

TEST_CASE("tied top order statistics") {
    const std::vector<double> res{-0.4, -0.25, 0.0, 0.0};
    CHECK_THROWS_WITH_AS(neg_hill(res, 1), doctest::Contains("ZeroDenominator"), Error);
    CHECK(neg_hill(res, 2).gamma_hat == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("k out of range") {
    const std::vector<double> res{-0.5, -0.3, -0.2, -0.1};
    CHECK_THROWS_WITH_AS(neg_hill(res, 0), doctest::Contains("BadK"), Error);
    CHECK_THROWS_WITH_AS(neg_hill(res, 4), doctest::Contains("BadK"), Error);
    CHECK_THROWS_WITH_AS(neg_hill(res, 7), doctest::Contains("BadK"), Error);
}

TEST_CASE("scale law: shrinking residuals inflates the estimate") {
    Rng rng(31);
    std::vector<double> res;
    for (int i = 0; i < 50; ++i) res.push_back(-rng.exponential());
    const double base = neg_hill(res, 10).gamma_hat;
    for (double c : {0.5, 2.0, 4.0}) {
        std::vector<double> scaled = res;
        for (double& r : scaled) r *= c;
        CHECK(neg_hill(scaled, 10).gamma_hat == base / c);
    }
}

TEST_CASE("permutation invariance") {
    Rng rng(37);
    std::vector<double> res;
    for (int i = 0; i < 30; ++i) res.push_back(-rng.uniform01());
    const double base = neg_hill(res, 7).gamma_hat;
    for (int rep = 0; rep < 5; ++rep) {
        for (std::size_t i = res.size(); i > 1; --i)
            std::swap(res[i - 1], res[static_cast<std::size_t>(rng.uniform01() * i)]);
        CHECK(neg_hill(res, 7).gamma_hat == base);
    }
}

TEST_CASE("location shifts cancel in the gap") {
    Rng rng(41);
    std::vector<double> res;
    for (int i = 0; i < 40; ++i) res.push_back(-rng.uniform01());
    const double base = neg_hill(res, 12).gamma_hat;
    std::vector<double> shifted = res;
    for (double& r : shifted) r += 5.25;
    CHECK(neg_hill(shifted, 12).gamma_hat == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("known gamma passes through untouched") {
    const std::vector<double> res{-0.5, -0.3, -0.2, -0.1};
    CHECK(resolve_gamma(1.0, res, 2) == 1.0);
    CHECK(resolve_gamma(std::nullopt, res, 2) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(resolve_gamma(0.0, res, 2), doctest::Contains("DomainError"), Error);
    CHECK_THROWS_WITH_AS(resolve_gamma(-1.0, res, 2), doctest::Contains("DomainError"), Error);
}

TEST_SUITE_END();
