#pragma once

#include <optional>
#include <span>

namespace fgof {

// Tail-scale estimate from the gap between the top and (k+1)-th-from-top
// residual order statistics.
struct TailEstimate {
    double gamma_hat;
    int k;
    double denominator;  // top order statistic minus the (k+1)-th from the top
    int m;               // residual count, half the sample size
};

TailEstimate neg_hill(std::span<const double> residuals, int k);

// Known-gamma pass-through, otherwise the estimator above.
double resolve_gamma(std::optional<double> config_gamma, std::span<const double> residuals, int k);

}  // namespace fgof
