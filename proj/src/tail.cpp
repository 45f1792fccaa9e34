#include "fgof/tail.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "fgof/errors.hpp"

namespace fgof {

TailEstimate neg_hill(std::span<const double> residuals, int k) {
    const int m = static_cast<int>(residuals.size());
    if (m == 0) raise(Errc::bad_k, "no residuals");
    if (k < 1 || k >= m)
        raise(Errc::bad_k, "k=" + std::to_string(k) + " outside [1, " + std::to_string(m) + ")");

    std::vector<double> sorted(residuals.begin(), residuals.end());
    std::stable_sort(sorted.begin(), sorted.end());

    const double top = sorted[m - 1];
    const double lower = sorted[m - 1 - k];
    const double denom = top - lower;
    if (denom <= 0.0)
        raise(Errc::zero_denominator,
              "top and (k+1)-th-from-top residual order statistics coincide");

    const double n = 2.0 * m;
    return TailEstimate{(2.0 * k / n) / denom, k, denom, m};
}

double resolve_gamma(std::optional<double> config_gamma, std::span<const double> residuals,
                     int k) {
    if (config_gamma) {
        if (*config_gamma <= 0.0) raise(Errc::domain_error, "gamma must be > 0");
        return *config_gamma;
    }
    return neg_hill(residuals, k).gamma_hat;
}

}  // namespace fgof
