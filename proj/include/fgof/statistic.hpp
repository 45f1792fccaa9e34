#pragma once

#include <span>

#include "fgof/sample.hpp"

namespace fgof {

struct DesignSums {
    double r;      // sum of squared statistic abscissae
    double s;      // sum of statistic abscissae
    int m;         // statistic sample size (half the formula sample size n)
    double denom;  // r*m - s^2, positive unless the abscissae are all equal
};

DesignSums design_sums(std::span<const double> odd_xs);

// Squared distance from the fitted boundary values to the space of affine
// functions, evaluated through the explicit three-term form. The result does
// not depend on the affine reference f.
double t1(std::span<const double> ghat_odd, std::span<const double> odd_xs, double f_slope,
          double f_intercept);

struct StatBreakdown {
    double t;
    double t1;          // affine distance of the fitted boundary alone
    double s1, s2, s3;  // t = s1 - s2 - s3
    double gamma_used;
    double sum_sq;            // squared-boundary first term
    int correction_count;     // statistic points with response >= fitted boundary
};

// Bias-corrected statistic: boundary fitted on even-position points at
// bandwidth h, assembled over the odd-position points inside [0,1]. The
// exceedance indicator is inclusive (response == fitted value fires).
StatBreakdown t_statistic(const Sample& sample, double h, double gamma_prime);

// Same statistic written against an explicit affine reference f; equals
// t_statistic for every affine f. Kept separate as a diagnostic.
double t_f(const Sample& sample, double h, double gamma_prime, double f_slope,
           double f_intercept);

struct CxSweep {
    double cx;
    int min_count;
    int max_count;
};

// Design-regularity constant: infimum over half-bandwidth windows
// [x, x+h/2), x in (-h, 1+h/2), of the point count divided by n*h with n the
// statistic-eligible count. Exact via an event sweep over window boundaries.
CxSweep c_x_sweep(std::span<const double> all_xs, double h);
double c_x(std::span<const double> all_xs, double h);

}  // namespace fgof
