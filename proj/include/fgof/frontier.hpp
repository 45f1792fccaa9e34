#pragma once

#include <span>
#include <vector>

#include "fgof/sample.hpp"

namespace fgof {

// Active points of the optimal majorant line at one abscissa: either one point
// on each side (left < x < right) or a single point sitting exactly at x
// (left == right). Indices refer to the point list the fit ran on (for
// Sample-level fits: the even-position list, 0-based).
struct SupportPair {
    int left;
    int right;
    bool single() const { return left == right; }
};

struct FitDetail {
    double value;       // minimal intercept at the query abscissa
    double slope;       // slope of the optimal majorant line
    SupportPair support;
    int left_count;     // windowed points strictly left of the query
    int right_count;    // windowed points strictly right of the query
};

struct FrontierFit {
    std::vector<double> eval_x;
    std::vector<double> values;
    std::vector<SupportPair> support_pairs;
    std::vector<std::pair<int, int>> window_counts;
};

// Evaluates the boundary estimate over a strictly-increasing point set: at a
// query x, the least concave majorant of the points within the open window
// |x - xi| < h, which equals the minimal intercept over all lines dominating
// those points. Queries must be nondecreasing; the window indices only slide
// forward and the upper hull is rebuilt only when the window contents change.
class MajorantSweep {
public:
    MajorantSweep(std::span<const double> xs, std::span<const double> ys, double h);

    FitDetail eval(double x);

private:
    void rebuild();

    std::span<const double> xs_;
    std::span<const double> ys_;
    double h_;
    std::ptrdiff_t lo_ = 0;    // first index with xs[lo] > x - h
    std::ptrdiff_t hi_ = -1;   // last index with xs[hi] < x + h
    std::ptrdiff_t built_lo_ = 1, built_hi_ = -2;
    std::vector<std::ptrdiff_t> hull_;  // upper hull, left to right
    std::size_t seg_ = 0;               // current hull segment cursor
};

double fit_at(const Sample& sample, double x, double h);
FitDetail fit_at_detail(const Sample& sample, double x, double h);

// xs must be sorted ascending; values match per-point fit_at bit for bit.
FrontierFit fit_grid(const Sample& sample, const std::vector<double>& xs, double h);

// One residual y - ghat(x) per even-position point, in x order, fitted on the
// even sample itself at bandwidth h1 (each point lies in its own window, so
// every residual is <= 0 and support points sit exactly at 0).
std::vector<double> residuals_even(const Sample& sample, double h1);

}  // namespace fgof
