#include "fgof/frontier.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "fgof/errors.hpp"

namespace fgof {

namespace {

// > 0 when b lies strictly below the segment a-c (counterclockwise turn)
inline double cross(double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

std::vector<double> xs_of(const std::vector<SamplePoint>& pts) {
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = pts[i].x;
    return out;
}

std::vector<double> ys_of(const std::vector<SamplePoint>& pts) {
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = pts[i].y;
    return out;
}

}  // namespace

MajorantSweep::MajorantSweep(std::span<const double> xs, std::span<const double> ys, double h)
    : xs_(xs), ys_(ys), h_(h) {
    if (h <= 0.0) raise(Errc::domain_error, "bandwidth must be > 0");
}

void MajorantSweep::rebuild() {
    hull_.clear();
    for (std::ptrdiff_t i = lo_; i <= hi_; ++i) {
        while (hull_.size() >= 2) {
            const std::ptrdiff_t a = hull_[hull_.size() - 2];
            const std::ptrdiff_t b = hull_[hull_.size() - 1];
            // keep only right turns: pop b when it is on or below chord a-i
            if (cross(xs_[a], ys_[a], xs_[b], ys_[b], xs_[i], ys_[i]) >= 0.0)
                hull_.pop_back();
            else
                break;
        }
        hull_.push_back(i);
    }
    built_lo_ = lo_;
    built_hi_ = hi_;
    seg_ = 0;
}

FitDetail MajorantSweep::eval(double x) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xs_.size());
    while (lo_ < n && xs_[lo_] <= x - h_) ++lo_;
    while (hi_ + 1 < n && xs_[hi_ + 1] < x + h_) ++hi_;

    if (lo_ > hi_)
        raise(Errc::empty_window, "no estimation points within bandwidth of x=" + std::to_string(x));

    // split the window around the query
    const double* first = xs_.data() + lo_;
    const double* last = xs_.data() + hi_ + 1;
    const std::ptrdiff_t n_below = std::lower_bound(first, last, x) - first;
    const std::ptrdiff_t n_below_or_at = std::upper_bound(first, last, x) - first;
    const int left_count = static_cast<int>(n_below);
    const int right_count = static_cast<int>((hi_ - lo_ + 1) - n_below_or_at);
    const bool has_at = n_below_or_at > n_below;

    if (left_count == 0 && !has_at)
        raise(Errc::empty_side,
              "no estimation point left of x=" + std::to_string(x) +
                  " (missing buffer observations)");
    if (right_count == 0 && !has_at)
        raise(Errc::empty_side,
              "no estimation point right of x=" + std::to_string(x) +
                  " (missing buffer observations)");

    if (lo_ != built_lo_ || hi_ != built_hi_) rebuild();

    // land on the last hull vertex with abscissa <= x
    while (seg_ + 1 < hull_.size() && xs_[hull_[seg_ + 1]] <= x) ++seg_;

    const std::ptrdiff_t i = hull_[seg_];
    FitDetail out;
    out.left_count = left_count;
    out.right_count = right_count;

    if (xs_[i] == x) {
        // a hull vertex exactly at x pins the value; report a supporting slope
        out.value = ys_[i];
        out.support = {static_cast<int>(i), static_cast<int>(i)};
        if (seg_ + 1 < hull_.size()) {
            const std::ptrdiff_t j = hull_[seg_ + 1];
            out.slope = (ys_[j] - ys_[i]) / (xs_[j] - xs_[i]);
        } else if (seg_ > 0) {
            const std::ptrdiff_t p = hull_[seg_ - 1];
            out.slope = (ys_[i] - ys_[p]) / (xs_[i] - xs_[p]);
        } else {
            out.slope = 0.0;
        }
        return out;
    }

    const std::ptrdiff_t j = hull_[seg_ + 1];
    const double slope = (ys_[j] - ys_[i]) / (xs_[j] - xs_[i]);
    out.value = ys_[i] + (x - xs_[i]) * slope;
    out.slope = slope;
    out.support = {static_cast<int>(i), static_cast<int>(j)};
    return out;
}

FitDetail fit_at_detail(const Sample& sample, double x, double h) {
    const std::vector<SamplePoint> evens = sample.even_points();
    const std::vector<double> xs = xs_of(evens);
    const std::vector<double> ys = ys_of(evens);
    MajorantSweep sweep(xs, ys, h);
    return sweep.eval(x);
}

double fit_at(const Sample& sample, double x, double h) {
    return fit_at_detail(sample, x, h).value;
}

FrontierFit fit_grid(const Sample& sample, const std::vector<double>& xs_eval, double h) {
    for (std::size_t i = 1; i < xs_eval.size(); ++i)
        if (xs_eval[i] < xs_eval[i - 1])
            raise(Errc::domain_error, "evaluation abscissae must be sorted ascending");

    const std::vector<SamplePoint> evens = sample.even_points();
    const std::vector<double> xs = xs_of(evens);
    const std::vector<double> ys = ys_of(evens);
    MajorantSweep sweep(xs, ys, h);

    FrontierFit fit;
    fit.eval_x = xs_eval;
    fit.values.reserve(xs_eval.size());
    fit.support_pairs.reserve(xs_eval.size());
    fit.window_counts.reserve(xs_eval.size());
    for (double x : xs_eval) {
        try {
            const FitDetail d = sweep.eval(x);
            fit.values.push_back(d.value);
            fit.support_pairs.push_back(d.support);
            fit.window_counts.emplace_back(d.left_count, d.right_count);
        } catch (const Error& e) {
            throw Error(e.code(), "at x=" + std::to_string(x) + ": " + e.what());
        }
    }
    return fit;
}

std::vector<double> residuals_even(const Sample& sample, double h1) {
    const std::vector<SamplePoint> evens = sample.even_points();
    const std::vector<double> xs = xs_of(evens);
    const std::vector<double> ys = ys_of(evens);
    MajorantSweep sweep(xs, ys, h1);

    std::vector<double> res(evens.size());
    for (std::size_t i = 0; i < evens.size(); ++i)
        res[i] = ys[i] - sweep.eval(xs[i]).value;
    return res;
}

}  // namespace fgof
