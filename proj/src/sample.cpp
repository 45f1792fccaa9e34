#include "fgof/sample.hpp"

#include <algorithm>

namespace fgof {

namespace {
constexpr double kEligibilityTol = 1e-12;
}

bool Sample::statistic_eligible(double x) {
    return x >= -kEligibilityTol && x <= 1.0 + kEligibilityTol;
}

Sample Sample::from_points(std::vector<SamplePoint> pts) {
    std::stable_sort(pts.begin(), pts.end(),
                     [](const SamplePoint& a, const SamplePoint& b) { return a.x < b.x; });

    Sample s;
    s.points_.reserve(pts.size());
    for (const SamplePoint& p : pts) {
        if (!s.points_.empty() && s.points_.back().x == p.x) {
            // duplicate abscissa: keep the larger response, it is the only
            // candidate for an active constraint
            s.points_.back().y = std::max(s.points_.back().y, p.y);
            ++s.merged_count_;
        } else {
            s.points_.push_back(p);
        }
    }

    if (s.points_.size() % 2 != 0) {
        s.points_.pop_back();
        s.dropped_last_ = true;
    }

    for (const SamplePoint& p : s.points_)
        if (statistic_eligible(p.x)) ++s.n_stat_;

    return s;
}

std::vector<SamplePoint> Sample::odd_points() const {
    std::vector<SamplePoint> out;
    out.reserve((points_.size() + 1) / 2);
    for (std::size_t i = 0; i < points_.size(); i += 2) out.push_back(points_[i]);
    return out;
}

std::vector<SamplePoint> Sample::even_points() const {
    std::vector<SamplePoint> out;
    out.reserve(points_.size() / 2);
    for (std::size_t i = 1; i < points_.size(); i += 2) out.push_back(points_[i]);
    return out;
}

std::vector<SamplePoint> Sample::odd_stat_points() const {
    std::vector<SamplePoint> out;
    for (std::size_t i = 0; i < points_.size(); i += 2)
        if (statistic_eligible(points_[i].x)) out.push_back(points_[i]);
    return out;
}

}  // namespace fgof
