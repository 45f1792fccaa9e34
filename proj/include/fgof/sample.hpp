#pragma once

#include <cstddef>
#include <vector>

namespace fgof {

struct SamplePoint {
    double x;
    double y;
};

// Canonicalized design: points sorted by strictly increasing x. Positions are
// indexed 1-based; odd positions form the statistic sample, even positions the
// estimation sample. Points mapped into [0,1] are statistic-eligible; buffer
// points outside only support the boundary fit.
class Sample {
public:
    static Sample from_points(std::vector<SamplePoint> pts);

    const std::vector<SamplePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    // 1-based odd positions (1st, 3rd, ...)
    std::vector<SamplePoint> odd_points() const;
    // 1-based even positions (2nd, 4th, ...)
    std::vector<SamplePoint> even_points() const;
    // odd positions restricted to [0,1]
    std::vector<SamplePoint> odd_stat_points() const;

    int n_stat() const { return n_stat_; }
    int merged_count() const { return merged_count_; }
    bool dropped_last() const { return dropped_last_; }

    static bool statistic_eligible(double x);

private:
    std::vector<SamplePoint> points_;
    int n_stat_ = 0;
    int merged_count_ = 0;
    bool dropped_last_ = false;
};

}  // namespace fgof
