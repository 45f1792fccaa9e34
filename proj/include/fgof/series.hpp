#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fgof/sample.hpp"

namespace fgof {

struct SeriesFile {
    std::vector<std::pair<double, double>> rows;  // (label, value), labels strictly increasing
    int parsed_count = 0;
    int skipped_count = 0;  // blank lines and rows with missing values
};

// Delimited two-column text; delimiter auto-detected among comma, tab and
// semicolon, an optional single header row, missing values as empty cells or
// NA-style tokens.
SeriesFile read_series(const std::string& path);

struct LoadedSeries {
    Sample sample;
    int parsed_count = 0;
    int skipped_count = 0;
    double first_label = 0;
    double last_label = 0;
};

// Affine time rescaling sending the first label to -h and the last to 1 + h,
// so the statistic runs on the interior of the observation span.
LoadedSeries load_series_detail(const std::string& path, double h);
Sample load_series(const std::string& path, double h);

}  // namespace fgof
