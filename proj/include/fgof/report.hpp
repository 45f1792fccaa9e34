#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgof/decision.hpp"
#include "fgof/poisson_mc.hpp"
#include "fgof/sims.hpp"

namespace fgof {

// Machine-readable run summary: a flat snake_case JSON object (one level, with
// a versioned field set) or an aligned key/value text table. Exactly one
// payload is engaged, discriminated by `command`.
struct Report {
    int schema_version = 1;
    std::string command;
    std::vector<std::string> warnings;
    double wall_ms = 0.0;

    std::optional<GofOutcome> gof;
    std::optional<GofConfig> gof_config;
    std::optional<ExperimentReport> experiment;
    std::optional<A1Estimate> a1;
};

std::string to_json(const Report& report);
Report report_from_json(const std::string& text);
std::string to_text(const Report& report);

bool operator==(const Report& a, const Report& b);

}  // namespace fgof
