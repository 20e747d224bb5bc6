#pragma once

#include <optional>
#include <vector>

namespace slo {

/// Per-season (or per-iteration, for the baselines) trace row. Tier bests
/// are running bests and are absent for baseline runs; global_best is the
/// best-of-history score and is non-decreasing down the trace.
struct SeasonRecord {
    int season = 0;
    std::optional<double> best_wealthy;
    std::optional<double> best_regular;
    std::optional<double> best_weakest;
    double global_best = 0.0;
};

struct RunResult {
    std::vector<double> best_point;
    double best_score = 0.0; // internal maximization scale
    double best_raw = 0.0;   // raw objective value at best_point
    std::vector<SeasonRecord> trace;
    long long evaluations_used = 0;
};

} // namespace slo
