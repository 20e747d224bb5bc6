#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "slo/baselines.hpp"
#include "slo/engine.hpp"

namespace slo {

enum class Algorithm { Slo, Pso, Ga };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

/// A multi-run experiment; run i uses seed base_seed + i.
struct ExperimentConfig {
    std::string objective_name;
    Algorithm algorithm = Algorithm::Slo;
    int runs = 5;
    std::uint64_t base_seed = 1;
    std::variant<SloConfig, PsoConfig, GaConfig> algorithm_config = SloConfig{};
};

/// Executes config.runs independent seeded runs, ordered by run index.
/// A failing run is reported with its index attached.
std::vector<RunResult> run_experiment(const ExperimentConfig& config);

struct RunRow {
    int run;
    std::uint64_t seed;
    double best_score;
    double best_raw;
    std::vector<double> best_point;
};

/// Per-run rows plus aggregates over the per-run best scores. Aggregates are
/// computed over a score-sorted copy, so they are exactly permutation
/// invariant; stddev is the sample standard deviation (0 for a single run).
struct SummaryTable {
    std::string objective;
    std::string algorithm;
    std::vector<RunRow> rows;
    double best_score = 0.0;
    double median_score = 0.0;
    double worst_score = 0.0;
    double mean_score = 0.0;
    double stddev_score = 0.0;
    std::vector<double> best_point; // point of the best run (lowest index on ties)
};

SummaryTable summarize(const std::vector<RunResult>& results, const ExperimentConfig& config);

struct AcceptanceTolerances {
    double value_tol; // on median |best_raw - known optimum value|
    double point_tol; // on median distance to the nearest known optimum
};

/// Per-benchmark acceptance tolerances (g1..g4).
AcceptanceTolerances default_tolerances(const std::string& objective_name);

struct AcceptanceCheck {
    std::string name;
    double observed;
    double threshold;
    bool pass;
};

struct AcceptanceReport {
    std::vector<AcceptanceCheck> checks;
    bool all_pass = false;
};

/// Machine-checkable pass/fail per criterion: median value error, median
/// best-point distance (nearest optimum for multi-optimum objectives), and
/// a minimum of 5 runs. Failures are report entries, never exceptions.
AcceptanceReport check_acceptance(const SummaryTable& summary, const ObjectiveSpec& objective,
                                  const AcceptanceTolerances& tolerances);

} // namespace slo
