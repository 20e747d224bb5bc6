#include "slo/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace slo {

const char* algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Slo: return "slo";
    case Algorithm::Pso: return "pso";
    case Algorithm::Ga: return "ga";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "slo")
        return Algorithm::Slo;
    if (name == "pso")
        return Algorithm::Pso;
    if (name == "ga")
        return Algorithm::Ga;
    throw std::invalid_argument("unknown algorithm '" + name + "' (valid: slo pso ga)");
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config) {
    if (config.runs < 1)
        throw std::invalid_argument("runs must be >= 1");
    const ObjectiveSpec& objective = lookup(config.objective_name);

    std::vector<RunResult> results;
    results.reserve(config.runs);
    for (int i = 0; i < config.runs; ++i) {
        const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
        try {
            switch (config.algorithm) {
            case Algorithm::Slo: {
                SloConfig c = std::get<SloConfig>(config.algorithm_config);
                c.seed = seed;
                results.push_back(run_slo(c, objective));
                break;
            }
            case Algorithm::Pso: {
                PsoConfig c = std::get<PsoConfig>(config.algorithm_config);
                c.seed = seed;
                results.push_back(run_pso(c, objective));
                break;
            }
            case Algorithm::Ga: {
                GaConfig c = std::get<GaConfig>(config.algorithm_config);
                c.seed = seed;
                results.push_back(run_ga(c, objective));
                break;
            }
            }
        } catch (const std::bad_variant_access&) {
            throw std::invalid_argument("algorithm_config does not match the selected algorithm");
        } catch (const std::exception& e) {
            throw std::runtime_error("run " + std::to_string(i) + " failed: " + e.what());
        }
    }
    return results;
}

SummaryTable summarize(const std::vector<RunResult>& results, const ExperimentConfig& config) {
    if (results.empty())
        throw std::invalid_argument("summarize: no results");

    SummaryTable table;
    table.objective = config.objective_name;
    table.algorithm = algorithm_name(config.algorithm);
    for (int i = 0; i < static_cast<int>(results.size()); ++i)
        table.rows.push_back({i, config.base_seed + static_cast<std::uint64_t>(i),
                              results[i].best_score, results[i].best_raw, results[i].best_point});

    // aggregate over a sorted copy so any permutation of the runs yields
    // bit-identical statistics
    std::vector<double> scores;
    scores.reserve(results.size());
    for (const auto& r : results)
        scores.push_back(r.best_score);
    std::sort(scores.begin(), scores.end());

    const std::size_t n = scores.size();
    table.worst_score = scores.front();
    table.best_score = scores.back();
    table.median_score =
        (n % 2 == 1) ? scores[n / 2] : (scores[n / 2 - 1] + scores[n / 2]) / 2.0;
    table.mean_score = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double s : scores)
        ss += (s - table.mean_score) * (s - table.mean_score);
    table.stddev_score = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

    const RunRow* best_row = &table.rows.front();
    for (const auto& row : table.rows)
        if (row.best_score > best_row->best_score)
            best_row = &row;
    table.best_point = best_row->best_point;
    return table;
}

AcceptanceTolerances default_tolerances(const std::string& objective_name) {
    if (objective_name == "g1")
        return {5e-3, 0.15};
    if (objective_name == "g2")
        return {1e-2, 0.05};
    if (objective_name == "g3")
        return {1e-2, 0.1};
    if (objective_name == "g4")
        return {2e-3, 0.05};
    throw std::invalid_argument("no default tolerances for objective '" + objective_name +
                                "' (valid: g1 g2 g3 g4)");
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

double distance_to_nearest_optimum(const std::vector<double>& point, const ObjectiveSpec& spec) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& opt : spec.known_optimum_points) {
        double ss = 0.0;
        for (std::size_t d = 0; d < point.size(); ++d)
            ss += (point[d] - opt[d]) * (point[d] - opt[d]);
        best = std::min(best, std::sqrt(ss));
    }
    return best;
}

} // namespace

AcceptanceReport check_acceptance(const SummaryTable& summary, const ObjectiveSpec& objective,
                                  const AcceptanceTolerances& tolerances) {
    AcceptanceReport report;

    const double runs = static_cast<double>(summary.rows.size());
    report.checks.push_back({"runs_at_least_5", runs, 5.0, runs >= 5.0});

    std::vector<double> value_errors;
    std::vector<double> point_distances;
    for (const auto& row : summary.rows) {
        value_errors.push_back(std::abs(row.best_raw - objective.known_optimum_value));
        point_distances.push_back(distance_to_nearest_optimum(row.best_point, objective));
    }
    const double med_value = median_of(value_errors);
    const double med_dist = median_of(point_distances);
    report.checks.push_back(
        {"median_value_error", med_value, tolerances.value_tol, med_value <= tolerances.value_tol});
    report.checks.push_back({"median_point_distance", med_dist, tolerances.point_tol,
                             med_dist <= tolerances.point_tol});

    report.all_pass = true;
    for (const auto& c : report.checks)
        report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace slo
