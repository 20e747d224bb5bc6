#include "slo/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slo/rng.hpp"

namespace slo {

namespace {

constexpr double kBlendExtension = 0.5; // BLX extension fraction

[[noreturn]] void throw_non_finite(const ObjectiveSpec& objective, const char* what, int index,
                                   std::span<const double> point) {
    std::ostringstream msg;
    msg << "objective '" << objective.name << "' returned a non-finite value for " << what << ' '
        << index << " at point (";
    for (std::size_t d = 0; d < point.size(); ++d)
        msg << (d ? ", " : "") << point[d];
    msg << ')';
    throw std::runtime_error(msg.str());
}

} // namespace

void validate_config(const PsoConfig& config) {
    if (config.swarm_size < 2)
        throw std::invalid_argument("swarm_size must be >= 2");
    if (config.iterations < 1)
        throw std::invalid_argument("iterations must be >= 1");
    for (double c : {config.inertia, config.cognitive, config.social})
        if (!(std::isfinite(c) && c > 0.0))
            throw std::invalid_argument("PSO coefficients must be finite and positive");
}

void validate_config(const GaConfig& config) {
    if (config.population < 2)
        throw std::invalid_argument("population must be >= 2");
    if (config.generations < 1)
        throw std::invalid_argument("generations must be >= 1");
    if (config.tournament_size < 1)
        throw std::invalid_argument("tournament_size must be >= 1");
    if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0))
        throw std::invalid_argument("crossover_rate must be in [0, 1]");
    if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0))
        throw std::invalid_argument("mutation_rate must be in [0, 1]");
    if (!(std::isfinite(config.mutation_sigma_fraction) && config.mutation_sigma_fraction >= 0.0))
        throw std::invalid_argument("mutation_sigma_fraction must be finite and >= 0");
}

RunResult run_pso(const PsoConfig& config, const ObjectiveSpec& objective) {
    validate_config(config);
    validate_objective(objective);

    long long evaluations = 0;
    ObjectiveSpec counted = objective;
    counted.eval = [&evaluations, base = objective.eval](std::span<const double> x) {
        ++evaluations;
        return base(x);
    };

    Rng rng(config.seed);
    const int n = config.swarm_size;
    const int dim = objective.dimension;

    std::vector<std::vector<double>> pos(n, std::vector<double>(dim));
    std::vector<std::vector<double>> vel(n, std::vector<double>(dim, 0.0));
    std::vector<double> score(n);
    for (auto& x : pos)
        for (int d = 0; d < dim; ++d)
            x[d] = rng.uniform(objective.bounds[d].first, objective.bounds[d].second);
    for (int i = 0; i < n; ++i) {
        score[i] = counted.score(pos[i]);
        if (!std::isfinite(score[i]))
            throw_non_finite(objective, "particle", i, pos[i]);
    }

    std::vector<std::vector<double>> pbest = pos;
    std::vector<double> pbest_score = score;
    int g = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
    std::vector<double> gbest = pos[g];
    double gbest_score = score[g];

    RunResult result;
    result.trace.reserve(config.iterations);
    for (int it = 1; it <= config.iterations; ++it) {
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < dim; ++d) {
                const double r1 = rng.uniform(0.0, 1.0);
                const double r2 = rng.uniform(0.0, 1.0);
                vel[i][d] = config.inertia * vel[i][d] +
                            config.cognitive * r1 * (pbest[i][d] - pos[i][d]) +
                            config.social * r2 * (gbest[d] - pos[i][d]);
                pos[i][d] += vel[i][d];
                const auto [lo, hi] = objective.bounds[d];
                if (pos[i][d] < lo) {
                    pos[i][d] = lo;
                    vel[i][d] = 0.0; // avoid sticking to the boundary
                } else if (pos[i][d] > hi) {
                    pos[i][d] = hi;
                    vel[i][d] = 0.0;
                }
            }
            score[i] = counted.score(pos[i]);
            if (!std::isfinite(score[i]))
                throw_non_finite(objective, "particle", i, pos[i]);
            if (score[i] > pbest_score[i]) {
                pbest_score[i] = score[i];
                pbest[i] = pos[i];
            }
            if (score[i] > gbest_score) {
                gbest_score = score[i];
                gbest = pos[i];
            }
        }
        result.trace.push_back({it, std::nullopt, std::nullopt, std::nullopt, gbest_score});
    }

    result.best_point = gbest;
    result.best_score = gbest_score;
    result.best_raw = objective.to_raw(gbest_score);
    result.evaluations_used = evaluations;
    return result;
}

RunResult run_ga(const GaConfig& config, const ObjectiveSpec& objective) {
    validate_config(config);
    validate_objective(objective);

    long long evaluations = 0;
    ObjectiveSpec counted = objective;
    counted.eval = [&evaluations, base = objective.eval](std::span<const double> x) {
        ++evaluations;
        return base(x);
    };

    Rng rng(config.seed);
    const int n = config.population;
    const int dim = objective.dimension;

    std::vector<std::vector<double>> pop(n, std::vector<double>(dim));
    std::vector<double> score(n);
    for (auto& x : pop)
        for (int d = 0; d < dim; ++d)
            x[d] = rng.uniform(objective.bounds[d].first, objective.bounds[d].second);
    for (int i = 0; i < n; ++i) {
        score[i] = counted.score(pop[i]);
        if (!std::isfinite(score[i]))
            throw_non_finite(objective, "individual", i, pop[i]);
    }

    auto tournament = [&]() {
        int best = rng.uniform_int(0, n - 1);
        for (int k = 1; k < config.tournament_size; ++k) {
            const int c = rng.uniform_int(0, n - 1);
            if (score[c] > score[best])
                best = c;
        }
        return best;
    };

    RunResult result;
    result.trace.reserve(config.generations);
    for (int gen = 1; gen <= config.generations; ++gen) {
        const int elite =
            static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
        std::vector<std::vector<double>> next;
        std::vector<double> next_score;
        next.reserve(n);
        next_score.reserve(n);
        next.push_back(pop[elite]); // elitism of 1, score carried over
        next_score.push_back(score[elite]);

        while (static_cast<int>(next.size()) < n) {
            const std::vector<double>& a = pop[tournament()];
            const std::vector<double>& b = pop[tournament()];
            std::vector<double> child = a;
            if (rng.uniform(0.0, 1.0) < config.crossover_rate) {
                for (int d = 0; d < dim; ++d) {
                    const double lo = std::min(a[d], b[d]);
                    const double hi = std::max(a[d], b[d]);
                    const double ext = kBlendExtension * (hi - lo);
                    child[d] = rng.uniform(lo - ext, hi + ext);
                }
            }
            for (int d = 0; d < dim; ++d) {
                if (rng.uniform(0.0, 1.0) < config.mutation_rate) {
                    const double width = objective.bounds[d].second - objective.bounds[d].first;
                    child[d] += rng.gaussian(0.0, config.mutation_sigma_fraction * width);
                }
                child[d] =
                    std::clamp(child[d], objective.bounds[d].first, objective.bounds[d].second);
            }
            const double s = counted.score(child);
            if (!std::isfinite(s))
                throw_non_finite(objective, "individual", static_cast<int>(next.size()), child);
            next.push_back(std::move(child));
            next_score.push_back(s);
        }
        pop = std::move(next);
        score = std::move(next_score);
        const double best = *std::max_element(score.begin(), score.end());
        result.trace.push_back({gen, std::nullopt, std::nullopt, std::nullopt, best});
    }

    const int best =
        static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
    result.best_point = pop[best];
    result.best_score = score[best];
    result.best_raw = objective.to_raw(score[best]);
    result.evaluations_used = evaluations;
    return result;
}

} // namespace slo
