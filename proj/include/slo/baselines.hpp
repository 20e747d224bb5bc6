#pragma once

#include <cstdint>

#include "slo/objectives.hpp"
#include "slo/result.hpp"

namespace slo {

struct PsoConfig {
    int swarm_size = 90;
    int iterations = 100;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    std::uint64_t seed = 0;
};

struct GaConfig {
    int population = 90;
    int generations = 100;
    int tournament_size = 3;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1; // per gene
    double mutation_sigma_fraction = 0.1;
    std::uint64_t seed = 0;
};

void validate_config(const PsoConfig& config);
void validate_config(const GaConfig& config);

/// Global-best PSO: positions uniform in bounds, velocities start at zero.
/// Per particle and dimension, v = inertia*v + cognitive*r1*(pbest-x) +
/// social*r2*(gbest-x); positions are clamped to the bounds and the velocity
/// zeroed on any clamped dimension. Trace rows carry the best-so-far score.
RunResult run_pso(const PsoConfig& config, const ObjectiveSpec& objective);

/// Real-coded GA: tournament selection, blend crossover (uniform in the
/// parent segment extended by half its span on each side), per-gene additive
/// Gaussian mutation scaled by mutation_sigma_fraction of the domain width,
/// elitism of one. Trace rows carry the best score per generation.
RunResult run_ga(const GaConfig& config, const ObjectiveSpec& objective);

} // namespace slo
