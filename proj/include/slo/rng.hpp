#pragma once

#include <cstdint>
#include <random>

namespace slo {

/// Seedable random stream. Every stochastic decision in the library goes
/// through one of these, so a (config, seed) pair fully determines a run.
/// Distributions are constructed fresh per call; consumption order is part
/// of the reproducibility contract and is documented by the call sites.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    /// Uniform integer in [lo, hi], both inclusive.
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    double gaussian(double mean, double stddev) {
        return std::normal_distribution<double>(mean, stddev)(engine_);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace slo
