#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace slo {

enum class Sense { Minimize, Maximize };

/// A benchmark objective: raw function, box bounds, optimization sense and
/// the known global optimum. The engine maximizes internally; minimization
/// problems are wrapped as -f via to_score().
struct ObjectiveSpec {
    std::string name;
    int dimension = 0;
    std::vector<std::pair<double, double>> bounds; // (lower, upper) per dimension
    Sense sense = Sense::Minimize;
    double known_optimum_value = 0.0;
    std::vector<std::vector<double>> known_optimum_points;
    std::function<double(std::span<const double>)> eval;

    /// Raw objective value -> internal maximization score.
    /// Negative zero is normalized so reports never print "-0".
    double to_score(double raw) const {
        if (sense == Sense::Maximize)
            return raw;
        return raw == 0.0 ? 0.0 : -raw;
    }

    /// Internal score -> raw objective value (inverse of to_score).
    double to_raw(double score) const {
        if (sense == Sense::Maximize)
            return score;
        return score == 0.0 ? 0.0 : -score;
    }

    double score(std::span<const double> point) const { return to_score(eval(point)); }
};

// The four registered benchmarks, also usable directly.
double eval_g1(std::span<const double> p); // Beale
double eval_g2(std::span<const double> p); // Goldstein-Price
double eval_g3(std::span<const double> p); // Freudenstein-Roth shifted by +1
double eval_g4(std::span<const double> p); // six-hump camelback

/// Registered objective by name ("g1".."g4"); throws std::invalid_argument
/// listing the valid names for anything else.
const ObjectiveSpec& lookup(const std::string& name);

/// Registry contents, in registration order.
std::vector<std::string> objective_names();

/// Rejects non-finite bounds, lower >= upper, missing eval, or a dimension
/// mismatch. Used by the engine entry points.
void validate_objective(const ObjectiveSpec& spec);

} // namespace slo
