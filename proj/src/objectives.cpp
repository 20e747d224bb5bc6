#include "slo/objectives.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slo {

double eval_g1(std::span<const double> p) {
    const double x = p[0], y = p[1];
    const double r1 = 1.5 - x * (1.0 - y);
    const double r2 = 2.25 - x * (1.0 - y * y);
    const double r3 = 2.625 - x * (1.0 - y * y * y);
    return r1 * r1 + r2 * r2 + r3 * r3;
}

double eval_g2(std::span<const double> p) {
    const double x = p[0], y = p[1];
    const double a = x + y + 1.0;
    const double fa = 19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y;
    const double b = 2.0 * x - 3.0 * y;
    const double fb = 18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y;
    return (1.0 + a * a * fa) * (30.0 + b * b * fb);
}

double eval_g3(std::span<const double> p) {
    const double x = p[0], y = p[1];
    const double r1 = -13.0 + x - y * y * y + 5.0 * y * y - 2.0 * y;
    const double r2 = -29.0 + x + y * y * y + y * y - 14.0 * y;
    return 1.0 + r1 * r1 + r2 * r2;
}

double eval_g4(std::span<const double> p) {
    const double x = p[0], y = p[1];
    const double x2 = x * x, y2 = y * y;
    return 4.0 * x2 - 2.1 * x2 * x2 + x2 * x2 * x2 / 3.0 + x * y - 4.0 * y2 + 4.0 * y2 * y2;
}

namespace {

std::vector<ObjectiveSpec> build_registry() {
    std::vector<ObjectiveSpec> specs;

    specs.push_back({"g1",
                     2,
                     {{-4.5, 4.5}, {-4.5, 4.5}},
                     Sense::Minimize,
                     0.0,
                     {{3.0, 0.5}},
                     eval_g1});

    specs.push_back({"g2",
                     2,
                     {{-2.0, 2.0}, {-2.0, 2.0}},
                     Sense::Minimize,
                     3.0,
                     {{0.0, -1.0}},
                     eval_g2});

    specs.push_back({"g3",
                     2,
                     {{-10.0, 10.0}, {-10.0, 10.0}},
                     Sense::Minimize,
                     1.0,
                     {{5.0, 4.0}},
                     eval_g3});

    // Two symmetric minima; value and 6-decimal coordinates from the
    // grid + Newton refinement oracle in the test suite.
    specs.push_back({"g4",
                     2,
                     {{-3.0, 3.0}, {-2.0, 2.0}},
                     Sense::Minimize,
                     -1.0316284534898776,
                     {{0.089842, -0.712656}, {-0.089842, 0.712656}},
                     eval_g4});

    return specs;
}

const std::vector<ObjectiveSpec>& registry() {
    static const std::vector<ObjectiveSpec> specs = build_registry();
    return specs;
}

} // namespace

const ObjectiveSpec& lookup(const std::string& name) {
    for (const auto& spec : registry())
        if (spec.name == name)
            return spec;
    std::ostringstream msg;
    msg << "unknown objective '" << name << "' (valid:";
    for (const auto& spec : registry())
        msg << ' ' << spec.name;
    msg << ')';
    throw std::invalid_argument(msg.str());
}

std::vector<std::string> objective_names() {
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const auto& spec : registry())
        names.push_back(spec.name);
    return names;
}

void validate_objective(const ObjectiveSpec& spec) {
    if (spec.dimension < 1)
        throw std::invalid_argument("objective '" + spec.name + "': dimension must be >= 1");
    if (static_cast<int>(spec.bounds.size()) != spec.dimension)
        throw std::invalid_argument("objective '" + spec.name + "': bounds/dimension mismatch");
    for (const auto& [lo, hi] : spec.bounds) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("objective '" + spec.name + "': bounds must be finite");
        if (lo >= hi)
            throw std::invalid_argument("objective '" + spec.name +
                                        "': lower bound must be below upper bound");
    }
    if (!spec.eval)
        throw std::invalid_argument("objective '" + spec.name + "': missing eval function");
}

} // namespace slo
