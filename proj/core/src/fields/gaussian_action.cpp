#include "hedac/fields/gaussian_action.hpp"

#include "hedac/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hedac {
namespace {

void check(double intensity, double range, double cutoff) {
    if (intensity <= 0.0) throw ValidationError("action intensity must be > 0");
    if (range <= 0.0) throw ValidationError("action range must be > 0");
    if (cutoff < 3.0 * range)
        throw ValidationError("action cutoff " + std::to_string(cutoff) +
                              " is below 3 * range = " + std::to_string(3.0 * range));
}

} // namespace

GaussianAction::GaussianAction(double intensity, double range)
    : GaussianAction(intensity, range, 4.0 * range) {}

GaussianAction::GaussianAction(double intensity, double range, double cutoff)
    : intensity(intensity), range(range), cutoff(cutoff) {
    check(intensity, range, cutoff);
}

double GaussianAction::peak() const {
    const double s = range * std::sqrt(2.0 * std::numbers::pi);
    return intensity / (s * s * s);
}

double eval_action(const GaussianAction& action, double r) {
    if (r > action.cutoff) return 0.0;
    return action.peak() * std::exp(-r * r / (2.0 * action.range * action.range));
}

} // namespace hedac
