#pragma once

namespace hedac {

/// Radially symmetric instantaneous coverage action. The 3D Gaussian kernel
/// integrates to intensity over all of space; range sets its spread, and
/// evaluation is truncated to exactly zero beyond cutoff.
struct GaussianAction {
    double intensity = 1.0; ///< total deposited mass per unit time
    double range = 1.0;     ///< standard deviation [m]
    double cutoff = 4.0;    ///< truncation radius [m], >= 3 * range

    GaussianAction() = default;
    GaussianAction(double intensity, double range);
    GaussianAction(double intensity, double range, double cutoff);

    /// intensity / (range * sqrt(2*pi))^3, the kernel value at r = 0.
    [[nodiscard]] double peak() const;
};

/// Kernel value at distance r >= 0; exactly 0 for r > cutoff.
double eval_action(const GaussianAction& action, double r);

} // namespace hedac
