#include "hedac/fields/coverage.hpp"

#include "hedac/error.hpp"
#include "hedac/util/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hedac {

void accumulate_coverage(ScalarField& rho, std::span<const Vec3> positions,
                         std::span<const GaussianAction> actions, double dt,
                         const NodeGrid& grid, int threads) {
    if (positions.size() != actions.size())
        throw ValidationError("one action per agent position required");
    if (positions.empty()) return;

    // Union of all cutoff balls, ascending node index.
    std::vector<std::uint32_t> affected;
    std::vector<std::uint32_t> ball;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        grid.gather(positions[i], actions[i].cutoff, ball);
        affected.insert(affected.end(), ball.begin(), ball.end());
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

    struct Kernel {
        double peak, inv_two_sigma2, cutoff;
    };
    std::vector<Kernel> kernels(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i)
        kernels[i] = {actions[i].peak(), 1.0 / (2.0 * actions[i].range * actions[i].range),
                      actions[i].cutoff};

    const auto& nodes = rho.mesh->nodes;
    parallel_for(affected.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const std::uint32_t n = affected[k];
            double sum = 0.0;
            // Span order is the deterministic reduction order.
            for (std::size_t i = 0; i < positions.size(); ++i) {
                const double r2 = (nodes[n] - positions[i]).squaredNorm();
                if (r2 <= kernels[i].cutoff * kernels[i].cutoff)
                    sum += kernels[i].peak * std::exp(-r2 * kernels[i].inv_two_sigma2);
            }
            rho[n] += dt * sum;
        }
    });
}

} // namespace hedac
