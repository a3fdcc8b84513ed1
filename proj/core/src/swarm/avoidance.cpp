#include "hedac/swarm/avoidance.hpp"

#include "hedac/error.hpp"

#include <cmath>
#include <string>

namespace hedac {
namespace {

constexpr double kFeasTol = 1e-12;
constexpr double kTinyNorm = 1e-14;

bool feasible(const std::vector<Vec3>& rows, const Vec3& w) {
    for (const Vec3& r : rows) {
        if (r.dot(w) < -kFeasTol) return false;
    }
    return true;
}

/// Deterministic unit vector orthogonal to v.
Vec3 any_orthogonal(const Vec3& v) {
    const Vec3 pivot = std::abs(v.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    return v.cross(pivot).normalized();
}

} // namespace

void AvoidanceProblem::validate() const {
    if (rows.empty()) throw ValidationError("avoidance problem needs at least one constraint row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::abs(rows[i].norm() - 1.0) > 1e-9)
            throw ValidationError("constraint row " + std::to_string(i) + " is not unit-norm");
    }
}

std::optional<Vec3> solve_avoidance(const AvoidanceProblem& problem) {
    const auto& rows = problem.rows;
    const Vec3& c = problem.objective;
    if (c.norm() < kTinyNorm) return std::nullopt; // undefined goal: stand still

    double best_obj = -kInf;
    Vec3 best = Vec3::Zero();
    bool found = false;
    auto consider = [&](const Vec3& candidate) {
        const double n = candidate.norm();
        if (n < kTinyNorm) return;
        const Vec3 w = candidate / n;
        if (!feasible(rows, w)) return;
        const double obj = c.dot(w);
        if (!found || obj > best_obj) {
            found = true;
            best_obj = obj;
            best = w;
        }
    };

    // Interior optimum.
    consider(c);

    // One active constraint: c projected onto the plane row . w = 0.
    for (const Vec3& r : rows) {
        const Vec3 proj = c - c.dot(r) * r;
        if (proj.norm() >= kTinyNorm) {
            consider(proj);
        } else {
            // c parallel to the row: every plane direction ties; offer a
            // deterministic basis so a feasible candidate still exists.
            const Vec3 u1 = any_orthogonal(r);
            const Vec3 u2 = r.cross(u1);
            consider(u1);
            consider(-u1);
            consider(u2);
            consider(-u2);
        }
    }

    // Two active constraints: edges of the cone.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Vec3 edge = rows[i].cross(rows[j]);
            if (edge.norm() < kTinyNorm) continue;
            consider(edge);
            consider(-edge);
        }
    }

    if (!found) return std::nullopt;
    return best;
}

} // namespace hedac
