#pragma once

#include "hedac/fields/gaussian_action.hpp"
#include "hedac/types.hpp"

#include <vector>

namespace hedac {

struct AgentState {
    int id = 0;
    Vec3 position = Vec3::Zero();
    double speed = 0.0;            ///< [m/s], constant per agent
    Vec3 direction = Vec3::UnitX(); ///< last applied unit direction
    GaussianAction action;          ///< per-agent coverage kernel
};

struct TrajectorySample {
    double t = 0.0;
    Vec3 position = Vec3::Zero();
    Vec3 direction = Vec3::Zero(); ///< direction applied during the step ending at t
    Vec3 camera = Vec3::Zero();    ///< camera orientation at position (zero without structure)
    double boundary_distance = 0.0;
    double min_neighbor_distance = kInf;
};

struct Trajectory {
    int agent_id = 0;
    std::vector<TrajectorySample> samples;
};

} // namespace hedac
