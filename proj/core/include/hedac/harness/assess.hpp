#pragma once

#include "hedac/harness/scenario.hpp"
#include "hedac/inspection/observation.hpp"

#include <string>

namespace hedac {

struct AssessReport {
    double eta_a = 0.0;
    double eta_a_area_weighted = 0.0;
    ObservationLedger ledger;
    long recordings = 0;
};

/// Re-scores an externally produced trajectory with the scenario's camera
/// and structure: replays the camera recording at every sampled position
/// with the stored camera orientation, honoring the trigger interval. The
/// scenario must define a structure and a camera.
AssessReport assess_trajectory(const Scenario& scenario, const std::string& trajectory_csv);

} // namespace hedac
