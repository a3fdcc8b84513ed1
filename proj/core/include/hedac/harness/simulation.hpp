#pragma once

#include "hedac/fields/coverage.hpp"
#include "hedac/fields/scalar_field.hpp"
#include "hedac/geometry/box_mesher.hpp"
#include "hedac/geometry/cell_locator.hpp"
#include "hedac/geometry/distance.hpp"
#include "hedac/geometry/node_grid.hpp"
#include "hedac/harness/scenario.hpp"
#include "hedac/inspection/observation.hpp"
#include "hedac/pde/helmholtz.hpp"
#include "hedac/swarm/agent.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hedac {

struct StepMetrics {
    double t = 0.0;
    double eta_v = 0.0;
    double eta_a = 0.0;
    double min_agent_agent = kInf;
    double min_agent_boundary = kInf;
    double mean_agent_structure = kInf;
};

/// Wall-clock seconds per phase, accumulated over all steps.
struct PhaseTimings {
    double initialization = 0.0;
    double coverage = 0.0;   ///< mu update + rho accumulation
    double potential = 0.0;  ///< Helmholtz solve
    double avoidance = 0.0;  ///< directions, distance checks, advance
    double inspection = 0.0; ///< camera recording
    double output = 0.0;     ///< metrics rows, trajectory rows, snapshots
    double step_total = 0.0; ///< whole loop body

    [[nodiscard]] double phase_sum() const {
        return coverage + potential + avoidance + inspection + output;
    }
};

struct RunReport {
    std::vector<StepMetrics> metrics; ///< one record per step, t = 0 included
    std::vector<Trajectory> trajectories;
    PhaseTimings timings;
    double final_eta_v = 0.0;
    double final_eta_a = 0.0;
    double final_eta_a_area_weighted = 0.0;
    double min_agent_agent = kInf;    ///< over the whole run
    double min_agent_boundary = kInf; ///< over the whole run
    long steps = 0;
};

/// Owns every component of one simulation: meshes, acceleration structures,
/// fields, the assembled PDE system and the fleet. Construction performs all
/// initialization; run() executes the step loop and writes artifacts.
class Simulation {
public:
    explicit Simulation(const Scenario& scenario);

    /// Executes the full loop. Deterministic for a fixed config and seed.
    /// Writes metrics.csv, trajectories.csv, report.txt, surface counts and
    /// optional field snapshots into the scenario's output directory.
    RunReport run();

    [[nodiscard]] const TetMesh& domain() const { return domain_; }
    [[nodiscard]] const SurfaceMesh* structure() const {
        return structure_ ? &*structure_ : nullptr;
    }
    [[nodiscard]] const Bvh* structure_bvh() const {
        return structure_bvh_ ? &*structure_bvh_ : nullptr;
    }
    [[nodiscard]] const ScalarField& target_density() const { return mu0_; }
    [[nodiscard]] const std::vector<AgentState>& agents() const { return agents_; }
    [[nodiscard]] const HelmholtzSystem& system() const { return *system_; }
    [[nodiscard]] double initialization_seconds() const { return init_seconds_; }

private:
    void build_domain();
    void build_target();
    void place_agents();
    StepMetrics make_metrics(double t, const ScalarField& mu,
                             const std::vector<double>& boundary_distances,
                             const std::vector<double>& neighbor_distances) const;
    void write_artifacts(const RunReport& report) const;

    Scenario scenario_;
    TetMesh domain_;
    std::optional<SurfaceMesh> structure_;
    std::optional<Bvh> structure_bvh_;
    std::optional<Bvh> boundary_bvh_;
    std::unique_ptr<CellLocator> locator_;
    std::unique_ptr<NodeGrid> node_grid_;
    std::unique_ptr<HelmholtzSystem> system_;
    ScalarField mu0_;
    ScalarField rho_;
    std::vector<AgentState> agents_;
    ObservationLedger ledger_;
    double init_seconds_ = 0.0;
};

/// Convenience wrapper: build and run in one call.
RunReport run(const Scenario& scenario);

} // namespace hedac
