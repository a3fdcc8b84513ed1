#include "hedac/harness/simulation.hpp"

#include "hedac/error.hpp"
#include "hedac/io/vtk_writer.hpp"
#include "hedac/swarm/motion.hpp"
#include "hedac/util/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

namespace hedac {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_or_throw(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "w"));
    if (!f) throw Error("cannot write " + path);
    return f;
}

} // namespace

Simulation::Simulation(const Scenario& scenario) : scenario_(scenario) {
    const auto t0 = Clock::now();
    scenario_.validate();

    if (!scenario_.structure_mesh_file.empty()) {
        structure_ = load_surface_mesh(scenario_.resolve_path(scenario_.structure_mesh_file));
        structure_bvh_ = Bvh::build(structure_->nodes, structure_->faces);
        ledger_ = ObservationLedger(structure_->node_count());
    }

    build_domain();
    locator_ = std::make_unique<CellLocator>(domain_);
    node_grid_ = std::make_unique<NodeGrid>(domain_.nodes);
    if (!domain_.pure_box) boundary_bvh_ = build_boundary_bvh(domain_);

    build_target();
    rho_ = ScalarField(domain_, 0.0);
    system_ = std::make_unique<HelmholtzSystem>(domain_, scenario_.conduction, scenario_.solver);

    place_agents();
    init_seconds_ = seconds_since(t0);
}

void Simulation::build_domain() {
    if (!scenario_.domain_mesh_file.empty()) {
        domain_ = load_tet_mesh_msh(scenario_.resolve_path(scenario_.domain_mesh_file));
        return;
    }
    const SurfaceMesh* exclude =
        (structure_ && scenario_.exclude_structure) ? &*structure_ : nullptr;
    domain_ = build_box_tet_mesh(*scenario_.domain_box, scenario_.domain_resolution, exclude);
    domain_.validate();
}

void Simulation::build_target() {
    if (scenario_.target_kind == Scenario::TargetKind::box) {
        mu0_ = build_target_density_box(domain_, scenario_.target_box);
        return;
    }
    // Inspection shell around the structure at d_m.
    ScalarField d_s(domain_);
    parallel_for(domain_.node_count(), scenario_.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            d_s[i] = distance_to_surface(domain_.nodes[i], *structure_bvh_).distance;
    });
    mu0_ = build_target_density_inspection(domain_, d_s, scenario_.inspection_distance,
                                           scenario_.inspection_broadness);
}

void Simulation::place_agents() {
    agents_.clear();
    agents_.reserve(scenario_.agent_count);
    std::mt19937_64 rng(scenario_.seed);

    auto make_agent = [&](int id, const Vec3& p) {
        AgentState a;
        a.id = id;
        a.position = p;
        a.speed = scenario_.speed;
        a.action = GaussianAction(scenario_.action_intensity, scenario_.action_range);
        // Deterministic initial heading; used only until the first gradient.
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Vec3 dir;
        do {
            dir = Vec3(u(rng), u(rng), u(rng));
        } while (dir.norm() < 1e-6);
        a.direction = dir.normalized();
        return a;
    };

    if (!scenario_.initial_positions.empty()) {
        for (int i = 0; i < scenario_.agent_count; ++i) {
            const Vec3& p = scenario_.initial_positions[i];
            if (!locator_->inside(p))
                throw ValidationError("[fleet] positions: agent " + std::to_string(i) +
                                      " starts outside the domain");
            agents_.push_back(make_agent(i, p));
        }
        return;
    }

    // Seeded rejection sampling: inside the domain, epsilon off the
    // boundary, pairwise spacing 2*epsilon.
    std::uniform_real_distribution<double> ux(scenario_.spawn_box.min.x(),
                                              scenario_.spawn_box.max.x());
    std::uniform_real_distribution<double> uy(scenario_.spawn_box.min.y(),
                                              scenario_.spawn_box.max.y());
    std::uniform_real_distribution<double> uz(scenario_.spawn_box.min.z(),
                                              scenario_.spawn_box.max.z());
    const double eps = scenario_.epsilon;
    const long max_attempts = 100000L * scenario_.agent_count;
    long attempts = 0;
    while (agents_.size() < static_cast<std::size_t>(scenario_.agent_count)) {
        if (++attempts > max_attempts)
            throw ValidationError("could not place the fleet: spawn box too small for the "
                                  "requested count and spacing");
        const Vec3 p(ux(rng), uy(rng), uz(rng));
        if (!locator_->inside(p)) continue;
        const Bvh* bbvh = boundary_bvh_ ? &*boundary_bvh_ : nullptr;
        if (distance_to_boundary(p, domain_, bbvh).distance < eps) continue;
        bool clear = true;
        for (const AgentState& other : agents_) {
            if ((other.position - p).norm() < 2.0 * eps) {
                clear = false;
                break;
            }
        }
        if (!clear) continue;
        agents_.push_back(make_agent(static_cast<int>(agents_.size()), p));
    }
}

StepMetrics Simulation::make_metrics(double t, const ScalarField& mu,
                                     const std::vector<double>& boundary_distances,
                                     const std::vector<double>& neighbor_distances) const {
    StepMetrics m;
    m.t = t;
    m.eta_v = spatial_coverage(mu);
    m.eta_a = structure_ ? surface_coverage(ledger_) : 0.0;
    for (double d : boundary_distances) m.min_agent_boundary = std::min(m.min_agent_boundary, d);
    for (double d : neighbor_distances) m.min_agent_agent = std::min(m.min_agent_agent, d);
    if (structure_bvh_) {
        double sum = 0.0;
        for (const AgentState& a : agents_)
            sum += distance_to_surface(a.position, *structure_bvh_).distance;
        m.mean_agent_structure = sum / static_cast<double>(agents_.size());
    }
    return m;
}

RunReport Simulation::run() {
    RunReport report;
    report.steps = scenario_.step_count();
    report.timings.initialization = init_seconds_;

    const double dt = scenario_.dt;
    const double eps = scenario_.epsilon;
    const int threads = scenario_.threads;
    const Bvh* bbvh = boundary_bvh_ ? &*boundary_bvh_ : nullptr;

    report.trajectories.resize(agents_.size());
    for (std::size_t i = 0; i < agents_.size(); ++i)
        report.trajectories[i].agent_id = agents_[i].id;

    std::vector<Vec3> positions(agents_.size());
    std::vector<GaussianAction> actions(agents_.size());
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        positions[i] = agents_[i].position;
        actions[i] = agents_[i].action;
    }

    // Per-step distance bookkeeping for metrics and trajectories.
    std::vector<double> boundary_distances(agents_.size());
    std::vector<double> neighbor_distances(agents_.size());
    std::vector<Vec3> directions(agents_.size(), Vec3::Zero());

    auto record_state = [&](double t) {
        for (std::size_t i = 0; i < agents_.size(); ++i) {
            TrajectorySample s;
            s.t = t;
            s.position = agents_[i].position;
            s.direction = directions[i];
            if (structure_bvh_) s.camera = camera_orientation(agents_[i].position, *structure_bvh_);
            s.boundary_distance = boundary_distances[i];
            s.min_neighbor_distance = neighbor_distances[i];
            report.trajectories[i].samples.push_back(s);
        }
    };

    auto refresh_distances = [&]() {
        for (std::size_t i = 0; i < agents_.size(); ++i) {
            const DistanceReport rep = min_distances(i, positions, domain_, bbvh);
            boundary_distances[i] = rep.boundary;
            neighbor_distances[i] = rep.min_neighbor;
        }
    };

    // t = 0 record.
    ScalarField mu = remaining_density(mu0_, rho_);
    refresh_distances();
    for (std::size_t i = 0; i < agents_.size(); ++i) directions[i] = agents_[i].direction;
    report.metrics.push_back(make_metrics(0.0, mu, boundary_distances, neighbor_distances));
    record_state(0.0);

    const long steps = scenario_.step_count();
    const auto loop_start = Clock::now();
    for (long step = 1; step <= steps; ++step) {
        const double t = static_cast<double>(step) * dt;
        const auto step_start = Clock::now();
        try {
            // Potential from the current remaining density.
            auto phase = Clock::now();
            const PotentialField psi = system_->solve(mu);
            report.timings.potential += seconds_since(phase);

            // Directions from the same start-of-step snapshot, then a
            // synchronous advance.
            phase = Clock::now();
            std::vector<std::optional<Vec3>> avoidance(agents_.size());
            std::vector<DistanceReport> reports(agents_.size());
            parallel_for(agents_.size(), threads, [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                    const Vec3 u = preferred_direction(agents_[i], psi, *locator_);
                    reports[i] = min_distances(i, positions, domain_, bbvh);
                    std::optional<Vec3> w;
                    if (reports[i].overall() < 2.0 * eps) {
                        const Vec3 away =
                            distance_to_boundary(positions[i], domain_, bbvh).direction;
                        const AvoidanceProblem problem = build_avoidance_problem(
                            i, positions, u, reports[i], away, eps);
                        w = solve_avoidance(problem);
                        directions[i] = step_direction(u, w, reports[i].overall(), eps);
                    } else {
                        directions[i] = u;
                    }
                }
            });
            for (std::size_t i = 0; i < agents_.size(); ++i) {
                advance(agents_[i], directions[i], dt, *locator_);
                positions[i] = agents_[i].position;
            }
            report.timings.avoidance += seconds_since(phase);

            // Coverage deposit at the positions just reached.
            phase = Clock::now();
            accumulate_coverage(rho_, positions, actions, dt, *node_grid_, threads);
            mu = remaining_density(mu0_, rho_);
            report.timings.coverage += seconds_since(phase);

            // Camera recording.
            if (structure_ && scenario_.camera &&
                step % scenario_.camera->trigger_interval == 0) {
                phase = Clock::now();
                for (const AgentState& a : agents_) {
                    const Vec3 z = camera_orientation(a.position, *structure_bvh_);
                    record_view(a.position, z, *scenario_.camera, *structure_, *structure_bvh_,
                                ledger_, threads);
                }
                report.timings.inspection += seconds_since(phase);
            }

            // Metrics, trajectories, snapshots.
            phase = Clock::now();
            refresh_distances();
            report.metrics.push_back(make_metrics(t, mu, boundary_distances, neighbor_distances));
            record_state(t);
            if (scenario_.snapshot_every > 0 && step % scenario_.snapshot_every == 0) {
                const std::string dir = scenario_.output_directory + "/snapshots";
                std::filesystem::create_directories(dir);
                char name[64];
                std::snprintf(name, sizeof(name), "/fields_%06ld.vtk", step);
                write_vtk_tet_mesh(dir + name, domain_,
                                   {{"psi", &psi}, {"rho", &rho_}, {"mu", &mu}});
            }
            report.timings.output += seconds_since(phase);
        } catch (const Error& e) {
            throw Error("step " + std::to_string(step) + " (t = " + std::to_string(t) +
                        "): " + e.what());
        }
        report.timings.step_total += seconds_since(step_start);
    }
    (void)loop_start;

    for (const StepMetrics& m : report.metrics) {
        report.min_agent_agent = std::min(report.min_agent_agent, m.min_agent_agent);
        report.min_agent_boundary = std::min(report.min_agent_boundary, m.min_agent_boundary);
    }
    report.final_eta_v = report.metrics.back().eta_v;
    report.final_eta_a = report.metrics.back().eta_a;
    if (structure_)
        report.final_eta_a_area_weighted = surface_coverage_area_weighted(ledger_, *structure_);

    write_artifacts(report);
    return report;
}

void Simulation::write_artifacts(const RunReport& report) const {
    namespace fs = std::filesystem;
    fs::create_directories(scenario_.output_directory);

    {
        FilePtr f = open_or_throw(scenario_.output_directory + "/metrics.csv");
        std::fprintf(f.get(),
                     "t,eta_v,eta_a,min_agent_agent,min_agent_boundary,mean_agent_structure\n");
        for (const StepMetrics& m : report.metrics)
            std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", m.t, m.eta_v, m.eta_a,
                         m.min_agent_agent, m.min_agent_boundary, m.mean_agent_structure);
    }

    {
        FilePtr f = open_or_throw(scenario_.output_directory + "/trajectories.csv");
        std::fprintf(f.get(), "agent_id,t,x,y,z,ux,uy,uz,zx,zy,zz,d_b,d_min_neighbor\n");
        const std::size_t samples =
            report.trajectories.empty() ? 0 : report.trajectories[0].samples.size();
        for (std::size_t s = 0; s < samples; ++s) {
            for (const Trajectory& tr : report.trajectories) {
                const TrajectorySample& r = tr.samples[s];
                std::fprintf(f.get(),
                             "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                             "%.17g,%.17g\n",
                             tr.agent_id, r.t, r.position.x(), r.position.y(), r.position.z(),
                             r.direction.x(), r.direction.y(), r.direction.z(), r.camera.x(),
                             r.camera.y(), r.camera.z(), r.boundary_distance,
                             r.min_neighbor_distance);
            }
        }
    }

    if (structure_) {
        write_vtk_surface_counts(scenario_.output_directory + "/surface_counts.vtk", *structure_,
                                 ledger_);
    }

    {
        FilePtr f = open_or_throw(scenario_.output_directory + "/report.txt");
        const PhaseTimings& tm = report.timings;
        std::fprintf(f.get(), "steps: %ld\n", report.steps);
        std::fprintf(f.get(), "domain nodes: %zu\ndomain cells: %zu\n", domain_.node_count(),
                     domain_.cell_count());
        if (structure_)
            std::fprintf(f.get(), "structure nodes: %zu\nstructure faces: %zu\n",
                         structure_->node_count(), structure_->face_count());
        std::fprintf(f.get(), "final eta_v: %.6f\n", report.final_eta_v);
        if (structure_) {
            std::fprintf(f.get(), "final eta_a: %.6f\n", report.final_eta_a);
            std::fprintf(f.get(), "final eta_a (area weighted): %.6f\n",
                         report.final_eta_a_area_weighted);
        }
        std::fprintf(f.get(), "min agent-agent distance: %.6f\n", report.min_agent_agent);
        std::fprintf(f.get(), "min agent-boundary distance: %.6f\n", report.min_agent_boundary);
        std::fprintf(f.get(), "\ntimings [s]\n");
        std::fprintf(f.get(), "  initialization: %.3f\n", tm.initialization);
        std::fprintf(f.get(), "  coverage:       %.3f\n", tm.coverage);
        std::fprintf(f.get(), "  potential:      %.3f\n", tm.potential);
        std::fprintf(f.get(), "  avoidance:      %.3f\n", tm.avoidance);
        std::fprintf(f.get(), "  inspection:     %.3f\n", tm.inspection);
        std::fprintf(f.get(), "  output:         %.3f\n", tm.output);
        std::fprintf(f.get(), "  step total:     %.3f\n", tm.step_total);
    }
}

RunReport run(const Scenario& scenario) {
    Simulation sim(scenario);
    return sim.run();
}

} // namespace hedac
