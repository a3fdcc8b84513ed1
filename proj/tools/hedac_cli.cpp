// Command-line front end: run full simulations, re-score trajectories,
// export generated domain meshes and validate configurations.

#include "hedac/error.hpp"
#include "hedac/harness/assess.hpp"
#include "hedac/harness/scenario.hpp"
#include "hedac/harness/simulation.hpp"
#include "hedac/io/vtk_writer.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <exception>
#include <string>

namespace {

struct CommonOptions {
    std::string config;
    std::string output_dir;
    int snapshot_every = -1;
    int threads = 0;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("config", opt.config, "scenario configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output-dir", opt.output_dir, "override [output] directory");
    cmd->add_option("--snapshot-every", opt.snapshot_every,
                    "write field snapshots every N steps (0 disables)");
    cmd->add_option("--threads", opt.threads, "worker threads for parallel phases");
    cmd->add_flag("--quiet", opt.quiet, "suppress progress output");
}

hedac::Scenario load(const CommonOptions& opt) {
    hedac::Scenario s = hedac::load_scenario(opt.config);
    if (!opt.output_dir.empty()) s.output_directory = opt.output_dir;
    if (opt.snapshot_every >= 0) s.snapshot_every = opt.snapshot_every;
    if (opt.threads > 0) s.threads = opt.threads;
    return s;
}

int cmd_run(const CommonOptions& opt) {
    const hedac::Scenario scenario = load(opt);
    hedac::Simulation sim(scenario);
    if (!opt.quiet) {
        std::printf("domain: %zu nodes, %zu cells\n", sim.domain().node_count(),
                    sim.domain().cell_count());
        if (sim.structure())
            std::printf("structure: %zu nodes, %zu faces\n", sim.structure()->node_count(),
                        sim.structure()->face_count());
        std::printf("fleet: %zu agents, %ld steps\n", sim.agents().size(),
                    scenario.step_count());
        std::printf("initialization: %.1f s\n", sim.initialization_seconds());
    }
    const hedac::RunReport report = sim.run();
    if (!opt.quiet) {
        std::printf("final eta_v = %.4f", report.final_eta_v);
        if (sim.structure()) std::printf(", eta_a = %.4f", report.final_eta_a);
        std::printf("\nmin distances: agent-agent %.4f, agent-boundary %.4f\n",
                    report.min_agent_agent, report.min_agent_boundary);
        std::printf("artifacts written to %s\n", scenario.output_directory.c_str());
    }
    return 0;
}

int cmd_assess(const CommonOptions& opt, const std::string& trajectory) {
    const hedac::Scenario scenario = load(opt);
    const hedac::AssessReport report = hedac::assess_trajectory(scenario, trajectory);
    std::printf("recordings: %ld\n", report.recordings);
    std::printf("eta_a = %.17g\n", report.eta_a);
    std::printf("eta_a (area weighted) = %.17g\n", report.eta_a_area_weighted);
    return 0;
}

int cmd_mesh(const CommonOptions& opt) {
    hedac::Scenario scenario = load(opt);
    scenario.duration = 0.0; // geometry only
    hedac::Simulation sim(scenario);
    std::filesystem::create_directories(scenario.output_directory);
    const std::string path = scenario.output_directory + "/domain.vtk";
    const hedac::ScalarField& mu0 = sim.target_density();
    hedac::write_vtk_tet_mesh(path, sim.domain(), {{"mu0", &mu0}});
    std::printf("domain: %zu nodes, %zu cells, volume %.6g\n", sim.domain().node_count(),
                sim.domain().cell_count(), sim.domain().total_volume());
    std::printf("mesh written to %s\n", path.c_str());
    return 0;
}

int cmd_info(const CommonOptions& opt) {
    const hedac::Scenario scenario = load(opt);
    hedac::Simulation sim(scenario);
    std::printf("config: %s\n", opt.config.c_str());
    std::printf("domain: %zu nodes, %zu cells, volume %.6g\n", sim.domain().node_count(),
                sim.domain().cell_count(), sim.domain().total_volume());
    if (sim.structure())
        std::printf("structure: %zu nodes, %zu faces\n", sim.structure()->node_count(),
                    sim.structure()->face_count());
    std::printf("fleet: %d agents, speed %.4g m/s, action intensity %.4g, range %.4g m\n",
                scenario.agent_count, scenario.speed, scenario.action_intensity,
                scenario.action_range);
    std::printf("hedac: k = %.4g, dt = %.4g s, duration = %.4g s (%ld steps), epsilon = %.4g m\n",
                scenario.conduction, scenario.dt, scenario.duration, scenario.step_count(),
                scenario.epsilon);
    if (scenario.camera)
        std::printf("camera: cone height %.4g m, diameter %.4g m, trigger every %d steps\n",
                    scenario.camera->cone_height, scenario.camera->cone_diameter,
                    scenario.camera->trigger_interval);
    std::printf("safety margin: epsilon - (speed * dt + agent_radius) = %.6g m\n",
                scenario.epsilon - (scenario.speed * scenario.dt + scenario.agent_radius));
    std::printf("configuration is valid\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"HEDAC multi-agent coverage trajectory planner and inspection scorer"};
    app.require_subcommand(1);

    CommonOptions run_opt, assess_opt, mesh_opt, info_opt;
    std::string trajectory;

    CLI::App* run_cmd = app.add_subcommand("run", "run a full simulation");
    add_common(run_cmd, run_opt);

    CLI::App* assess_cmd =
        app.add_subcommand("assess", "re-score a trajectory CSV with the inspection model");
    add_common(assess_cmd, assess_opt);
    assess_cmd->add_option("trajectory", trajectory, "trajectories.csv produced by run")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* mesh_cmd = app.add_subcommand("mesh", "generate and export the domain mesh");
    add_common(mesh_cmd, mesh_opt);

    CLI::App* info_cmd = app.add_subcommand("info", "validate a config and print derived values");
    add_common(info_cmd, info_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_opt);
        if (assess_cmd->parsed()) return cmd_assess(assess_opt, trajectory);
        if (mesh_cmd->parsed()) return cmd_mesh(mesh_opt);
        if (info_cmd->parsed()) return cmd_info(info_opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
