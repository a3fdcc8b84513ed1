#include "hedac/harness/scenario.hpp"

#include "hedac/error.hpp"
#include "hedac/harness/config_file.hpp"

#include <cmath>
#include <filesystem>

namespace hedac {

long Scenario::step_count() const {
    return std::lround(duration / dt);
}

std::string Scenario::resolve_path(const std::string& relative) const {
    std::filesystem::path p(relative);
    if (p.is_absolute() || config_directory.empty()) return relative;
    return (std::filesystem::path(config_directory) / p).string();
}

void Scenario::validate() const {
    if (!domain_box && domain_mesh_file.empty())
        throw ValidationError("[domain] needs either box_min/box_max/resolution or mesh");
    if (domain_box) {
        for (int k = 0; k < 3; ++k) {
            if (domain_box->max[k] <= domain_box->min[k])
                throw ValidationError("[domain] box is empty along axis " + std::to_string(k));
            if (domain_resolution[k] < 2)
                throw ValidationError("[domain] resolution must be >= 2 per axis");
        }
    }
    if (target_kind == TargetKind::inspection && structure_mesh_file.empty())
        throw ValidationError("[target] type = inspection requires a [structure] mesh");
    if (target_kind == TargetKind::inspection &&
        (inspection_distance <= 0.0 || inspection_broadness <= 0.0))
        throw ValidationError("[target] d_m and d_sigma must be > 0");

    if (agent_count < 1) throw ValidationError("[fleet] count must be >= 1");
    if (speed <= 0.0) throw ValidationError("[fleet] speed must be > 0");
    if (agent_radius < 0.0) throw ValidationError("[fleet] agent_radius must be >= 0");
    if (!initial_positions.empty() &&
        initial_positions.size() != static_cast<std::size_t>(agent_count))
        throw ValidationError("[fleet] positions count does not match count");

    if (conduction <= 0.0) throw ValidationError("[hedac] k must be > 0");
    if (dt <= 0.0) throw ValidationError("[hedac] dt must be > 0");
    if (duration < 0.0) throw ValidationError("[hedac] duration must be >= 0");
    const double steps = duration / dt;
    if (std::abs(steps - std::round(steps)) > 1e-9)
        throw ValidationError("[hedac] duration / dt must be a whole number of steps");
    if (epsilon <= 0.0) throw ValidationError("[hedac] epsilon must be > 0");

    // Safety inequality: epsilon > v*dt + M, otherwise one step can jump
    // through the avoidance shell.
    if (!unsafe_step_override && epsilon <= speed * dt + agent_radius)
        throw ValidationError(
            "[hedac] safety inequality violated: epsilon (" + std::to_string(epsilon) +
            ") must exceed speed * dt + agent_radius (" + std::to_string(speed * dt) + " + " +
            std::to_string(agent_radius) +
            "); set [hedac] unsafe_step_override = true to run anyway");

    if (camera) camera->validate();
    if (action_intensity <= 0.0 || action_range <= 0.0)
        throw ValidationError("[fleet] action_intensity and action_range must be > 0");
}

Scenario load_scenario(const std::string& path) {
    const ConfigFile cfg = ConfigFile::parse(path);
    Scenario s;
    s.config_directory = std::filesystem::path(path).parent_path().string();

    // [domain]
    if (cfg.has("domain", "mesh")) {
        s.domain_mesh_file = cfg.get_string("domain", "mesh");
    } else {
        Aabb box;
        box.min = cfg.get_vec3("domain", "box_min");
        box.max = cfg.get_vec3("domain", "box_max");
        s.domain_box = box;
        s.domain_resolution = cfg.get_vec3i("domain", "resolution");
    }
    s.exclude_structure = cfg.get_or("domain", "exclude_structure", true);

    // [structure]
    if (cfg.has_section("structure")) s.structure_mesh_file = cfg.get_string("structure", "mesh");

    // [target]
    const std::string kind = cfg.get_string("target", "type");
    if (kind == "box") {
        s.target_kind = Scenario::TargetKind::box;
        s.target_box.min = cfg.get_vec3("target", "box_min");
        s.target_box.max = cfg.get_vec3("target", "box_max");
    } else if (kind == "inspection") {
        s.target_kind = Scenario::TargetKind::inspection;
        s.inspection_distance = cfg.get_double("target", "d_m");
        s.inspection_broadness = cfg.get_double("target", "d_sigma");
    } else {
        throw ValidationError("config field [target] type: expected 'box' or 'inspection', got '" +
                              kind + "'");
    }

    // [fleet]
    s.agent_count = static_cast<int>(cfg.get_int("fleet", "count"));
    s.speed = cfg.get_double("fleet", "speed");
    s.action_intensity = cfg.get_double("fleet", "action_intensity");
    s.action_range = cfg.get_double("fleet", "action_range");
    s.agent_radius = cfg.get_or("fleet", "agent_radius", 0.0);
    if (cfg.has("fleet", "positions")) {
        s.initial_positions = cfg.get_vec3_list("fleet", "positions");
    } else {
        s.spawn_box.min = cfg.get_vec3("fleet", "spawn_min");
        s.spawn_box.max = cfg.get_vec3("fleet", "spawn_max");
    }
    s.seed = static_cast<std::uint64_t>(cfg.get_or("fleet", "seed", 0L));

    // [hedac]
    s.conduction = cfg.get_double("hedac", "k");
    s.dt = cfg.get_double("hedac", "dt");
    s.duration = cfg.get_double("hedac", "duration");
    s.epsilon = cfg.get_double("hedac", "epsilon");
    s.unsafe_step_override = cfg.get_or("hedac", "unsafe_step_override", false);
    const std::string solver = cfg.get_or("hedac", "solver", std::string("direct"));
    if (solver == "direct") {
        s.solver = HelmholtzSolver::direct;
    } else if (solver == "cg") {
        s.solver = HelmholtzSolver::cg;
    } else {
        throw ValidationError("config field [hedac] solver: expected 'direct' or 'cg', got '" +
                              solver + "'");
    }

    // [camera]
    if (cfg.has_section("camera")) {
        CameraModel cam;
        cam.cone_height = cfg.get_double("camera", "cone_height");
        cam.cone_diameter = cfg.get_double("camera", "cone_diameter");
        cam.trigger_interval = static_cast<int>(cfg.get_or("camera", "trigger_interval", 1L));
        s.camera = cam;
    }

    // [output]
    s.output_directory = cfg.get_or("output", "directory", std::string("out"));
    s.snapshot_every = static_cast<int>(cfg.get_or("output", "snapshot_every", 0L));
    s.threads = static_cast<int>(cfg.get_or("output", "threads", 1L));

    cfg.ensure_all_consumed();
    s.validate();
    return s;
}

} // namespace hedac
