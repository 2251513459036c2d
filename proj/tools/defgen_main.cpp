#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "defgen/engine.hpp"
#include "defgen/svg.hpp"
#include "defgen/trace_io.hpp"

namespace {

using namespace defgen;

char frame_name_buf[64];

std::string frame_file(const std::string& dir, long k) {
    std::snprintf(frame_name_buf, sizeof(frame_name_buf), "frame_%05ld.svg", k);
    return dir + "/" + frame_name_buf;
}

int cmd_simulate(const std::string& scene_path, const SimParams& params,
                 const std::string& out_dir, long svg_every) {
    const Scene scene = load_scene(scene_path);
    std::filesystem::create_directories(out_dir);

    const SimTrace trace = run(scene, params);
    write_trace(trace, out_dir + "/trace.csv");

    if (svg_every > 0) {
        const Grid grid = make_grid(params.field, params.grid_resolution);
        for (long k = 0; k < static_cast<long>(trace.steps.size());
             k += svg_every) {
            const StepRecord& rec = trace.steps[k];
            const OffensiveFrame frame =
                offense_at(scene, rec.t, params.dt, params.offense_speed_cap);
            const WeightField phi = build_weight_field(
                frame, params.density, grid, params.field, params.threads);
            const VoronoiPartition part =
                assign_voronoi(rec.defenders, grid, params.threads);
            std::vector<PasscutPair> pairs;
            for (std::size_t i = 0; i < rec.paired_with.size(); ++i)
                if (rec.paired_with[i] >= 0)
                    pairs.push_back({rec.defenders[i].id, rec.paired_with[i]});
            render_svg(frame, rec.defenders, phi, part, pairs, params.cbf,
                       frame_file(out_dir, k), params.field);
        }
    }
    std::cout << "wrote " << trace.steps.size() << " steps to " << out_dir
              << "/trace.csv\n";
    return 0;
}

int cmd_weightfield(const std::string& scene_path, long frame_idx,
                    const SimParams& params, const std::string& out_svg,
                    const std::string& out_csv) {
    const Scene scene = load_scene(scene_path);
    if (frame_idx < 0 || frame_idx >= static_cast<long>(scene.frames.size()))
        throw SceneError(SceneError::Kind::BadStructure,
                         "frame index out of range");
    // Velocities for the chosen frame come from the previous scene frame.
    const double t = scene.frames[frame_idx].t;
    double dt = params.dt;
    if (frame_idx > 0) dt = t - scene.frames[frame_idx - 1].t;
    const OffensiveFrame frame =
        offense_at(scene, t, dt, params.offense_speed_cap);

    const Grid grid = make_grid(params.field, params.grid_resolution);
    const WeightField phi =
        build_weight_field(frame, params.density, grid, params.field, params.threads);
    render_weight_svg(phi, frame, out_svg, params.field);
    if (!out_csv.empty()) write_weight_csv(phi, out_csv);
    std::cout << "wrote " << out_svg << '\n';
    return 0;
}

int cmd_validate(const std::string& scene_path) {
    const Scene scene = load_scene(scene_path);
    std::cout << scene_path << ": ok (" << scene.frames.size() << " frames, "
              << scene.frames.front().players.size() << " players)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ice-hockey defensive formation generator"};
    app.require_subcommand(1);

    SimParams params;
    std::string scene_path;
    std::string out_dir;
    std::string out_file;
    std::string out_csv;
    long svg_every = 0;
    long frame_idx = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scene", scene_path, "scene file")->required();
        cmd->add_option("--p-gain", params.density.p_gain, "house gain p");
        cmd->add_option("--grid-res", params.grid_resolution,
                        "grid resolution [m]");
        cmd->add_option("--threads", params.threads, "worker threads");
    };

    CLI::App* sim = app.add_subcommand("simulate", "replay a scene");
    add_common(sim);
    sim->add_option("--dt", params.dt, "time step [s]");
    sim->add_option("--out", out_dir, "output directory")->required();
    sim->add_option("--svg-every", svg_every, "render every Nth step");

    CLI::App* wf = app.add_subcommand("weightfield", "render the weight field");
    add_common(wf);
    wf->add_option("--frame", frame_idx, "scene frame index");
    wf->add_option("--out", out_file, "output SVG path")->required();
    wf->add_option("--csv", out_csv, "also dump a dense CSV");

    CLI::App* val = app.add_subcommand("validate", "check a scene file");
    val->add_option("--scene", scene_path, "scene file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(scene_path, params, out_dir, svg_every);
        if (wf->parsed())
            return cmd_weightfield(scene_path, frame_idx, params, out_file, out_csv);
        if (val->parsed()) return cmd_validate(scene_path);
    } catch (const defgen::SceneError& ex) {
        std::cerr << "scene error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
