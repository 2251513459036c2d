#include "defgen/scene.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

namespace defgen {

namespace {

using nlohmann::json;

std::string frame_label(std::size_t k, double t) {
    return "frame " + std::to_string(k) + " (t=" + std::to_string(t) + ")";
}

}  // namespace

void validate_scene(const Scene& scene, const FieldSpec& spec) {
    if (scene.frames.empty())
        throw SceneError(SceneError::Kind::BadStructure, "scene has no frames");

    std::set<int> reference_ids;
    double prev_t = 0.0;
    for (std::size_t k = 0; k < scene.frames.size(); ++k) {
        const OffensiveFrame& f = scene.frames[k];
        if (k > 0 && !(f.t > prev_t))
            throw SceneError(SceneError::Kind::NonMonotoneTime,
                             "timestamps must be strictly increasing at " +
                                 frame_label(k, f.t));
        prev_t = f.t;

        if (f.players.empty())
            throw SceneError(SceneError::Kind::BadStructure,
                             "no players in " + frame_label(k, f.t));

        std::set<int> ids;
        for (const auto& p : f.players) {
            if (!ids.insert(p.id).second)
                throw SceneError(SceneError::Kind::BadStructure,
                                 "duplicate player id " + std::to_string(p.id) +
                                     " in " + frame_label(k, f.t));
            if (!is_finite(p.position) || !in_field(spec, p.position))
                throw SceneError(SceneError::Kind::OutOfBounds,
                                 "player " + std::to_string(p.id) +
                                     " out of bounds in " + frame_label(k, f.t));
        }
        if (ids.count(f.puck_holder) == 0)
            throw SceneError(SceneError::Kind::MissingPuckHolder,
                             "puck holder " + std::to_string(f.puck_holder) +
                                 " not among players in " + frame_label(k, f.t));
        if (k == 0)
            reference_ids = ids;
        else if (ids != reference_ids)
            throw SceneError(SceneError::Kind::BadStructure,
                             "player-id set changed in " + frame_label(k, f.t));
    }

    if (!scene.initial_defenders.empty()) {
        if (scene.initial_defenders.size() != 5)
            throw SceneError(SceneError::Kind::BadStructure,
                             "initial defender list must hold exactly 5 positions");
        for (const Vec2& p : scene.initial_defenders)
            if (!is_finite(p) || !in_field(spec, p))
                throw SceneError(SceneError::Kind::OutOfBounds,
                                 "initial defender position out of bounds");
    }
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SceneError(SceneError::Kind::Parse, "cannot open scene file " + path);

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw SceneError(SceneError::Kind::Parse,
                         "scene parse failure in " + path + ": " + ex.what());
    }

    Scene scene;
    try {
        scene.name = doc.value("name", "");
        scene.source = doc.value("source", "");
        scene.fps = doc.value("fps", 0.0);
        if (doc.contains("defenders"))
            for (const auto& d : doc.at("defenders"))
                scene.initial_defenders.push_back(
                    {d.at(0).get<double>(), d.at(1).get<double>()});
        for (const auto& jf : doc.at("frames")) {
            OffensiveFrame f;
            f.t = jf.at("t").get<double>();
            f.puck_holder = jf.at("puck_holder").get<int>();
            for (const auto& jp : jf.at("players")) {
                OffensivePlayer p;
                p.id = jp.at("id").get<int>();
                p.position = {jp.at("x").get<double>(), jp.at("y").get<double>()};
                f.players.push_back(p);
            }
            std::sort(f.players.begin(), f.players.end(),
                      [](const auto& a, const auto& b) { return a.id < b.id; });
            scene.frames.push_back(std::move(f));
        }
    } catch (const json::exception& ex) {
        throw SceneError(SceneError::Kind::Parse,
                         "scene structure error in " + path + ": " + ex.what());
    }

    validate_scene(scene);
    return scene;
}

void save_scene(const Scene& scene, const std::string& path) {
    json doc;
    doc["name"] = scene.name;
    doc["source"] = scene.source;
    doc["fps"] = scene.fps;
    if (!scene.initial_defenders.empty()) {
        json defs = json::array();
        for (const Vec2& p : scene.initial_defenders)
            defs.push_back(json::array({p.x, p.y}));
        doc["defenders"] = defs;
    }
    json frames = json::array();
    for (const OffensiveFrame& f : scene.frames) {
        json jf;
        jf["t"] = f.t;
        jf["puck_holder"] = f.puck_holder;
        json players = json::array();
        for (const OffensivePlayer& p : f.players)
            players.push_back({{"id", p.id}, {"x", p.position.x}, {"y", p.position.y}});
        jf["players"] = players;
        frames.push_back(jf);
    }
    doc["frames"] = frames;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace defgen
