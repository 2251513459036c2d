#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "defgen/density.hpp"

namespace defgen {

// A recorded (or synthetic) offensive possession: ordered frames with the
// same player-id set throughout. Velocities are not stored; the engine
// derives them when replaying.
struct Scene {
    std::string name;
    std::string source;
    double fps = 0.0;
    std::vector<OffensiveFrame> frames;
    std::vector<Vec2> initial_defenders;  // optional, empty when absent
};

class SceneError : public std::runtime_error {
  public:
    enum class Kind {
        Parse,
        BadStructure,
        OutOfBounds,
        MissingPuckHolder,
        NonMonotoneTime,
    };

    SceneError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// Parses and validates a scene file. Players within each frame are returned
// sorted by id.
Scene load_scene(const std::string& path);

void save_scene(const Scene& scene, const std::string& path);

// Throws SceneError when any scene invariant is broken.
void validate_scene(const Scene& scene, const FieldSpec& spec = {});

}  // namespace defgen
