#ifndef PTOPO_SCENE_IO_HPP
#define PTOPO_SCENE_IO_HPP

#include <map>
#include <string>

#include "ptopo/frame.hpp"
#include "ptopo/geometry.hpp"

namespace ptopo {

// A parsed scene document: named sets over a shared frame. Map order is
// lexicographic, which keeps serialization deterministic.
struct SceneDocument {
    Frame frame;
    std::map<std::string, Scene> sets;

    const Scene& require(const std::string& name) const;
};

// Parses the JSON scene document. Errors carry the offending field path
// ("sets.K[2].r"). Every set must fit the frame with the 2h margin.
SceneDocument parse_scene(const std::string& text);
SceneDocument load_scene_file(const std::string& path);

std::string serialize_scene(const SceneDocument& doc);

} // namespace ptopo

#endif
