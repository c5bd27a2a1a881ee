#include "ptopo/scene_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ptopo/error.hpp"

namespace ptopo {

using json = nlohmann::ordered_json;

namespace {

double get_number(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key))
        throw InputError(path + ": missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw InputError(path + "." + key + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw InputError(path + "." + key + ": non-finite value");
    return d;
}

Primitive parse_primitive(const json& j, const std::string& path) {
    if (!j.is_object()) throw InputError(path + ": expected an object");
    if (!j.contains("type") || !j.at("type").is_string())
        throw InputError(path + ": missing string field 'type'");
    const std::string type = j.at("type").get<std::string>();

    Primitive prim;
    if (type == "disk") {
        Disk d;
        d.center = {get_number(j, "cx", path), get_number(j, "cy", path)};
        d.radius = get_number(j, "r", path);
        prim = d;
    } else if (type == "rect") {
        Rect r;
        r.xmin = get_number(j, "xmin", path);
        r.ymin = get_number(j, "ymin", path);
        r.xmax = get_number(j, "xmax", path);
        r.ymax = get_number(j, "ymax", path);
        prim = r;
    } else if (type == "polygon") {
        if (!j.contains("vertices") || !j.at("vertices").is_array())
            throw InputError(path + ": missing array field 'vertices'");
        Polygon p;
        const json& vs = j.at("vertices");
        for (size_t i = 0; i < vs.size(); ++i) {
            const json& v = vs[i];
            const std::string vp = path + ".vertices[" + std::to_string(i) + "]";
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw InputError(vp + ": expected [x, y]");
            const Point pt{v[0].get<double>(), v[1].get<double>()};
            if (!finite(pt)) throw InputError(vp + ": non-finite coordinate");
            p.vertices.push_back(pt);
        }
        prim = p;
    } else {
        throw InputError(path + ".type: unknown primitive type '" + type + "'");
    }
    validate_primitive(prim, path);
    return prim;
}

} // namespace

const Scene& SceneDocument::require(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end())
        throw InputError("scene document has no set named '" + name + "'");
    return it->second;
}

SceneDocument parse_scene(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("top level: expected an object");
    if (!j.contains("frame") || !j.at("frame").is_object())
        throw InputError("frame: missing object");
    const json& jf = j.at("frame");
    const double xmin = get_number(jf, "xmin", "frame");
    const double ymin = get_number(jf, "ymin", "frame");
    const double xmax = get_number(jf, "xmax", "frame");
    const double ymax = get_number(jf, "ymax", "frame");
    const double h = get_number(jf, "h", "frame");
    if (!(h > 0)) throw InputError("frame.h: must be positive");
    if (!(xmax > xmin) || !(ymax > ymin))
        throw InputError("frame: corners must be ordered (xmin < xmax, ymin < ymax)");

    SceneDocument doc;
    try {
        doc.frame = Frame(Rect{xmin, ymin, xmax, ymax}, h);
    } catch (const GeometryError& e) {
        throw InputError(std::string("frame: ") + e.what());
    }

    if (!j.contains("sets") || !j.at("sets").is_object())
        throw InputError("sets: missing object");
    for (const auto& [name, arr] : j.at("sets").items()) {
        if (!arr.is_array())
            throw InputError("sets." + name + ": expected an array of primitives");
        Scene s;
        for (size_t i = 0; i < arr.size(); ++i)
            s.primitives.push_back(
                parse_primitive(arr[i], "sets." + name + "[" + std::to_string(i) + "]"));
        if (!s.empty() && !doc.frame.contains_with_margin(scene_bbox(s)))
            throw InputError("sets." + name + ": set exceeds the frame's 2h margin");
        doc.sets.emplace(name, std::move(s));
    }
    return doc;
}

SceneDocument load_scene_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open scene file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

std::string serialize_scene(const SceneDocument& doc) {
    json j;
    j["frame"] = {{"xmin", doc.frame.xmin},
                  {"ymin", doc.frame.ymin},
                  {"xmax", doc.frame.xmax()},
                  {"ymax", doc.frame.ymax()},
                  {"h", doc.frame.h}};
    json sets = json::object();
    for (const auto& [name, scene] : doc.sets) {
        json arr = json::array();
        for (const auto& prim : scene.primitives) {
            std::visit(
                [&](const auto& g) {
                    using T = std::decay_t<decltype(g)>;
                    if constexpr (std::is_same_v<T, Disk>) {
                        arr.push_back({{"type", "disk"},
                                       {"cx", g.center.x},
                                       {"cy", g.center.y},
                                       {"r", g.radius}});
                    } else if constexpr (std::is_same_v<T, Rect>) {
                        arr.push_back({{"type", "rect"},
                                       {"xmin", g.xmin},
                                       {"ymin", g.ymin},
                                       {"xmax", g.xmax},
                                       {"ymax", g.ymax}});
                    } else {
                        json vs = json::array();
                        for (const Point& p : g.vertices) vs.push_back({p.x, p.y});
                        arr.push_back({{"type", "polygon"}, {"vertices", vs}});
                    }
                },
                prim);
        }
        sets[name] = arr;
    }
    j["sets"] = sets;
    return j.dump(2) + "\n";
}

} // namespace ptopo
