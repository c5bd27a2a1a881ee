#include "ptopo/svg.hpp"

#include <charconv>
#include <sstream>

namespace ptopo {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string pt(Point p) { return format_double(p.x) + "," + format_double(p.y); }

void emit_primitive(std::ostringstream& out, const Primitive& prim, const std::string& style) {
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                out << "<circle cx=\"" << format_double(g.center.x) << "\" cy=\""
                    << format_double(g.center.y) << "\" r=\"" << format_double(g.radius)
                    << "\" " << style << "/>\n";
            } else if constexpr (std::is_same_v<T, Rect>) {
                out << "<rect x=\"" << format_double(g.xmin) << "\" y=\"" << format_double(g.ymin)
                    << "\" width=\"" << format_double(g.width()) << "\" height=\""
                    << format_double(g.height()) << "\" " << style << "/>\n";
            } else {
                out << "<polygon points=\"";
                for (size_t i = 0; i < g.vertices.size(); ++i) {
                    if (i) out << " ";
                    out << pt(g.vertices[i]);
                }
                out << "\" " << style << "/>\n";
            }
        },
        prim);
}

void emit_scene_layer(std::ostringstream& out, const std::string& id, const Scene& s,
                      const std::string& style) {
    out << "<g id=\"" << id << "\">\n";
    for (const auto& prim : s.primitives) emit_primitive(out, prim, style);
    out << "</g>\n";
}

void emit_raster_layer(std::ostringstream& out, const std::string& id, const RasterGrid& g,
                       const std::string& style) {
    out << "<g id=\"" << id << "\">\n";
    const Frame& f = g.frame();
    // Horizontal runs of occupied cells, row-major.
    for (int iy = 0; iy < g.ny(); ++iy) {
        int ix = 0;
        while (ix < g.nx()) {
            if (!g.occupied(ix, iy)) {
                ++ix;
                continue;
            }
            int end = ix;
            while (end + 1 < g.nx() && g.occupied(end + 1, iy)) ++end;
            const Rect r{f.xmin + ix * f.h, f.ymin + iy * f.h,
                         f.xmin + (end + 1) * f.h, f.ymin + (iy + 1) * f.h};
            out << "<rect x=\"" << format_double(r.xmin) << "\" y=\"" << format_double(r.ymin)
                << "\" width=\"" << format_double(r.width()) << "\" height=\""
                << format_double(r.height()) << "\" " << style << "/>\n";
            ix = end + 1;
        }
    }
    out << "</g>\n";
}

void emit_path(std::ostringstream& out, const PolyPath& p, const std::string& style) {
    out << (p.closed ? "<polygon points=\"" : "<polyline points=\"");
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) out << " ";
        out << pt(p.vertices[i]);
    }
    out << "\" " << style << "/>\n";
}

std::string svg_header(const Frame& f) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << format_double(f.xmin) << " " << format_double(f.ymin) << " "
        << format_double(f.width()) << " " << format_double(f.ny * f.h) << "\">\n";
    // Flip to the usual y-up mathematical orientation.
    out << "<g transform=\"matrix(1 0 0 -1 0 " << format_double(f.ymin + f.ymax()) << ")\">\n";
    return out.str();
}

const char* kFooter = "</g>\n</svg>\n";

} // namespace

std::string render_scene_svg(const SceneDocument& doc) {
    std::ostringstream out;
    out << svg_header(doc.frame);
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    size_t i = 0;
    for (const auto& [name, scene] : doc.sets) {
        const std::string style = std::string("fill=\"") + palette[i % 5] +
                                  "\" fill-opacity=\"0.6\" stroke=\"none\"";
        emit_scene_layer(out, name, scene, style);
        ++i;
    }
    out << kFooter;
    return out.str();
}

std::string render_construction_svg(const Frame& frame, const Scene* k, const Scene* a,
                                    const NeighborhoodResult* nr, const GridCycleSet* gc) {
    std::ostringstream out;
    out << svg_header(frame);
    if (k) emit_scene_layer(out, "K", *k, "fill=\"#1f77b4\" fill-opacity=\"0.8\" stroke=\"none\"");
    if (a) emit_scene_layer(out, "A", *a, "fill=\"#aec7e8\" fill-opacity=\"0.35\" stroke=\"none\"");
    if (nr) {
        out << "<g id=\"W\">\n";
        for (const Disk& d : nr->cover)
            emit_primitive(out, d, "fill=\"#2ca02c\" fill-opacity=\"0.25\" stroke=\"none\"");
        out << "</g>\n";
        out << "<g id=\"rays\">\n";
        for (const auto& r : nr->rays)
            emit_path(out, r.path,
                      "fill=\"none\" stroke=\"#d62728\" stroke-width=\"" +
                          format_double(nr->h / 2) + "\"");
        out << "</g>\n";
        if (nr->v)
            emit_raster_layer(out, "V", *nr->v, "fill=\"#9467bd\" fill-opacity=\"0.45\"");
    }
    if (gc) {
        out << "<g id=\"cycles\">\n";
        for (const auto& c : gc->cycles)
            emit_path(out, c,
                      "fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"" +
                          format_double(gc->eps / 10) + "\"");
        out << "</g>\n";
    }
    out << kFooter;
    return out.str();
}

} // namespace ptopo
