#include "ptopo/raster.hpp"

#include <algorithm>
#include <cmath>

#include "ptopo/error.hpp"

namespace ptopo {

const char* to_string(RasterMode m) { return m == RasterMode::outer ? "outer" : "inner"; }

std::int64_t RasterGrid::occupied_count() const {
    std::int64_t n = 0;
    for (auto b : bits_) n += b;
    return n;
}

bool RasterGrid::border_clear() const {
    for (int ix = 0; ix < nx(); ++ix)
        if (occupied(ix, 0) || occupied(ix, ny() - 1)) return false;
    for (int iy = 0; iy < ny(); ++iy)
        if (occupied(0, iy) || occupied(nx() - 1, iy)) return false;
    return true;
}

bool RasterGrid::point_certified_outside(Point p) const {
    if (certifier_) return certifier_(p);
    if (source_) return point_clearly_outside(p, *source_);
    return !occupied(frame_.cell_x(p.x), frame_.cell_y(p.y));
}

namespace {

bool square_covered(const std::vector<const Primitive*>& prims, const Rect& sq, int depth) {
    bool any_overlap = false;
    for (const Primitive* p : prims) {
        if (square_inside(*p, sq)) return true;
        if (square_intersects(*p, sq)) any_overlap = true;
    }
    if (!any_overlap || depth == 0) return false;
    const double mx = (sq.xmin + sq.xmax) / 2;
    const double my = (sq.ymin + sq.ymax) / 2;
    return square_covered(prims, {sq.xmin, sq.ymin, mx, my}, depth - 1) &&
           square_covered(prims, {mx, sq.ymin, sq.xmax, my}, depth - 1) &&
           square_covered(prims, {sq.xmin, my, mx, sq.ymax}, depth - 1) &&
           square_covered(prims, {mx, my, sq.xmax, sq.ymax}, depth - 1);
}

} // namespace

RasterGrid rasterize(const Scene& s, const Frame& f, RasterMode mode) {
    if (!s.empty() && !f.contains_with_margin(scene_bbox(s)))
        throw GeometryError("rasterize: frame must contain the scene with a 2h margin");

    RasterGrid g(f, mode);
    if (s.empty()) return g;

    if (mode == RasterMode::outer) {
        for (const auto& prim : s.primitives) {
            const Rect bb = primitive_bbox(prim);
            const int x0 = std::max(0, f.cell_x(bb.xmin - f.h));
            const int x1 = std::min(f.nx - 1, f.cell_x(bb.xmax + f.h));
            const int y0 = std::max(0, f.cell_y(bb.ymin - f.h));
            const int y1 = std::min(f.ny - 1, f.cell_y(bb.ymax + f.h));
            for (int iy = y0; iy <= y1; ++iy)
                for (int ix = x0; ix <= x1; ++ix)
                    if (!g.occupied(ix, iy) && square_intersects(prim, f.cell_rect(ix, iy)))
                        g.set(ix, iy, true);
        }
    } else {
        // Candidate cells must at least meet one primitive; coverage of the
        // union is then decided per cell.
        std::vector<const Primitive*> prims;
        prims.reserve(s.primitives.size());
        for (const auto& p : s.primitives) prims.push_back(&p);

        const Rect bb = scene_bbox(s);
        const int x0 = std::max(0, f.cell_x(bb.xmin - f.h));
        const int x1 = std::min(f.nx - 1, f.cell_x(bb.xmax + f.h));
        const int y0 = std::max(0, f.cell_y(bb.ymin - f.h));
        const int y1 = std::min(f.ny - 1, f.cell_y(bb.ymax + f.h));
        std::vector<const Primitive*> near;
        for (int iy = y0; iy <= y1; ++iy) {
            for (int ix = x0; ix <= x1; ++ix) {
                const Rect sq = f.cell_rect(ix, iy);
                near.clear();
                for (const Primitive* p : prims)
                    if (square_intersects(*p, sq)) near.push_back(p);
                if (near.empty()) continue;
                if (square_covered(near, sq, kInnerSubdivisionDepth)) g.set(ix, iy, true);
            }
        }
    }
    return g;
}

} // namespace ptopo
