#include "ptopo/cover.hpp"

#include <cmath>

#include "ptopo/distance.hpp"
#include "ptopo/error.hpp"

namespace ptopo {

std::vector<Disk> ball_cover(const Scene& k, double eps) {
    if (!(eps > 0)) throw DomainError("ball_cover: eps must be positive");
    if (k.empty()) throw DomainError("ball_cover: empty scene");

    const double pitch = eps / 2;
    const Rect bb = scene_bbox(k);
    const long ix0 = long(std::floor(bb.xmin / pitch)) - 1;
    const long ix1 = long(std::ceil(bb.xmax / pitch)) + 1;
    const long iy0 = long(std::floor(bb.ymin / pitch)) - 1;
    const long iy1 = long(std::ceil(bb.ymax / pitch)) + 1;

    std::vector<Disk> disks;
    for (long iy = iy0; iy <= iy1; ++iy) {
        for (long ix = ix0; ix <= ix1; ++ix) {
            const Rect cell{ix * pitch, iy * pitch, (ix + 1) * pitch, (iy + 1) * pitch};
            for (const auto& prim : k.primitives) {
                if (square_intersects(prim, cell)) {
                    disks.push_back(Disk{cell.center(), eps});
                    break;
                }
            }
        }
    }
    return disks;
}

namespace {

void append_edge_capsule(Scene& out, Point a, Point b, double m) {
    const Point v = b - a;
    const double len = norm(v);
    if (len <= kTol) return;
    const Point n{-v.y / len * m, v.x / len * m};
    Polygon quad;
    quad.vertices = {a + n, b + n, b - n, a - n};
    out.primitives.push_back(quad);
    out.primitives.push_back(Disk{a, m});
    out.primitives.push_back(Disk{b, m});
}

} // namespace

Scene dilate(const Scene& s, double m) {
    if (!(m > 0)) throw DomainError("dilate: margin must be positive");
    Scene out;
    out.closed = false;
    for (const auto& prim : s.primitives) {
        if (const Disk* d = std::get_if<Disk>(&prim)) {
            out.primitives.push_back(Disk{d->center, d->radius + m});
        } else if (const Rect* r = std::get_if<Rect>(&prim)) {
            out.primitives.push_back(*r);
            const Point c00{r->xmin, r->ymin}, c10{r->xmax, r->ymin};
            const Point c11{r->xmax, r->ymax}, c01{r->xmin, r->ymax};
            append_edge_capsule(out, c00, c10, m);
            append_edge_capsule(out, c10, c11, m);
            append_edge_capsule(out, c11, c01, m);
            append_edge_capsule(out, c01, c00, m);
        } else {
            const Polygon& p = std::get<Polygon>(prim);
            out.primitives.push_back(p);
            const size_t n = p.vertices.size();
            for (size_t i = 0; i < n; ++i)
                append_edge_capsule(out, p.vertices[i], p.vertices[(i + 1) % n], m);
        }
    }
    return out;
}

std::pair<Scene, Scene> separate(const Scene& k, const Scene& l) {
    const double d = set_distance(k, l);
    if (!(d > 0)) throw DomainError("separate: scenes are not disjoint");
    const double m = d / 3;
    return {dilate(k, m), dilate(l, m)};
}

} // namespace ptopo
