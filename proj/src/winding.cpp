#include "ptopo/winding.hpp"

#include "ptopo/error.hpp"

namespace ptopo {

int winding_number(const PolyPath& p, Point z) {
    if (!p.closed) throw DomainError("winding_number: path must be closed");
    const auto& v = p.vertices;
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i)
        if (dist_point_segment(z, v[i], v[(i + 1) % n]) <= kTol)
            throw DomainError("winding_number: point lies on the curve");

    // Ray-crossing count against the ray {x > z.x, y = z.y}. The half-open
    // vertical test makes each crossing count exactly once; the sign is the
    // side of the directed edge.
    int w = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % n];
        if (a.y <= z.y) {
            if (b.y > z.y && cross(b - a, z - a) > 0) ++w;
        } else {
            if (b.y <= z.y && cross(b - a, z - a) < 0) --w;
        }
    }
    return w;
}

int winding_number(const std::vector<PolyPath>& cycles, Point z) {
    int w = 0;
    for (const auto& c : cycles) w += winding_number(c, z);
    return w;
}

} // namespace ptopo
