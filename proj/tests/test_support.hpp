#ifndef PTOPO_TEST_SUPPORT_HPP
#define PTOPO_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "ptopo/frame.hpp"
#include "ptopo/geometry.hpp"

namespace ptopo::testing {

inline Scene disk_scene(double cx, double cy, double r) {
    Scene s;
    s.primitives.push_back(Disk{{cx, cy}, r});
    return s;
}

// Annulus-shaped compact: n overlapping disks of radius r on a circle of
// radius ring_r. With r/ring_r comfortably above sin(pi/n) the union is a
// closed ring; the hole reaches radius ring_r - r around the center.
inline Scene ring_of_disks(Point center, double ring_r, double r, int n = 16) {
    Scene s;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * M_PI * i / n;
        s.primitives.push_back(
            Disk{{center.x + ring_r * std::cos(a), center.y + ring_r * std::sin(a)}, r});
    }
    return s;
}

// Square ring out of four overlapping rectangles: outer half-width `R`,
// wall thickness `t`. The verticals run the full height so the corner
// seams are strictly interior to the union.
inline Scene square_ring(Point c, double R, double t) {
    Scene s;
    s.primitives.push_back(Rect{c.x - R, c.y - R, c.x + R, c.y - R + t});
    s.primitives.push_back(Rect{c.x - R, c.y + R - t, c.x + R, c.y + R});
    s.primitives.push_back(Rect{c.x - R, c.y - R, c.x - R + t, c.y + R});
    s.primitives.push_back(Rect{c.x + R - t, c.y - R, c.x + R, c.y + R});
    return s;
}

// Flask-shaped polygon: a wide interior cavity reachable only through a
// narrow neck, mouth opening at the top. Connected complement, and a ball
// cover of moderate radius closes the neck while the cavity survives.
//
//   outer square [-2,2]^2, cavity [-0.75,0.75]x[-1.25,1.25],
//   neck x in [-0.2,0.2], y in [1.25,2].
inline Scene flask_scene(Point shift = {0, 0}, bool flip_y = false) {
    Polygon p;
    const std::vector<Point> base = {
        {-2, -2}, {2, -2}, {2, 2}, {0.2, 2}, {0.2, 1.25}, {0.75, 1.25},
        {0.75, -1.25}, {-0.75, -1.25}, {-0.75, 1.25}, {-0.2, 1.25}, {-0.2, 2}, {-2, 2}};
    for (const Point& v : base)
        p.vertices.push_back({v.x + shift.x, (flip_y ? -v.y : v.y) + shift.y});
    if (flip_y) std::reverse(p.vertices.begin(), p.vertices.end());
    Scene s;
    s.primitives.push_back(p);
    return s;
}

inline Frame make_frame(double half, double h) {
    return Frame(Rect{-half, -half, half, half}, h);
}

} // namespace ptopo::testing

#endif
