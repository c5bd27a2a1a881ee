#include "ptopo/geometry.hpp"

#include <algorithm>
#include <limits>

#include "ptopo/error.hpp"

namespace ptopo {

double dist_point_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * ab);
}

namespace {

int orient(Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool on_segment_collinear(Point a, Point b, Point q) {
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect(Point a1, Point a2, Point b1, Point b2) {
    const int o1 = orient(a1, a2, b1);
    const int o2 = orient(a1, a2, b2);
    const int o3 = orient(b1, b2, a1);
    const int o4 = orient(b1, b2, a2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment_collinear(a1, a2, b1)) return true;
    if (o2 == 0 && on_segment_collinear(a1, a2, b2)) return true;
    if (o3 == 0 && on_segment_collinear(b1, b2, a1)) return true;
    if (o4 == 0 && on_segment_collinear(b1, b2, a2)) return true;
    return false;
}

double dist_segment_segment(Point a1, Point a2, Point b1, Point b2) {
    if (segments_intersect(a1, a2, b1, b2)) return 0.0;
    return std::min(std::min(dist_point_segment(b1, a1, a2), dist_point_segment(b2, a1, a2)),
                    std::min(dist_point_segment(a1, b1, b2), dist_point_segment(a2, b1, b2)));
}

namespace {

double dist_point_polygon_boundary(Point p, const Polygon& poly) {
    double best = std::numeric_limits<double>::infinity();
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        best = std::min(best, dist_point_segment(p, a, b));
    }
    return best;
}

// Crossing-number parity; only meaningful when p is not within kTol of the
// boundary, which callers guarantee.
bool point_in_polygon_interior(Point p, const Polygon& poly) {
    bool inside = false;
    const auto& v = poly.vertices;
    for (size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        const Point a = v[j];
        const Point b = v[i];
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xi = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (p.x < xi) inside = !inside;
        }
    }
    return inside;
}

} // namespace

bool point_in_primitive(Point p, const Primitive& prim) {
    return std::visit(
        [&](const auto& g) -> bool {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return dist(p, g.center) <= g.radius + kTol;
            } else if constexpr (std::is_same_v<T, Rect>) {
                return p.x >= g.xmin - kTol && p.x <= g.xmax + kTol &&
                       p.y >= g.ymin - kTol && p.y <= g.ymax + kTol;
            } else {
                if (dist_point_polygon_boundary(p, g) <= kTol) return true;
                return point_in_polygon_interior(p, g);
            }
        },
        prim);
}

bool point_in_scene(Point p, const Scene& s) {
    for (const auto& prim : s.primitives)
        if (point_in_primitive(p, prim)) return true;
    return false;
}

bool point_clearly_outside(Point p, const Scene& s) {
    for (const auto& prim : s.primitives)
        if (dist_point_primitive(p, prim) <= kTol) return false;
    return true;
}

bool point_strictly_inside(Point p, const Primitive& prim, double tol) {
    return std::visit(
        [&](const auto& g) -> bool {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return dist(p, g.center) < g.radius - tol;
            } else if constexpr (std::is_same_v<T, Rect>) {
                return p.x > g.xmin + tol && p.x < g.xmax - tol &&
                       p.y > g.ymin + tol && p.y < g.ymax - tol;
            } else {
                if (dist_point_polygon_boundary(p, g) <= tol) return false;
                return point_in_polygon_interior(p, g);
            }
        },
        prim);
}

double dist_point_rect(Point p, const Rect& r) {
    const double dx = std::max({r.xmin - p.x, 0.0, p.x - r.xmax});
    const double dy = std::max({r.ymin - p.y, 0.0, p.y - r.ymax});
    return std::hypot(dx, dy);
}

namespace {

double farthest_corner_dist(Point p, const Rect& r) {
    const double dx = std::max(p.x - r.xmin, r.xmax - p.x);
    const double dy = std::max(p.y - r.ymin, r.ymax - p.y);
    return std::hypot(dx, dy);
}

double dist_segment_rect(Point a, Point b, const Rect& r) {
    if (dist_point_rect(a, r) == 0.0 || dist_point_rect(b, r) == 0.0) return 0.0;
    const Point c00{r.xmin, r.ymin}, c10{r.xmax, r.ymin};
    const Point c11{r.xmax, r.ymax}, c01{r.xmin, r.ymax};
    double best = dist_segment_segment(a, b, c00, c10);
    best = std::min(best, dist_segment_segment(a, b, c10, c11));
    best = std::min(best, dist_segment_segment(a, b, c11, c01));
    best = std::min(best, dist_segment_segment(a, b, c01, c00));
    return best;
}

} // namespace

bool square_intersects(const Primitive& prim, const Rect& cell) {
    return std::visit(
        [&](const auto& g) -> bool {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return dist_point_rect(g.center, cell) <= g.radius + kTol;
            } else if constexpr (std::is_same_v<T, Rect>) {
                return g.xmin <= cell.xmax + kTol && cell.xmin <= g.xmax + kTol &&
                       g.ymin <= cell.ymax + kTol && cell.ymin <= g.ymax + kTol;
            } else {
                const auto& v = g.vertices;
                for (size_t i = 0; i < v.size(); ++i) {
                    const Point a = v[i];
                    const Point b = v[(i + 1) % v.size()];
                    if (dist_segment_rect(a, b, cell) <= kTol) return true;
                }
                // No boundary contact: either the cell is inside the polygon
                // or fully outside.
                return point_in_polygon_interior(cell.center(), g);
            }
        },
        prim);
}

bool square_inside(const Primitive& prim, const Rect& cell) {
    return std::visit(
        [&](const auto& g) -> bool {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return farthest_corner_dist(g.center, cell) <= g.radius - kTol;
            } else if constexpr (std::is_same_v<T, Rect>) {
                return cell.xmin >= g.xmin + kTol && cell.xmax <= g.xmax - kTol &&
                       cell.ymin >= g.ymin + kTol && cell.ymax <= g.ymax - kTol;
            } else {
                const auto& v = g.vertices;
                for (size_t i = 0; i < v.size(); ++i) {
                    const Point a = v[i];
                    const Point b = v[(i + 1) % v.size()];
                    if (dist_segment_rect(a, b, cell) <= kTol) return false;
                }
                return point_in_polygon_interior(cell.center(), g);
            }
        },
        prim);
}

double dist_point_primitive(Point p, const Primitive& prim) {
    return std::visit(
        [&](const auto& g) -> double {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return std::max(0.0, dist(p, g.center) - g.radius);
            } else if constexpr (std::is_same_v<T, Rect>) {
                return dist_point_rect(p, g);
            } else {
                const double db = dist_point_polygon_boundary(p, g);
                if (db <= kTol) return 0.0;
                return point_in_polygon_interior(p, g) ? 0.0 : db;
            }
        },
        prim);
}

double dist_point_scene(Point p, const Scene& s) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& prim : s.primitives)
        best = std::min(best, dist_point_primitive(p, prim));
    return best;
}

double farthest_point_scene(Point p, const Scene& s) {
    double best = 0.0;
    for (const auto& prim : s.primitives) {
        const double d = std::visit(
            [&](const auto& g) -> double {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, Disk>) {
                    return dist(p, g.center) + g.radius;
                } else if constexpr (std::is_same_v<T, Rect>) {
                    return farthest_corner_dist(p, g);
                } else {
                    double m = 0.0;
                    for (const Point& v : g.vertices) m = std::max(m, dist(p, v));
                    return m;
                }
            },
            prim);
        best = std::max(best, d);
    }
    return best;
}

Rect primitive_bbox(const Primitive& prim) {
    return std::visit(
        [&](const auto& g) -> Rect {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return {g.center.x - g.radius, g.center.y - g.radius,
                        g.center.x + g.radius, g.center.y + g.radius};
            } else if constexpr (std::is_same_v<T, Rect>) {
                return g;
            } else {
                Rect b{g.vertices[0].x, g.vertices[0].y, g.vertices[0].x, g.vertices[0].y};
                for (const Point& v : g.vertices) {
                    b.xmin = std::min(b.xmin, v.x);
                    b.ymin = std::min(b.ymin, v.y);
                    b.xmax = std::max(b.xmax, v.x);
                    b.ymax = std::max(b.ymax, v.y);
                }
                return b;
            }
        },
        prim);
}

Rect scene_bbox(const Scene& s) {
    if (s.empty()) throw DomainError("scene_bbox: empty scene");
    Rect b = primitive_bbox(s.primitives[0]);
    for (size_t i = 1; i < s.primitives.size(); ++i) {
        const Rect pb = primitive_bbox(s.primitives[i]);
        b.xmin = std::min(b.xmin, pb.xmin);
        b.ymin = std::min(b.ymin, pb.ymin);
        b.xmax = std::max(b.xmax, pb.xmax);
        b.ymax = std::max(b.ymax, pb.ymax);
    }
    return b;
}

void validate_primitive(const Primitive& prim, const std::string& where) {
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                if (!finite(g.center) || !std::isfinite(g.radius))
                    throw GeometryError(where + ": non-finite disk");
                if (g.radius < kMinFeature)
                    throw GeometryError(where + ": disk radius must be >= 1e-9");
            } else if constexpr (std::is_same_v<T, Rect>) {
                if (!std::isfinite(g.xmin) || !std::isfinite(g.ymin) ||
                    !std::isfinite(g.xmax) || !std::isfinite(g.ymax))
                    throw GeometryError(where + ": non-finite rectangle");
                if (g.xmax - g.xmin < kMinFeature || g.ymax - g.ymin < kMinFeature)
                    throw GeometryError(where + ": rectangle corners must be ordered with extent >= 1e-9");
            } else {
                const auto& v = g.vertices;
                if (v.size() < 3) throw GeometryError(where + ": polygon needs >= 3 vertices");
                for (const Point& p : v)
                    if (!finite(p)) throw GeometryError(where + ": non-finite polygon vertex");
                const size_t n = v.size();
                for (size_t i = 0; i < n; ++i) {
                    if (dist(v[i], v[(i + 1) % n]) <= kTol)
                        throw GeometryError(where + ": repeated consecutive polygon vertices");
                }
                // Adjacent edges may only meet at the shared vertex; a zero
                // turn with a backtrack folds the boundary onto itself.
                for (size_t i = 0; i < n; ++i) {
                    const Point a = v[(i + n - 1) % n];
                    const Point b = v[i];
                    const Point c = v[(i + 1) % n];
                    if (orient(a, b, c) == 0 && dot(a - b, c - b) > 0)
                        throw GeometryError(where + ": polygon edge folds back on itself");
                }
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = i + 1; j < n; ++j) {
                        const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                        if (adjacent) continue;
                        if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                            throw GeometryError(where + ": polygon is self-intersecting");
                    }
                }
            }
        },
        prim);
}

Point interior_point(const Primitive& prim) {
    return std::visit(
        [&](const auto& g) -> Point {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return g.center;
            } else if constexpr (std::is_same_v<T, Rect>) {
                return g.center();
            } else {
                const auto& v = g.vertices;
                const size_t n = v.size();
                // Centroid works for convex inputs; otherwise probe ear
                // midpoints until one lands strictly inside.
                Point c{0, 0};
                for (const Point& p : v) c = c + p;
                c = (1.0 / double(n)) * c;
                if (point_strictly_inside(c, prim, kTol)) return c;
                for (size_t i = 0; i < n; ++i) {
                    const Point m = (1.0 / 3.0) * (v[i] + v[(i + 1) % n] + v[(i + 2) % n]);
                    if (point_strictly_inside(m, prim, kTol)) return m;
                }
                // Fall back to nudging off the first vertex toward the
                // midpoint of the opposite edge.
                for (double t : {1e-3, 1e-5, 1e-7}) {
                    const Point mid = 0.5 * (v[1] + v[n - 1]);
                    const Point q = v[0] + t * (mid - v[0]);
                    if (point_strictly_inside(q, prim, kTol)) return q;
                }
                throw GeometryError("interior_point: could not find interior point of polygon");
            }
        },
        prim);
}

} // namespace ptopo
