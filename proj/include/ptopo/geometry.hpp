#ifndef PTOPO_GEOMETRY_HPP
#define PTOPO_GEOMETRY_HPP

#include <cmath>
#include <string>
#include <variant>
#include <vector>

namespace ptopo {

// Symmetric tolerance for analytic predicates. Ties are resolved toward
// "intersects" when over-approximating and toward "not contained" when
// under-approximating, so both raster modes stay one-sided.
inline constexpr double kTol = 1e-12;

// Minimum feature size accepted by the parser (radius, rectangle extent).
inline constexpr double kMinFeature = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Disk {
    Point center;
    double radius = 0.0;
};

struct Rect {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    Point center() const { return {(xmin + xmax) / 2, (ymin + ymax) / 2}; }
};

struct Polygon {
    std::vector<Point> vertices; // implicit closing edge back to vertices[0]
};

using Primitive = std::variant<Disk, Rect, Polygon>;

// Union of primitives. `closed` records whether the set is taken closed
// (compact inputs) or open (neighborhoods); the tag is semantic only, all
// predicates use the symmetric tolerance policy.
struct Scene {
    std::vector<Primitive> primitives;
    bool closed = true;

    bool empty() const { return primitives.empty(); }
};

// --- Segment predicates -----------------------------------------------------

double dist_point_segment(Point p, Point a, Point b);
double dist_segment_segment(Point a1, Point a2, Point b1, Point b2);
bool segments_intersect(Point a1, Point a2, Point b1, Point b2);

// --- Point membership -------------------------------------------------------

// Closed-set membership: boundary counts as inside.
bool point_in_primitive(Point p, const Primitive& prim);
bool point_in_scene(Point p, const Scene& s);

// Certified exterior: distance from p to the (closed) set exceeds kTol.
bool point_clearly_outside(Point p, const Scene& s);

// Strict interior with a tol-wide safety band off the boundary.
bool point_strictly_inside(Point p, const Primitive& prim, double tol);

// --- Cell-square predicates (exact per primitive) ---------------------------

// Closed square `cell` meets the closed primitive (ties -> true).
bool square_intersects(const Primitive& prim, const Rect& cell);

// Closed square `cell` lies inside the primitive with a kTol margin
// (ties -> false).
bool square_inside(const Primitive& prim, const Rect& cell);

// --- Distances --------------------------------------------------------------

double dist_point_rect(Point p, const Rect& r);    // 0 if inside
double dist_point_primitive(Point p, const Primitive& prim); // 0 if inside
double dist_point_scene(Point p, const Scene& s);
double farthest_point_scene(Point p, const Scene& s); // max over the set

Rect primitive_bbox(const Primitive& prim);
Rect scene_bbox(const Scene& s);

// Validation used by the parser; throws GeometryError on violation.
void validate_primitive(const Primitive& prim, const std::string& where);

// A point in the interior of the primitive, usable as an enclosed sample.
Point interior_point(const Primitive& prim);

} // namespace ptopo

#endif
