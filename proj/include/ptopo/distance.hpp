#ifndef PTOPO_DISTANCE_HPP
#define PTOPO_DISTANCE_HPP

#include <variant>
#include <vector>

#include "ptopo/geometry.hpp"

namespace ptopo {

// Circular arc, counterclockwise from angle a0 to a1 (a0 normalized to
// [0, 2pi), a1 in (a0, a0 + 2pi]; a full circle is [0, 2pi]).
struct Arc {
    Point center;
    double r = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;

    Point at(double a) const { return {center.x + r * std::cos(a), center.y + r * std::sin(a)}; }
};

struct Seg {
    Point a, b;
};

using BoundaryPiece = std::variant<Arc, Seg>;

// Minimum Euclidean distance between two scenes as solid point sets,
// evaluated analytically per primitive pair. Exactly symmetric.
double set_distance(const Scene& a, const Scene& b);

// The boundary of the union: each primitive's boundary curve with the parts
// lying strictly inside another primitive removed.
std::vector<BoundaryPiece> boundary_pieces(const Scene& s);

// dist(k, boundary of a) for solid k. Pieces interior to the union of a's
// primitives do not count as boundary.
double boundary_distance(const Scene& k, const Scene& a);

double dist_point_arc(Point p, const Arc& arc);
double dist_segment_arc(Point a, Point b, const Arc& arc);
bool angle_in_arc(double theta, const Arc& arc);

} // namespace ptopo

#endif
