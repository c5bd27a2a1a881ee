#ifndef PTOPO_PATHS_HPP
#define PTOPO_PATHS_HPP

#include <vector>

#include "ptopo/error.hpp"
#include "ptopo/geometry.hpp"
#include "ptopo/raster.hpp"

namespace ptopo {

// Open or closed polyline. Closed paths do not repeat the first vertex;
// the closing edge is implicit.
struct PolyPath {
    std::vector<Point> vertices;
    bool closed = false;

    size_t size() const { return vertices.size(); }
};

// Throws GeometryError when consecutive vertices coincide or a closed path
// has fewer than 4 vertices.
void validate_path(const PolyPath& p);

// Joins two open paths sharing an endpoint (a's last vertex = b's first).
PolyPath concat_paths(const PolyPath& a, const PolyPath& b);

// Shortest cell path between two complement points, as a polyline through
// cell centers (4-adjacent steps). Both endpoints must sit in clear cells
// of the same complement component; otherwise DomainError ("occupied cell")
// or NoPathError.
PolyPath extract_path(const RasterGrid& g, Point a, Point b);

class NoPathError : public DomainError {
public:
    explicit NoPathError(const std::string& msg) : DomainError(msg) {}
};

} // namespace ptopo

#endif
