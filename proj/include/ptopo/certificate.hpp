#ifndef PTOPO_CERTIFICATE_HPP
#define PTOPO_CERTIFICATE_HPP

#include <optional>
#include <utility>
#include <variant>

#include "ptopo/labeling.hpp"
#include "ptopo/paths.hpp"
#include "ptopo/raster.hpp"

namespace ptopo {

enum class Verdict { connected, disconnected, undecided };

const char* to_string(Verdict v);

// Machine-checkable evidence for a complement-connectivity decision.
//
// The protocol is one-sided: "connected" may only come from an outer grid
// (the raster complement is a subset of the true complement, so paths in it
// are real); "disconnected" may only come from an inner grid, with a witness
// point in an enclosed clear cell that provably avoids the analytic set
// (occupied inner cells lie inside the set, so the enclosure is real).
// Anything else is "undecided" and callers refine the resolution.
struct Certificate {
    Verdict verdict = Verdict::undecided;
    std::variant<std::monostate, Point, PolyPath> witness;
    double decided_at_h = 0.0;
    RasterMode mode = RasterMode::outer;
    int complement_components = 0;

    bool decided() const { return verdict != Verdict::undecided; }
    const Point* witness_point() const { return std::get_if<Point>(&witness); }
    const PolyPath* witness_path() const { return std::get_if<PolyPath>(&witness); }
};

// Complement component count in the plane and on the sphere (all components
// holding a border cell merged with the point at infinity). For grids of
// bounded sets the two are equal; a mismatch is an internal defect.
std::pair<int, int> complement_component_counts(const RasterGrid& g);

// Connectivity of the complement with the point at infinity adjoined.
Certificate sphere_connected_complement(const RasterGrid& g);

// Simple connectivity of one occupied component: the component is isolated
// into its own grid and its sphere complement is tested. `c` must label the
// occupied side of `g`.
Certificate component_simply_connected(const RasterGrid& g, const ComponentLabeling& c, int id);

// Whole-set test: one sphere call on the full grid. Equals the conjunction
// of the per-component tests whenever both sides are decided.
Certificate all_simply_connected(const RasterGrid& g);

// Refinement driver: rasterize the scene at h, h/2, ... >= floor_h in both
// modes until one side decides. Returns the undecided certificate of the
// last attempt when the floor is reached.
Certificate decide_sphere_connected(const Scene& s, const Frame& frame, double h0, double floor_h);

RasterGrid grid_for_scene(const Scene& s, const Frame& frame, double h, RasterMode mode);

} // namespace ptopo

#endif
