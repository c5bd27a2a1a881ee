#ifndef PTOPO_CONSTRUCTIONS_HPP
#define PTOPO_CONSTRUCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ptopo/certificate.hpp"
#include "ptopo/cover.hpp"
#include "ptopo/labeling.hpp"
#include "ptopo/paths.hpp"
#include "ptopo/raster.hpp"

namespace ptopo {

struct Annulus {
    Point center;
    double r_in = 0.0;
    double r_out = 0.0;
};

RasterGrid rasterize_annulus(const Annulus& a, const Frame& f, RasterMode mode);

// An escape route from a bounded hole of the cover's complement out to the
// frame border, as both a polyline and the cell chain it came from.
struct EscapeRoute {
    PolyPath path;
    std::vector<std::pair<int, int>> cells;
};

// One route per bounded component of `w_complement`, routed through cells
// that keep a one-cell clearance to the compact set's outer raster and to
// the sleeves of earlier routes. A hole already opened by an earlier
// sleeve is skipped. Throws NoPathError when no admissible route exists at
// this resolution.
std::vector<EscapeRoute> escape_paths(const ComponentLabeling& w_complement,
                                      const RasterGrid& k_outer);

struct NeighborhoodCertificates {
    bool k_in_v = false;
    bool v_in_a = false;
    Certificate simply_connected;
};

struct NeighborhoodResult {
    bool success = false; // false = undecided at the resolution floor
    double eps = 0.0;
    double h = 0.0;
    std::vector<Disk> cover;
    std::vector<EscapeRoute> rays;
    std::optional<RasterGrid> v; // outer grid, occupied cells = V
    NeighborhoodCertificates certificates;
};

// Open neighborhood V with K inside V inside A and every component of V
// simply connected: cover K by eps-balls (eps = boundary clearance / 3),
// then cut one-cell sleeves along escape routes from every bounded hole of
// the cover. Retries at h/2 until all three certificates pass or floor_h is
// reached. Precondition failures (K not inside A, complement of K certified
// disconnected, K touching the boundary of A) throw DomainError.
NeighborhoodResult build_neighborhood(const Scene& k, const Scene& a, const Frame& frame,
                                      double h0, double floor_h);

struct GridCycleSet {
    double eps = 0.0;
    std::vector<PolyPath> cycles;
    Point enclosed_sample;
};

// Boundary cycles of the union of closed eps-grid squares meeting the
// scene. Shared edges cancel; diagonal-only adjacencies are closed by
// adding a bridging cell so every lattice vertex has degree two and the
// cycles come out simple and pairwise disjoint. Cycles are oriented with
// the selected squares on the left.
GridCycleSet grid_cycle(const Scene& k, double eps);

// Annulus around a point of a bounded complement component, with the inner
// disk clear of the set and the outer circle containing it. DomainError
// when no disconnection can be certified.
struct Obstruction {
    Annulus annulus;
    Point witness;
    double decided_at_h = 0.0;
};

Obstruction annulus_obstruction(const Scene& k, const Frame& frame, double h0, double floor_h);

// True when the witness sits in a bounded component of the grid's
// complement (so some component of the candidate neighborhood fails to be
// simply connected). DomainError when the witness cell is occupied.
bool check_obstruction(const RasterGrid& v, Point witness);

} // namespace ptopo

#endif
