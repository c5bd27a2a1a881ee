#include "ptopo/certificate.hpp"

#include <memory>
#include <stdexcept>

#include "ptopo/error.hpp"

namespace ptopo {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::connected: return "connected";
        case Verdict::disconnected: return "disconnected";
        default: return "undecided";
    }
}

std::pair<int, int> complement_component_counts(const RasterGrid& g) {
    const ComponentLabeling lab = label_components(g, Side::complement);
    int unbounded = 0;
    for (const auto& comp : lab.components)
        if (!comp.bounded) ++unbounded;
    // Adjoining infinity merges every border-touching component into one.
    const int sphere = lab.count() - unbounded + (unbounded > 0 ? 1 : 0);
    return {lab.count(), sphere};
}

Certificate sphere_connected_complement(const RasterGrid& g) {
    if (!g.border_clear())
        throw std::logic_error("sphere_connected_complement: frame border ring is occupied");

    const ComponentLabeling lab = label_components(g, Side::complement);
    const auto [plane, sphere] = complement_component_counts(g);
    if ((plane == 1) != (sphere == 1))
        throw std::logic_error("sphere_connected_complement: plane/sphere counts disagree");

    Certificate cert;
    cert.decided_at_h = g.frame().h;
    cert.mode = g.mode();
    cert.complement_components = plane;

    if (plane == 1) {
        if (g.mode() == RasterMode::outer) cert.verdict = Verdict::connected;
        return cert;
    }
    if (g.mode() == RasterMode::inner) {
        // Certify a witness in some bounded clear component: its cell is
        // enclosed and its point provably avoids the set.
        for (int iy = 0; iy < lab.ny; ++iy) {
            for (int ix = 0; ix < lab.nx; ++ix) {
                const int id = lab.label(ix, iy);
                if (id < 0 || !lab.components[size_t(id)].bounded) continue;
                const Point z = g.frame().cell_center(ix, iy);
                if (g.point_certified_outside(z)) {
                    cert.verdict = Verdict::disconnected;
                    cert.witness = z;
                    return cert;
                }
            }
        }
    }
    return cert;
}

Certificate component_simply_connected(const RasterGrid& g, const ComponentLabeling& c, int id) {
    if (c.side != Side::occupied)
        throw DomainError("component_simply_connected: labeling must be of the occupied side");
    if (id < 0 || id >= c.count())
        throw DomainError("component_simply_connected: invalid component id");

    RasterGrid sub(g.frame(), g.mode());
    if (g.source_scene()) sub.set_source_scene(std::make_shared<Scene>(*g.source_scene()));
    for (int iy = 0; iy < g.ny(); ++iy)
        for (int ix = 0; ix < g.nx(); ++ix)
            if (c.label(ix, iy) == id) sub.set(ix, iy, true);
    return sphere_connected_complement(sub);
}

Certificate all_simply_connected(const RasterGrid& g) { return sphere_connected_complement(g); }

RasterGrid grid_for_scene(const Scene& s, const Frame& frame, double h, RasterMode mode) {
    Frame f(frame.rect(), h);
    RasterGrid g = rasterize(s, f, mode);
    g.set_source_scene(std::make_shared<Scene>(s));
    return g;
}

Certificate decide_sphere_connected(const Scene& s, const Frame& frame, double h0, double floor_h) {
    Certificate last;
    for (double h = h0; h >= floor_h * (1 - 1e-9); h /= 2) {
        Certificate outer = sphere_connected_complement(grid_for_scene(s, frame, h, RasterMode::outer));
        if (outer.decided()) return outer;
        Certificate inner = sphere_connected_complement(grid_for_scene(s, frame, h, RasterMode::inner));
        if (inner.decided()) return inner;
        last = outer;
    }
    return last;
}

} // namespace ptopo
