#ifndef PTOPO_FRAME_HPP
#define PTOPO_FRAME_HPP

#include <cstdint>

#include "ptopo/geometry.hpp"

namespace ptopo {

// Uniform grid host. Width and height are integer multiples of the cell
// size h; any scene analyzed on the frame must keep a margin of at least 2h
// to the frame edge, which guarantees an all-clear border ring.
struct Frame {
    double xmin = 0.0, ymin = 0.0;
    double h = 1.0;
    int nx = 0, ny = 0;

    Frame() = default;

    // Snaps the rectangle outward so the extents are exact multiples of h.
    Frame(const Rect& rect, double cell_size);

    double xmax() const { return xmin + nx * h; }
    double ymax() const { return ymin + ny * h; }
    double width() const { return nx * h; }

    Rect rect() const { return {xmin, ymin, xmax(), ymax()}; }
    Rect cell_rect(int ix, int iy) const {
        return {xmin + ix * h, ymin + iy * h, xmin + (ix + 1) * h, ymin + (iy + 1) * h};
    }
    Point cell_center(int ix, int iy) const {
        return {xmin + (ix + 0.5) * h, ymin + (iy + 0.5) * h};
    }
    int cell_x(double x) const;
    int cell_y(double y) const;

    bool in_grid(int ix, int iy) const { return ix >= 0 && ix < nx && iy >= 0 && iy < ny; }
    bool on_border(int ix, int iy) const {
        return ix == 0 || iy == 0 || ix == nx - 1 || iy == ny - 1;
    }

    // True when the rectangle keeps the 2h margin to the frame edge.
    bool contains_with_margin(const Rect& r) const;

    // Same extents, cells half the size.
    Frame refined() const;

    std::int64_t cell_count() const { return std::int64_t(nx) * ny; }
};

// Default resolution policy: analyses start at frame-width/256 and refine by
// halving down to frame-width/4096 unless overridden.
double default_initial_h(const Frame& f);
double default_floor_h(const Frame& f);

} // namespace ptopo

#endif
