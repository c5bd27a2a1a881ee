#include "ptopo/frame.hpp"

#include <cmath>

#include "ptopo/error.hpp"

namespace ptopo {

Frame::Frame(const Rect& rect, double cell_size) {
    if (!(cell_size > 0) || !std::isfinite(cell_size))
        throw GeometryError("frame: cell size must be positive and finite");
    if (!(rect.xmax > rect.xmin) || !(rect.ymax > rect.ymin))
        throw GeometryError("frame: rectangle corners must be ordered");
    xmin = rect.xmin;
    ymin = rect.ymin;
    h = cell_size;
    nx = int(std::ceil((rect.xmax - rect.xmin) / cell_size - 1e-9));
    ny = int(std::ceil((rect.ymax - rect.ymin) / cell_size - 1e-9));
    if (nx < 5 || ny < 5)
        throw GeometryError("frame: grid must be at least 5x5 cells");
}

int Frame::cell_x(double x) const {
    int ix = int(std::floor((x - xmin) / h));
    if (ix < 0) ix = 0;
    if (ix >= nx) ix = nx - 1;
    return ix;
}

int Frame::cell_y(double y) const {
    int iy = int(std::floor((y - ymin) / h));
    if (iy < 0) iy = 0;
    if (iy >= ny) iy = ny - 1;
    return iy;
}

bool Frame::contains_with_margin(const Rect& r) const {
    const double m = 2 * h;
    return r.xmin >= xmin + m && r.xmax <= xmax() - m &&
           r.ymin >= ymin + m && r.ymax <= ymax() - m;
}

Frame Frame::refined() const {
    Frame f;
    f.xmin = xmin;
    f.ymin = ymin;
    f.h = h / 2;
    f.nx = nx * 2;
    f.ny = ny * 2;
    return f;
}

double default_initial_h(const Frame& f) { return f.width() / 256.0; }
double default_floor_h(const Frame& f) { return f.width() / 4096.0; }

} // namespace ptopo
