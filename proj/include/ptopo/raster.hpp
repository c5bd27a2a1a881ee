#ifndef PTOPO_RASTER_HPP
#define PTOPO_RASTER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "ptopo/frame.hpp"
#include "ptopo/geometry.hpp"

namespace ptopo {

// Outer grids over-approximate (every cell meeting the set is occupied);
// inner grids under-approximate (every occupied cell lies inside the set).
// The pairing is what makes one-sided certificates possible.
enum class RasterMode { outer, inner };

const char* to_string(RasterMode m);

class RasterGrid {
public:
    RasterGrid(const Frame& frame, RasterMode mode)
        : frame_(frame), mode_(mode), bits_(size_t(frame.cell_count()), 0) {}

    const Frame& frame() const { return frame_; }
    RasterMode mode() const { return mode_; }

    bool occupied(int ix, int iy) const { return bits_[idx(ix, iy)] != 0; }
    void set(int ix, int iy, bool v) { bits_[idx(ix, iy)] = v ? 1 : 0; }

    size_t idx(int ix, int iy) const { return size_t(iy) * frame_.nx + ix; }
    int nx() const { return frame_.nx; }
    int ny() const { return frame_.ny; }

    std::int64_t occupied_count() const;
    bool border_clear() const;

    // Analytic ground truth when the grid came from a scene; null for masks
    // (the mask is then trusted as the set itself).
    const Scene* source_scene() const { return source_.get(); }
    void set_source_scene(std::shared_ptr<const Scene> s) { source_ = std::move(s); }

    // Exterior test for grids whose analytic set is not a Scene (annuli).
    void set_outside_certifier(std::function<bool(Point)> f) { certifier_ = std::move(f); }

    // Witness certification: true when the point provably avoids the set.
    // Scene-backed grids test analytically; mask grids consult the bitmap.
    bool point_certified_outside(Point p) const;

private:
    Frame frame_;
    RasterMode mode_;
    std::vector<std::uint8_t> bits_;
    std::shared_ptr<const Scene> source_;
    std::function<bool(Point)> certifier_;
};

// Exact rasterization. Outer: cell occupied iff its closed square meets some
// primitive. Inner: cell occupied iff its closed square is covered by the
// union; coverage by several overlapping primitives is detected by bounded
// subdivision (sound one-sided when the depth cap bites).
RasterGrid rasterize(const Scene& s, const Frame& f, RasterMode mode);

inline constexpr int kInnerSubdivisionDepth = 6;

} // namespace ptopo

#endif
