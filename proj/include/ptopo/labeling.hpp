#ifndef PTOPO_LABELING_HPP
#define PTOPO_LABELING_HPP

#include <cstdint>
#include <vector>

#include "ptopo/raster.hpp"

namespace ptopo {

enum class Side { occupied, complement };

const char* to_string(Side s);

struct ComponentInfo {
    int id = 0;
    std::int64_t cell_count = 0;
    bool bounded = true;
    int rep_x = 0, rep_y = 0; // first cell in row-major order
};

// Partition of one side's cells into connected components. Occupied cells
// use 8-connectivity, complement cells 4-connectivity; that pairing keeps
// the discrete Jordan property at diagonal pinches.
struct ComponentLabeling {
    Side side = Side::complement;
    int nx = 0, ny = 0;
    std::vector<int> labels; // -1 for cells of the other side
    std::vector<ComponentInfo> components;

    int label(int ix, int iy) const { return labels[size_t(iy) * nx + ix]; }
    int count() const { return int(components.size()); }
};

// Union-find labeling. Component ids are assigned in row-major order of
// first appearance, so results are deterministic.
ComponentLabeling label_components(const RasterGrid& g, Side side);

// The unique unbounded complement component. Zero or several unbounded ids
// indicate a broken grid and raise std::logic_error, not a user error.
int unbounded_component(const ComponentLabeling& c);

} // namespace ptopo

#endif
