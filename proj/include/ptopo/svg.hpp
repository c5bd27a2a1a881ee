#ifndef PTOPO_SVG_HPP
#define PTOPO_SVG_HPP

#include <string>

#include "ptopo/constructions.hpp"
#include "ptopo/scene_io.hpp"

namespace ptopo {

// Deterministic SVG 1.1 emitters: shortest round-trip number formatting,
// fixed attribute order, document order = construction order, LF endings.

// One layer per named set, lexicographic order.
std::string render_scene_svg(const SceneDocument& doc);

// Layers "K", "A", "W", "rays", "V", "cycles"; absent parts are skipped.
std::string render_construction_svg(const Frame& frame, const Scene* k, const Scene* a,
                                    const NeighborhoodResult* nr, const GridCycleSet* gc);

std::string format_double(double v);

} // namespace ptopo

#endif
