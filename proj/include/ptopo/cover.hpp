#ifndef PTOPO_COVER_HPP
#define PTOPO_COVER_HPP

#include <utility>
#include <vector>

#include "ptopo/geometry.hpp"

namespace ptopo {

// Finite disk cover of the scene: one disk of radius eps per (eps/2)-lattice
// cell meeting the set, centered on the cell. Coverage is guaranteed (any
// set point is within half a cell diagonal, eps*sqrt(2)/4, of its cell's
// center) and the union stays within (1 + sqrt(2)/4)*eps of the set.
std::vector<Disk> ball_cover(const Scene& k, double eps);

// Exact Euclidean dilation of a scene by margin m, expressed in the same
// primitive vocabulary: grown disks, plus edge capsules (quad + end disks)
// for rectangle and polygon boundaries.
Scene dilate(const Scene& s, double m);

// Disjoint open neighborhoods of two disjoint compact scenes, each dilated
// by a third of their distance. Throws DomainError when the scenes touch.
std::pair<Scene, Scene> separate(const Scene& k, const Scene& l);

} // namespace ptopo

#endif
