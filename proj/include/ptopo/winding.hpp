#ifndef PTOPO_WINDING_HPP
#define PTOPO_WINDING_HPP

#include <vector>

#include "ptopo/paths.hpp"

namespace ptopo {

// Signed number of times the closed path encircles z, by counting signed
// crossings of the horizontal ray from z. The path must be closed and z
// must keep more than kTol distance to every edge (DomainError otherwise).
int winding_number(const PolyPath& p, Point z);

// Sum over a family of closed cycles.
int winding_number(const std::vector<PolyPath>& cycles, Point z);

} // namespace ptopo

#endif
