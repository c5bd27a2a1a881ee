#ifndef PTOPO_PGM_IO_HPP
#define PTOPO_PGM_IO_HPP

#include <string>

#include "ptopo/raster.hpp"

namespace ptopo {

// Loads a plain (P2) or binary (P5) PGM mask: pixel 0 = complement, any
// nonzero value = occupied. The image border ring is cleared on load so the
// frame-margin rule holds. Masks carry no analytic ground truth, so the
// caller chooses the mode tag (outer by default = the mask is trusted as an
// over-approximation). Cell size is 1, origin at (0,0), row 0 at the top.
RasterGrid load_pgm(const std::string& path, RasterMode mode = RasterMode::outer);

} // namespace ptopo

#endif
