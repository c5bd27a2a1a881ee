#ifndef PTOPO_JSON_IO_HPP
#define PTOPO_JSON_IO_HPP

#include <json.hpp>

#include "ptopo/certificate.hpp"
#include "ptopo/constructions.hpp"
#include "ptopo/harness.hpp"

namespace ptopo {

// Stable field order throughout (ordered_json), so serializations are
// byte-for-byte reproducible.
using ojson = nlohmann::ordered_json;

ojson point_json(Point p);
ojson path_json(const PolyPath& p);
ojson certificate_json(const Certificate& c);
ojson labeling_json(const ComponentLabeling& c, const Frame& f);
ojson neighborhood_json(const NeighborhoodResult& r);
ojson grid_cycle_json(const GridCycleSet& g);
ojson obstruction_json(const Obstruction& o);
ojson report_json(const Report& r, bool with_timings = true);
ojson campaign_json(const CampaignSummary& s);

} // namespace ptopo

#endif
