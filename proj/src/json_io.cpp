#include "ptopo/json_io.hpp"

namespace ptopo {

ojson point_json(Point p) { return ojson::array({p.x, p.y}); }

ojson path_json(const PolyPath& p) {
    ojson verts = ojson::array();
    for (const Point& v : p.vertices) verts.push_back(point_json(v));
    return ojson{{"closed", p.closed}, {"vertices", verts}};
}

ojson certificate_json(const Certificate& c) {
    ojson j;
    j["verdict"] = to_string(c.verdict);
    if (const Point* p = c.witness_point()) {
        j["witness"] = ojson{{"type", "point"}, {"point", point_json(*p)}};
    } else if (const PolyPath* path = c.witness_path()) {
        j["witness"] = ojson{{"type", "path"}, {"path", path_json(*path)}};
    } else {
        j["witness"] = ojson{{"type", "none"}};
    }
    j["decided_at_h"] = c.decided_at_h;
    j["mode"] = to_string(c.mode);
    j["complement_components"] = c.complement_components;
    return j;
}

ojson labeling_json(const ComponentLabeling& c, const Frame& f) {
    ojson comps = ojson::array();
    for (const auto& comp : c.components) {
        const Point rep = f.cell_center(comp.rep_x, comp.rep_y);
        comps.push_back(ojson{{"id", comp.id},
                              {"cells", comp.cell_count},
                              {"bounded", comp.bounded},
                              {"representative_cell", ojson::array({comp.rep_x, comp.rep_y})},
                              {"representative", point_json(rep)}});
    }
    return ojson{{"side", to_string(c.side)}, {"count", c.count()}, {"components", comps}};
}

ojson neighborhood_json(const NeighborhoodResult& r) {
    ojson cover = ojson::array();
    for (const Disk& d : r.cover)
        cover.push_back(ojson{{"cx", d.center.x}, {"cy", d.center.y}, {"r", d.radius}});
    ojson rays = ojson::array();
    for (const auto& ray : r.rays) rays.push_back(path_json(ray.path));
    ojson j;
    j["status"] = r.success ? "built" : "undecided";
    j["eps"] = r.eps;
    j["h"] = r.h;
    j["cover"] = cover;
    j["rays"] = rays;
    j["certificates"] = ojson{{"k_in_v", r.certificates.k_in_v},
                              {"v_in_a", r.certificates.v_in_a},
                              {"all_simply_connected",
                               certificate_json(r.certificates.simply_connected)}};
    if (r.v) j["v_occupied_cells"] = r.v->occupied_count();
    return j;
}

ojson grid_cycle_json(const GridCycleSet& g) {
    ojson cycles = ojson::array();
    for (const auto& c : g.cycles) cycles.push_back(path_json(c));
    return ojson{{"eps", g.eps},
                 {"cycles", cycles},
                 {"enclosed_sample", point_json(g.enclosed_sample)}};
}

ojson obstruction_json(const Obstruction& o) {
    return ojson{{"annulus",
                  ojson{{"cx", o.annulus.center.x},
                        {"cy", o.annulus.center.y},
                        {"r_in", o.annulus.r_in},
                        {"r_out", o.annulus.r_out}}},
                 {"witness", point_json(o.witness)},
                 {"decided_at_h", o.decided_at_h}};
}

ojson report_json(const Report& r, bool with_timings) {
    ojson entries = ojson::array();
    for (const auto& e : r.entries)
        entries.push_back(ojson{{"h", e.h},
                                {"k_complement", certificate_json(e.k_cert)},
                                {"l_complement", certificate_json(e.l_cert)},
                                {"union_complement", certificate_json(e.union_cert)}});
    ojson j;
    j["verdict"] = r.verdict;
    j["resolutions"] = entries;
    if (r.neighborhoods) {
        auto side = [](const NeighborhoodSideCheck& c) {
            return ojson{{"built", c.built},
                         {"eps", c.eps},
                         {"h", c.h},
                         {"k_in_v", c.k_in_v},
                         {"v_in_a", c.v_in_a},
                         {"all_simply_connected", to_string(c.simply_connected)}};
        };
        j["neighborhoods"] = ojson{{"K", side(r.neighborhoods->k)}, {"L", side(r.neighborhoods->l)}};
    }
    if (with_timings) j["timings"] = ojson{{"elapsed_seconds", r.elapsed_seconds}};
    return j;
}

ojson campaign_json(const CampaignSummary& s) {
    ojson j;
    j["instances"] = s.instances;
    j["passed"] = s.passed;
    j["undecided"] = s.undecided;
    j["precondition_violations"] = s.precondition_violations;
    j["defects"] = s.defects;
    j["defect_files"] = s.defect_files;
    return j;
}

} // namespace ptopo
