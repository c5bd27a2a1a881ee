// Command-line front end: scene/mask ingestion, connectivity certificates,
// constructions, SVG rendering, randomized verification.
//
// Exit codes: 0 decided/pass, 1 property violated or precondition violation,
// 2 input error, 3 undecided at the resolution floor.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ptopo/error.hpp"
#include "ptopo/harness.hpp"
#include "ptopo/json_io.hpp"
#include "ptopo/pgm_io.hpp"
#include "ptopo/rng.hpp"
#include "ptopo/scene_io.hpp"
#include "ptopo/svg.hpp"
#include "ptopo/winding.hpp"

namespace {

using namespace ptopo;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct CommonOpts {
    std::string input;
    std::string set_name;
    double h = 0.0;     // 0 = default policy
    double floor = 0.0; // 0 = default policy
    std::string mode = "outer";
    std::string svg_path;
};

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

bool is_pgm(const std::string& path) {
    return path.size() > 4 && path.substr(path.size() - 4) == ".pgm";
}

RasterMode parse_mode(const std::string& m) {
    if (m == "outer") return RasterMode::outer;
    if (m == "inner") return RasterMode::inner;
    throw InputError("mode must be 'outer' or 'inner'");
}

const Scene& pick_set(const SceneDocument& doc, std::string& name) {
    if (name.empty()) {
        if (doc.sets.count("K")) name = "K";
        else if (doc.sets.size() == 1) name = doc.sets.begin()->first;
        else throw InputError("document has several sets; choose one with --set");
    }
    return doc.require(name);
}

double initial_h(const CommonOpts& o, const Frame& f) {
    if (o.h > 0) return o.h;
    return std::min(f.h, default_initial_h(f));
}

double floor_h(const CommonOpts& o, const Frame& f) {
    if (o.floor > 0) return o.floor;
    return std::min(default_floor_h(f), initial_h(o, f));
}

// Scene documents get the analytic pipeline; PGM masks are labeled as-is.
struct GridInput {
    RasterGrid grid;
    std::optional<SceneDocument> doc;
    std::string set_name;
};

GridInput load_grid(const CommonOpts& o) {
    if (is_pgm(o.input))
        return {load_pgm(o.input, parse_mode(o.mode)), std::nullopt, ""};
    SceneDocument doc = load_scene_file(o.input);
    std::string name = o.set_name;
    const Scene& s = pick_set(doc, name);
    const double h = initial_h(o, doc.frame);
    RasterGrid g = grid_for_scene(s, doc.frame, h, parse_mode(o.mode));
    return {std::move(g), std::move(doc), name};
}

int cmd_components(const CommonOpts& o) {
    const GridInput in = load_grid(o);
    const ComponentLabeling occ = label_components(in.grid, Side::occupied);
    const ComponentLabeling comp = label_components(in.grid, Side::complement);
    ojson j;
    j["input"] = o.input;
    j["h"] = in.grid.frame().h;
    j["mode"] = to_string(in.grid.mode());
    j["occupied"] = labeling_json(occ, in.grid.frame());
    j["complement"] = labeling_json(comp, in.grid.frame());
    emit(j);
    return kExitOk;
}

int certificate_exit(const Certificate& c) {
    return c.decided() ? kExitOk : kExitUndecided;
}

int cmd_sphere_connected(const CommonOpts& o) {
    Certificate cert;
    if (is_pgm(o.input)) {
        cert = sphere_connected_complement(load_pgm(o.input, parse_mode(o.mode)));
    } else {
        SceneDocument doc = load_scene_file(o.input);
        std::string name = o.set_name;
        const Scene& s = pick_set(doc, name);
        cert = decide_sphere_connected(s, doc.frame, initial_h(o, doc.frame),
                                       floor_h(o, doc.frame));
    }
    emit(certificate_json(cert));
    return certificate_exit(cert);
}

int cmd_simply_connected(const CommonOpts& o) {
    ojson j;
    Certificate whole;
    if (is_pgm(o.input)) {
        const RasterGrid g = load_pgm(o.input, parse_mode(o.mode));
        whole = all_simply_connected(g);
        const ComponentLabeling occ = label_components(g, Side::occupied);
        ojson per = ojson::array();
        for (const auto& comp : occ.components)
            per.push_back(certificate_json(component_simply_connected(g, occ, comp.id)));
        j["components"] = per;
    } else {
        SceneDocument doc = load_scene_file(o.input);
        std::string name = o.set_name;
        const Scene& s = pick_set(doc, name);
        const double h0 = initial_h(o, doc.frame);
        const double hf = floor_h(o, doc.frame);
        for (double h = h0; h >= hf * (1 - 1e-9); h /= 2) {
            const RasterGrid outer = grid_for_scene(s, doc.frame, h, RasterMode::outer);
            whole = all_simply_connected(outer);
            if (whole.decided()) {
                const ComponentLabeling occ = label_components(outer, Side::occupied);
                ojson per = ojson::array();
                for (const auto& comp : occ.components)
                    per.push_back(certificate_json(component_simply_connected(outer, occ, comp.id)));
                j["components"] = per;
                break;
            }
            const RasterGrid inner = grid_for_scene(s, doc.frame, h, RasterMode::inner);
            whole = all_simply_connected(inner);
            if (whole.decided()) {
                const ComponentLabeling occ = label_components(inner, Side::occupied);
                ojson per = ojson::array();
                for (const auto& comp : occ.components)
                    per.push_back(certificate_json(component_simply_connected(inner, occ, comp.id)));
                j["components"] = per;
                break;
            }
        }
    }
    j["all_simply_connected"] =
        whole.verdict == Verdict::connected ? "yes"
        : whole.verdict == Verdict::disconnected ? "no"
                                                 : "undecided";
    j["certificate"] = certificate_json(whole);
    emit(j);
    return certificate_exit(whole);
}

int cmd_neighborhood(const CommonOpts& o) {
    SceneDocument doc = load_scene_file(o.input);
    const Scene& k = doc.require("K");
    const Scene& a = doc.require("A");
    const NeighborhoodResult r = build_neighborhood(k, a, doc.frame, initial_h(o, doc.frame),
                                                    floor_h(o, doc.frame));
    emit(neighborhood_json(r));
    if (!o.svg_path.empty())
        write_file(o.svg_path, render_construction_svg(doc.frame, &k, &a, &r, nullptr));
    return r.success ? kExitOk : kExitUndecided;
}

int cmd_grid_cycle(const CommonOpts& o, double eps) {
    SceneDocument doc = load_scene_file(o.input);
    std::string name = o.set_name;
    const Scene& s = pick_set(doc, name);
    if (!(eps > 0)) eps = doc.frame.width() / 64;
    const GridCycleSet gc = grid_cycle(s, eps);
    ojson j = grid_cycle_json(gc);
    j["winding_around_sample"] = winding_number(gc.cycles, gc.enclosed_sample);
    emit(j);
    if (!o.svg_path.empty())
        write_file(o.svg_path, render_construction_svg(doc.frame, &s, nullptr, nullptr, &gc));
    return kExitOk;
}

int cmd_annulus(const CommonOpts& o) {
    SceneDocument doc = load_scene_file(o.input);
    std::string name = o.set_name;
    const Scene& s = pick_set(doc, name);
    const Obstruction obs = annulus_obstruction(s, doc.frame, initial_h(o, doc.frame),
                                                floor_h(o, doc.frame));
    emit(obstruction_json(obs));
    return kExitOk;
}

int cmd_verify_union(const CommonOpts& o, bool with_neighborhoods) {
    SceneDocument doc = load_scene_file(o.input);
    const Scene& k = doc.require("K");
    const Scene& l = doc.require("L");
    const Report rep = verify_union(k, l, doc.frame, initial_h(o, doc.frame),
                                    floor_h(o, doc.frame), with_neighborhoods);
    emit(report_json(rep));
    if (rep.verdict == "pass") return kExitOk;
    if (rep.verdict == "undecided") return kExitUndecided;
    return kExitViolation;
}

int cmd_fuzz(std::uint64_t seed, int count, const std::string& defect_dir, int threads) {
    GenParams p;
    p.seed = seed;
    p.frame = Frame(Rect{-12, -12, 12, 12}, 24.0 / 256);
    const CampaignSummary s = fuzz_campaign(count, p, defect_dir, threads);
    emit(campaign_json(s));
    return s.defects == 0 ? kExitOk : kExitViolation;
}

int cmd_render(const CommonOpts& o) {
    const SceneDocument doc = load_scene_file(o.input);
    const std::string svg = render_scene_svg(doc);
    if (o.svg_path.empty())
        std::cout << svg;
    else
        write_file(o.svg_path, svg);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificate-producing planar topology toolkit"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CommonOpts opts;
    double eps = 0.0;
    std::uint64_t seed = 1;
    int count = 10;
    int threads = 0;
    std::string defect_dir = ".";
    bool with_neighborhoods = false;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        sub->set_help_flag("--help", "print help"); // frees --h for the cell size
        if (needs_input) sub->add_option("input", opts.input, "scene JSON or PGM mask")->required();
        sub->add_option("--set", opts.set_name, "set name inside the document");
        sub->add_option("--h", opts.h, "initial cell size (default: min(frame h, width/256))");
        sub->add_option("--floor", opts.floor, "resolution floor (default: width/4096)");
        sub->add_option("--mode", opts.mode, "raster mode: outer|inner")->check(CLI::IsMember({"outer", "inner"}));
        sub->add_option("--svg", opts.svg_path, "write an SVG rendering to this path");
    };

    CLI::App* c_components = app.add_subcommand("components", "label occupied/complement components");
    add_common(c_components);
    CLI::App* c_sphere = app.add_subcommand("sphere-connected", "complement connectivity on the sphere");
    add_common(c_sphere);
    CLI::App* c_simply = app.add_subcommand("simply-connected", "simple-connectivity certificates");
    add_common(c_simply);
    CLI::App* c_nbhd = app.add_subcommand("neighborhood", "build V with K in V in A, components simply connected");
    add_common(c_nbhd);
    CLI::App* c_cycle = app.add_subcommand("grid-cycle", "boundary cycles of grid squares meeting the set");
    add_common(c_cycle);
    c_cycle->add_option("--eps", eps, "grid pitch (default: frame width/64)");
    CLI::App* c_annulus = app.add_subcommand("annulus", "annulus obstruction for a disconnected complement");
    add_common(c_annulus);
    CLI::App* c_union = app.add_subcommand("verify-union", "union of two disjoint compacts: complement connectivity");
    add_common(c_union);
    c_union->add_flag("--with-neighborhoods", with_neighborhoods,
                      "also exercise the neighborhood construction on both parts");
    CLI::App* c_fuzz = app.add_subcommand("fuzz", "randomized verification campaign");
    c_fuzz->set_help_flag("--help", "print help");
    c_fuzz->add_option("--seed", seed, "campaign seed");
    c_fuzz->add_option("--count", count, "number of instances");
    c_fuzz->add_option("--threads", threads, "worker threads (default: hardware)");
    c_fuzz->add_option("--defect-dir", defect_dir, "directory for defect dumps");
    CLI::App* c_render = app.add_subcommand("render", "deterministic SVG of a scene document");
    add_common(c_render);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_components->parsed()) return cmd_components(opts);
        if (c_sphere->parsed()) return cmd_sphere_connected(opts);
        if (c_simply->parsed()) return cmd_simply_connected(opts);
        if (c_nbhd->parsed()) return cmd_neighborhood(opts);
        if (c_cycle->parsed()) return cmd_grid_cycle(opts, eps);
        if (c_annulus->parsed()) return cmd_annulus(opts);
        if (c_union->parsed()) return cmd_verify_union(opts, with_neighborhoods);
        if (c_fuzz->parsed()) return cmd_fuzz(seed, count, defect_dir, threads);
        if (c_render->parsed()) return cmd_render(opts);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitInput;
}
