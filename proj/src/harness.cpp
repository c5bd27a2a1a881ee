#include "ptopo/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <thread>

#include "ptopo/constructions.hpp"
#include "ptopo/cover.hpp"
#include "ptopo/distance.hpp"
#include "ptopo/error.hpp"
#include "ptopo/rng.hpp"
#include "ptopo/scene_io.hpp"

namespace ptopo {

void GenParams::validate() const {
    if (min_blobs < 1 || max_blobs < min_blobs)
        throw DomainError("gen params: blob count range must be nonempty and positive");
    if (!(min_radius > 0) || !(max_radius >= min_radius))
        throw DomainError("gen params: radius range must be nonempty and positive");
    if (frame.nx < 5 || frame.ny < 5) throw DomainError("gen params: invalid frame");
}

Scene random_compact(const GenParams& p) {
    p.validate();
    const Rect fr = p.frame.rect();

    for (int attempt = 0; attempt < 32; ++attempt) {
        SplitMix64 rng(derive_seed(p.seed, std::uint64_t(attempt)));
        const int count = rng.uniform_int(p.min_blobs, p.max_blobs);

        Scene s;
        for (int i = 0; i < count; ++i) {
            bool placed = false;
            for (int tries = 0; tries < 24 && !placed; ++tries) {
                const double r = rng.uniform(p.min_radius, p.max_radius);
                Point c;
                if (s.empty()) {
                    // keep the whole disk inside the frame with margin to spare
                    const double inset = 2 * p.frame.h + r + 0.02 * p.frame.width();
                    c = {rng.uniform(fr.xmin + inset, fr.xmax - inset),
                         rng.uniform(fr.ymin + inset, fr.ymax - inset)};
                } else {
                    // new center inside an existing disk guarantees overlap,
                    // so the union stays connected
                    const Disk& anchor = std::get<Disk>(
                        s.primitives[size_t(rng.uniform_int(0, int(s.primitives.size()) - 1))]);
                    const double ang = rng.uniform(0.0, 6.283185307179586);
                    const double rad = anchor.radius * std::sqrt(rng.uniform());
                    c = {anchor.center.x + rad * std::cos(ang),
                         anchor.center.y + rad * std::sin(ang)};
                }
                const double inset = 2 * p.frame.h + r + 0.02 * p.frame.width();
                if (c.x < fr.xmin + inset || c.x > fr.xmax - inset ||
                    c.y < fr.ymin + inset || c.y > fr.ymax - inset)
                    continue;
                s.primitives.push_back(Disk{c, r});
                placed = true;
            }
        }
        if (s.empty()) continue;

        // A loop of disks can fence off a hole; accept only candidates whose
        // sphere complement certifies connected at the generation resolution.
        const double h_gen = std::min(p.frame.h, p.min_radius / 4);
        const Certificate cert =
            sphere_connected_complement(grid_for_scene(s, p.frame, h_gen, RasterMode::outer));
        if (cert.verdict == Verdict::connected) return s;
    }
    throw DomainError("random_compact: retries exhausted without a certifiable instance");
}

ComponentLabeling oracle_label(const RasterGrid& g, Side side) {
    const int nx = g.nx(), ny = g.ny();
    const bool want = (side == Side::occupied);
    const bool diag = (side == Side::occupied); // 8-connectivity for occupied

    ComponentLabeling out;
    out.side = side;
    out.nx = nx;
    out.ny = ny;
    out.labels.assign(size_t(nx) * ny, -1);

    auto member = [&](int ix, int iy) { return g.occupied(ix, iy) == want; };

    std::vector<std::pair<int, int>> stack;
    for (int sy = 0; sy < ny; ++sy) {
        for (int sx = 0; sx < nx; ++sx) {
            if (!member(sx, sy) || out.labels[size_t(sy) * nx + sx] >= 0) continue;
            const int id = int(out.components.size());
            ComponentInfo info;
            info.id = id;
            info.rep_x = sx;
            info.rep_y = sy;
            out.components.push_back(info);

            stack.clear();
            stack.emplace_back(sx, sy);
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                if (out.labels[size_t(cy) * nx + cx] >= 0 || !member(cx, cy)) continue;
                // expand to the whole horizontal run
                int x0 = cx, x1 = cx;
                while (x0 > 0 && member(x0 - 1, cy) && out.labels[size_t(cy) * nx + x0 - 1] < 0) --x0;
                while (x1 + 1 < nx && member(x1 + 1, cy) && out.labels[size_t(cy) * nx + x1 + 1] < 0) ++x1;
                for (int x = x0; x <= x1; ++x) {
                    out.labels[size_t(cy) * nx + x] = id;
                    out.components[size_t(id)].cell_count++;
                    if (g.frame().on_border(x, cy)) out.components[size_t(id)].bounded = false;
                }
                const int lo = diag ? x0 - 1 : x0;
                const int hi = diag ? x1 + 1 : x1;
                for (int dy = -1; dy <= 1; dy += 2) {
                    const int yy = cy + dy;
                    if (yy < 0 || yy >= ny) continue;
                    for (int x = std::max(0, lo); x <= std::min(nx - 1, hi); ++x)
                        if (member(x, yy) && out.labels[size_t(yy) * nx + x] < 0)
                            stack.emplace_back(x, yy);
                }
            }
        }
    }
    return out;
}

namespace {

// Certificate for one scene at exactly one resolution: outer grid first
// (can certify connected), inner grid second (can certify disconnected).
Certificate decide_at_h(const Scene& s, const Frame& frame, double h) {
    Certificate outer = sphere_connected_complement(grid_for_scene(s, frame, h, RasterMode::outer));
    if (outer.decided()) return outer;
    Certificate inner = sphere_connected_complement(grid_for_scene(s, frame, h, RasterMode::inner));
    if (inner.decided()) return inner;
    return outer;
}

} // namespace

Report verify_union(const Scene& k, const Scene& l, const Frame& frame, double h0,
                    double floor_h, bool with_neighborhoods) {
    const auto t0 = std::chrono::steady_clock::now();
    const double d = set_distance(k, l);
    if (!(d > 0)) throw DomainError("verify_union: scenes are not disjoint");

    Scene both = k;
    both.primitives.insert(both.primitives.end(), l.primitives.begin(), l.primitives.end());

    Report report;
    report.verdict = "undecided";
    for (double h = h0; h >= floor_h * (1 - 1e-9); h /= 2) {
        ResolutionEntry entry;
        entry.h = h;
        entry.k_cert = decide_at_h(k, frame, h);
        entry.l_cert = decide_at_h(l, frame, h);
        entry.union_cert = decide_at_h(both, frame, h);
        report.entries.push_back(entry);

        if (entry.k_cert.verdict == Verdict::disconnected ||
            entry.l_cert.verdict == Verdict::disconnected) {
            report.verdict = "precondition-violation";
            break;
        }
        if (entry.k_cert.verdict == Verdict::connected &&
            entry.l_cert.verdict == Verdict::connected && entry.union_cert.decided()) {
            report.verdict =
                entry.union_cert.verdict == Verdict::connected ? "pass" : "defect";
            break;
        }
    }

    if (with_neighborhoods && report.verdict == "pass") {
        const auto [a1, a2] = separate(k, l);
        auto side_check = [&](const Scene& part, const Scene& nbhd) {
            const NeighborhoodResult r = build_neighborhood(part, nbhd, frame, h0, floor_h);
            NeighborhoodSideCheck c;
            c.built = r.success;
            c.eps = r.eps;
            c.h = r.h;
            c.k_in_v = r.certificates.k_in_v;
            c.v_in_a = r.certificates.v_in_a;
            c.simply_connected = r.certificates.simply_connected.verdict;
            return c;
        };
        NeighborhoodCheck nc;
        nc.k = side_check(k, a1);
        nc.l = side_check(l, a2);
        report.neighborhoods = nc;
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

struct InstanceOutcome {
    std::string verdict;
    std::optional<SceneDocument> defect_dump;
};

InstanceOutcome run_instance(int index, const GenParams& p) {
    GenParams pk = p;
    pk.seed = derive_seed(p.seed, std::uint64_t(2 * index));
    const Scene k = random_compact(pk);

    // Grow the partner in the remaining space: regenerate until disjoint
    // with a margin.
    const double gap = p.frame.width() / 64;
    Scene l;
    bool found = false;
    for (int t = 0; t < 24 && !found; ++t) {
        GenParams pl = p;
        pl.seed = derive_seed(p.seed, std::uint64_t(2 * index + 1) + std::uint64_t(t) * 0x10001);
        const Scene cand = random_compact(pl);
        if (set_distance(k, cand) >= gap) {
            l = cand;
            found = true;
        }
    }
    InstanceOutcome out;
    if (!found) {
        out.verdict = "undecided"; // could not place a disjoint partner
        return out;
    }

    const Report rep =
        verify_union(k, l, p.frame, default_initial_h(p.frame), default_floor_h(p.frame));
    out.verdict = rep.verdict;
    if (rep.verdict == "defect") {
        SceneDocument doc;
        doc.frame = p.frame;
        doc.sets["K"] = k;
        doc.sets["L"] = l;
        out.defect_dump = doc;
    }
    return out;
}

} // namespace

CampaignSummary fuzz_campaign(int n, const GenParams& p, const std::string& defect_dir,
                              int threads) {
    if (n < 1) throw DomainError("fuzz_campaign: instance count must be >= 1");
    p.validate();
    if (threads <= 0) threads = int(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, n);

    std::vector<InstanceOutcome> outcomes;
    outcomes.resize(size_t(n));
    std::vector<std::future<void>> workers;
    for (int w = 0; w < threads; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w]() {
            for (int i = w; i < n; i += threads) outcomes[size_t(i)] = run_instance(i, p);
        }));
    }
    for (auto& f : workers) f.get();

    CampaignSummary summary;
    summary.instances = n;
    for (int i = 0; i < n; ++i) {
        const auto& o = outcomes[size_t(i)];
        if (o.verdict == "pass") summary.passed++;
        else if (o.verdict == "precondition-violation") summary.precondition_violations++;
        else if (o.verdict == "defect") summary.defects++;
        else summary.undecided++;
        if (o.defect_dump) {
            const std::string file = defect_dir + "/defect_" + std::to_string(i) + ".json";
            std::ofstream out(file, std::ios::binary);
            out << serialize_scene(*o.defect_dump);
            summary.defect_files.push_back(file);
        }
    }
    return summary;
}

} // namespace ptopo
