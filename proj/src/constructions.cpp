#include "ptopo/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <queue>
#include <tuple>

#include "ptopo/distance.hpp"
#include "ptopo/error.hpp"

namespace ptopo {

RasterGrid rasterize_annulus(const Annulus& a, const Frame& f, RasterMode mode) {
    if (!(a.r_in > 0) || !(a.r_out > a.r_in))
        throw GeometryError("annulus: radii must satisfy 0 < r_in < r_out");
    const Rect bb{a.center.x - a.r_out, a.center.y - a.r_out,
                  a.center.x + a.r_out, a.center.y + a.r_out};
    if (!f.contains_with_margin(bb))
        throw GeometryError("rasterize_annulus: frame must contain the annulus with a 2h margin");

    RasterGrid g(f, mode);
    for (int iy = 0; iy < f.ny; ++iy) {
        for (int ix = 0; ix < f.nx; ++ix) {
            const Rect sq = f.cell_rect(ix, iy);
            const double dmin = dist_point_rect(a.center, sq);
            const double dx = std::max(a.center.x - sq.xmin, sq.xmax - a.center.x);
            const double dy = std::max(a.center.y - sq.ymin, sq.ymax - a.center.y);
            const double dmax = std::hypot(dx, dy);
            if (mode == RasterMode::outer) {
                if (dmin <= a.r_out + kTol && dmax >= a.r_in - kTol) g.set(ix, iy, true);
            } else {
                if (dmin >= a.r_in + kTol && dmax <= a.r_out - kTol) g.set(ix, iy, true);
            }
        }
    }
    const Annulus an = a;
    g.set_outside_certifier([an](Point p) {
        const double d = dist(p, an.center);
        return d < an.r_in - kTol || d > an.r_out + kTol;
    });
    return g;
}

// --- escape routes -----------------------------------------------------------

namespace {

// Chessboard distance to the nearest occupied cell, saturated at `cap`.
std::vector<int> chebyshev_distance(const RasterGrid& g, int cap) {
    const int nx = g.nx(), ny = g.ny();
    std::vector<int> d(size_t(nx) * ny, cap);
    std::deque<int> q;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            if (g.occupied(ix, iy)) {
                d[size_t(iy) * nx + ix] = 0;
                q.push_back(iy * nx + ix);
            }
    while (!q.empty()) {
        const int cur = q.front();
        q.pop_front();
        const int cx = cur % nx, cy = cur / nx;
        const int dc = d[size_t(cur)];
        if (dc + 1 >= cap) continue;
        for (int oy = -1; oy <= 1; ++oy) {
            for (int ox = -1; ox <= 1; ++ox) {
                if (ox == 0 && oy == 0) continue;
                const int tx = cx + ox, ty = cy + oy;
                if (tx < 0 || tx >= nx || ty < 0 || ty >= ny) continue;
                const size_t t = size_t(ty) * nx + tx;
                if (d[t] > dc + 1) {
                    d[t] = dc + 1;
                    q.push_back(int(t));
                }
            }
        }
    }
    return d;
}

void mark_sleeve(std::vector<std::uint8_t>& sleeve, int nx, int ny,
                 const std::vector<std::pair<int, int>>& cells) {
    for (const auto& [cx, cy] : cells)
        for (int oy = -1; oy <= 1; ++oy)
            for (int ox = -1; ox <= 1; ++ox) {
                const int tx = cx + ox, ty = cy + oy;
                if (tx >= 0 && tx < nx && ty >= 0 && ty < ny)
                    sleeve[size_t(ty) * nx + tx] = 1;
            }
}

} // namespace

std::vector<EscapeRoute> escape_paths(const ComponentLabeling& w_complement,
                                      const RasterGrid& k_outer) {
    if (w_complement.side != Side::complement)
        throw DomainError("escape_paths: labeling must be of the complement side");
    const Frame& f = k_outer.frame();
    const int nx = f.nx, ny = f.ny;
    if (w_complement.nx != nx || w_complement.ny != ny)
        throw DomainError("escape_paths: grids disagree on dimensions");

    const std::vector<int> kdist = chebyshev_distance(k_outer, 3);
    std::vector<std::uint8_t> sleeve(size_t(nx) * ny, 0);

    // Weighted shortest path; cells hugging the clearance zone cost extra so
    // routes keep distance from the compact set where possible.
    const auto admissible = [&](int ix, int iy) {
        const size_t i = size_t(iy) * nx + ix;
        return !k_outer.occupied(ix, iy) && kdist[i] >= 2 && !sleeve[i];
    };

    std::vector<EscapeRoute> routes;
    for (const auto& comp : w_complement.components) {
        if (!comp.bounded) continue;
        const int sx = comp.rep_x, sy = comp.rep_y;
        if (sleeve[size_t(sy) * nx + sx]) continue; // hole already vented
        if (!admissible(sx, sy))
            throw NoPathError("escape_paths: hole representative too close to the set");

        using Node = std::tuple<long, int, int>; // cost, iy, ix
        std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
        std::vector<long> cost(size_t(nx) * ny, -1);
        std::vector<int> parent(size_t(nx) * ny, -1);
        cost[size_t(sy) * nx + sx] = 0;
        pq.emplace(0, sy, sx);
        int goal = -1;
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        while (!pq.empty()) {
            const auto [c, cy, cx] = pq.top();
            pq.pop();
            const size_t cur = size_t(cy) * nx + cx;
            if (c > cost[cur]) continue;
            if (f.on_border(cx, cy)) {
                goal = int(cur);
                break;
            }
            for (int k = 0; k < 4; ++k) {
                const int tx = cx + dx[k], ty = cy + dy[k];
                if (!f.in_grid(tx, ty) || !admissible(tx, ty)) continue;
                const size_t t = size_t(ty) * nx + tx;
                const long w = 1 + (kdist[t] == 2 ? 64 : 0);
                if (cost[t] < 0 || c + w < cost[t]) {
                    cost[t] = c + w;
                    parent[t] = int(cur);
                    pq.emplace(c + w, ty, tx);
                }
            }
        }
        if (goal < 0)
            throw NoPathError("escape_paths: no route from hole to frame border");

        EscapeRoute route;
        for (int cur = goal; cur != -1; cur = parent[size_t(cur)])
            route.cells.emplace_back(cur % nx, cur / nx);
        std::reverse(route.cells.begin(), route.cells.end());
        for (const auto& [cx, cy] : route.cells)
            route.path.vertices.push_back(f.cell_center(cx, cy));
        mark_sleeve(sleeve, nx, ny, route.cells);
        routes.push_back(std::move(route));
    }
    return routes;
}

// --- neighborhood construction ----------------------------------------------

namespace {

bool grid_subset(const RasterGrid& a, const RasterGrid& b) {
    for (int iy = 0; iy < a.ny(); ++iy)
        for (int ix = 0; ix < a.nx(); ++ix)
            if (a.occupied(ix, iy) && !b.occupied(ix, iy)) return false;
    return true;
}

} // namespace

NeighborhoodResult build_neighborhood(const Scene& k, const Scene& a, const Frame& frame,
                                      double h0, double floor_h) {
    if (k.empty() || a.empty()) throw DomainError("build_neighborhood: empty scene");

    // Anchor points of K lie in K; one of them clearly outside A certifies
    // K not contained in A. Straddling cases surface as zero boundary
    // clearance below.
    for (const auto& prim : k.primitives) {
        std::vector<Point> anchors;
        if (const Disk* d = std::get_if<Disk>(&prim)) anchors.push_back(d->center);
        else if (const Rect* r = std::get_if<Rect>(&prim)) anchors.push_back(r->center());
        else anchors = std::get<Polygon>(prim).vertices;
        for (const Point& z : anchors)
            if (point_clearly_outside(z, a))
                throw DomainError("build_neighborhood: K is not contained in A");
    }

    const double clearance = boundary_distance(k, a);
    if (!(clearance > kTol))
        throw DomainError("build_neighborhood: K touches the boundary of A");
    const double eps = clearance / 3;

    NeighborhoodResult result;
    result.eps = eps;
    result.cover = ball_cover(k, eps);
    Scene w;
    w.closed = false;
    for (const Disk& d : result.cover) w.primitives.push_back(d);

    bool kc_certified = false;
    for (double h = h0; h >= floor_h * (1 - 1e-9); h /= 2) {
        result.h = h;
        const RasterGrid k_outer = grid_for_scene(k, frame, h, RasterMode::outer);
        const RasterGrid a_inner = grid_for_scene(a, frame, h, RasterMode::inner);

        if (!grid_subset(k_outer, a_inner)) continue; // K in A not visible yet

        if (!kc_certified) {
            const Certificate outer_cert = sphere_connected_complement(k_outer);
            if (outer_cert.verdict == Verdict::connected) {
                kc_certified = true;
            } else {
                const Certificate inner_cert =
                    sphere_connected_complement(grid_for_scene(k, frame, h, RasterMode::inner));
                if (inner_cert.verdict == Verdict::disconnected)
                    throw DomainError("build_neighborhood: complement of K is disconnected");
                continue;
            }
        }

        const RasterGrid w_outer = rasterize(w, Frame(frame.rect(), h), RasterMode::outer);
        const ComponentLabeling wc = label_components(w_outer, Side::complement);

        std::vector<EscapeRoute> rays;
        try {
            rays = escape_paths(wc, k_outer);
        } catch (const NoPathError&) {
            continue;
        }

        RasterGrid v(w_outer.frame(), RasterMode::outer);
        std::vector<std::uint8_t> sleeve(size_t(v.nx()) * v.ny(), 0);
        for (const auto& r : rays) mark_sleeve(sleeve, v.nx(), v.ny(), r.cells);
        for (int iy = 0; iy < v.ny(); ++iy)
            for (int ix = 0; ix < v.nx(); ++ix)
                if (w_outer.occupied(ix, iy) && !sleeve[size_t(iy) * v.nx() + ix])
                    v.set(ix, iy, true);

        NeighborhoodCertificates certs;
        certs.k_in_v = grid_subset(k_outer, v);
        certs.v_in_a = grid_subset(v, a_inner);
        certs.simply_connected = all_simply_connected(v);

        result.rays = std::move(rays);
        result.v = std::move(v);
        result.certificates = certs;
        if (certs.k_in_v && certs.v_in_a &&
            certs.simply_connected.verdict == Verdict::connected) {
            result.success = true;
            return result;
        }
    }
    result.success = false;
    return result;
}

// --- grid cycles --------------------------------------------------------------

namespace {

using CellKey = std::pair<long, long>;

} // namespace

GridCycleSet grid_cycle(const Scene& k, double eps) {
    if (!(eps > 0)) throw DomainError("grid_cycle: eps must be positive");
    if (k.empty()) throw DomainError("grid_cycle: empty scene");

    const Rect bb = scene_bbox(k);
    const long ix0 = long(std::floor(bb.xmin / eps)) - 1;
    const long ix1 = long(std::ceil(bb.xmax / eps)) + 1;
    const long iy0 = long(std::floor(bb.ymin / eps)) - 1;
    const long iy1 = long(std::ceil(bb.ymax / eps)) + 1;

    std::map<CellKey, bool> selected;
    for (long iy = iy0; iy <= iy1; ++iy) {
        for (long ix = ix0; ix <= ix1; ++ix) {
            const Rect cell{ix * eps, iy * eps, (ix + 1) * eps, (iy + 1) * eps};
            for (const auto& prim : k.primitives) {
                if (square_intersects(prim, cell)) {
                    selected[{ix, iy}] = true;
                    break;
                }
            }
        }
    }

    const auto has = [&](long ix, long iy) { return selected.count({ix, iy}) != 0; };

    // Close diagonal-only contacts so every lattice vertex ends up with at
    // most one incoming and one outgoing boundary edge.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<CellKey> to_add;
        for (const auto& [key, _] : selected) {
            const auto [ix, iy] = key;
            if (has(ix + 1, iy + 1) && !has(ix + 1, iy) && !has(ix, iy + 1))
                to_add.push_back({ix + 1, iy});
            if (has(ix + 1, iy - 1) && !has(ix + 1, iy) && !has(ix, iy - 1))
                to_add.push_back({ix + 1, iy});
        }
        for (const auto& c : to_add)
            if (!selected.count(c)) {
                selected[c] = true;
                changed = true;
            }
    }

    // Directed boundary edges, selected square on the left.
    using Vertex = std::pair<long, long>;
    std::map<Vertex, Vertex> next;
    for (const auto& [key, _] : selected) {
        const auto [ix, iy] = key;
        if (!has(ix, iy - 1)) next[{ix, iy}] = {ix + 1, iy};
        if (!has(ix + 1, iy)) next[{ix + 1, iy}] = {ix + 1, iy + 1};
        if (!has(ix, iy + 1)) next[{ix + 1, iy + 1}] = {ix, iy + 1};
        if (!has(ix - 1, iy)) next[{ix, iy + 1}] = {ix, iy};
    }

    GridCycleSet out;
    out.eps = eps;
    std::map<Vertex, bool> used;
    for (const auto& [start, _] : next) {
        if (used.count(start)) continue;
        PolyPath cycle;
        cycle.closed = true;
        Vertex cur = start;
        do {
            used[cur] = true;
            cycle.vertices.push_back({cur.first * eps, cur.second * eps});
            auto it = next.find(cur);
            if (it == next.end())
                throw std::logic_error("grid_cycle: boundary chain broke");
            cur = it->second;
        } while (cur != start);
        validate_path(cycle);
        out.cycles.push_back(std::move(cycle));
    }

    // Enclosed sample: an interior point of the scene, nudged off lattice
    // lines so winding numbers are well defined.
    Point z = interior_point(k.primitives[0]);
    const auto off_lattice = [&](Point p) {
        const double fx = std::abs(p.x / eps - std::round(p.x / eps));
        const double fy = std::abs(p.y / eps - std::round(p.y / eps));
        return std::min(fx, fy) * eps > 1e-9;
    };
    if (!off_lattice(z)) {
        for (double scale : {1e-4, 1e-3, 1e-2}) {
            const Point cand{z.x + 0.37 * eps * scale, z.y + 0.203 * eps * scale};
            if (off_lattice(cand) && point_in_scene(cand, k)) {
                z = cand;
                break;
            }
        }
    }
    out.enclosed_sample = z;
    return out;
}

// --- annulus obstruction -------------------------------------------------------

Obstruction annulus_obstruction(const Scene& k, const Frame& frame, double h0, double floor_h) {
    if (k.empty()) throw DomainError("annulus_obstruction: empty scene");

    for (double h = h0; h >= floor_h * (1 - 1e-9); h /= 2) {
        const RasterGrid inner = grid_for_scene(k, frame, h, RasterMode::inner);
        const Certificate inner_cert = sphere_connected_complement(inner);
        if (inner_cert.verdict == Verdict::disconnected) {
            // Among all enclosed certified-outside cells, center the annulus
            // on the one with the largest clearance; the certificate witness
            // itself may hug the set.
            const ComponentLabeling lab = label_components(inner, Side::complement);
            Point z0 = *inner_cert.witness_point();
            double d0 = 0;
            for (int iy = 0; iy < lab.ny; ++iy)
                for (int ix = 0; ix < lab.nx; ++ix) {
                    const int id = lab.label(ix, iy);
                    if (id < 0 || !lab.components[size_t(id)].bounded) continue;
                    const Point z = inner.frame().cell_center(ix, iy);
                    if (!inner.point_certified_outside(z)) continue;
                    const double d = dist_point_scene(z, k);
                    if (d > d0) {
                        d0 = d;
                        z0 = z;
                    }
                }
            if (!(d0 > 0))
                throw std::logic_error("annulus_obstruction: witness touches the set");
            Obstruction obs;
            obs.witness = z0;
            obs.decided_at_h = h;
            obs.annulus.center = z0;
            obs.annulus.r_in = d0 / 3; // half of eps = 2*d0/3
            obs.annulus.r_out = farthest_point_scene(z0, k) + 2 * h;
            return obs;
        }
        const Certificate outer_cert =
            sphere_connected_complement(grid_for_scene(k, frame, h, RasterMode::outer));
        if (outer_cert.verdict == Verdict::connected)
            throw DomainError("annulus_obstruction: complement of K is connected, no obstruction exists");
    }
    throw DomainError("annulus_obstruction: could not certify a disconnected complement above the resolution floor");
}

bool check_obstruction(const RasterGrid& v, Point witness) {
    const Frame& f = v.frame();
    const int ix = f.cell_x(witness.x), iy = f.cell_y(witness.y);
    if (v.occupied(ix, iy))
        throw DomainError("check_obstruction: witness lies inside the candidate neighborhood");
    const ComponentLabeling lab = label_components(v, Side::complement);
    return lab.components[size_t(lab.label(ix, iy))].bounded;
}

} // namespace ptopo
