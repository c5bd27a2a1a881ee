#include "ptopo/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ptopo/error.hpp"

namespace ptopo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double inf() { return std::numeric_limits<double>::infinity(); }

std::vector<Seg> primitive_edges(const Primitive& prim) {
    std::vector<Seg> edges;
    if (const Rect* r = std::get_if<Rect>(&prim)) {
        const Point c00{r->xmin, r->ymin}, c10{r->xmax, r->ymin};
        const Point c11{r->xmax, r->ymax}, c01{r->xmin, r->ymax};
        edges = {{c00, c10}, {c10, c11}, {c11, c01}, {c01, c00}};
    } else if (const Polygon* p = std::get_if<Polygon>(&prim)) {
        const auto& v = p->vertices;
        for (size_t i = 0; i < v.size(); ++i) edges.push_back({v[i], v[(i + 1) % v.size()]});
    }
    return edges;
}

// Solid-solid distance for a primitive pair; 0 when they meet or overlap.
double primitive_distance(const Primitive& pa, const Primitive& pb) {
    // Canonical order by variant index keeps the computation symmetric.
    if (pa.index() > pb.index()) return primitive_distance(pb, pa);

    if (const Disk* da = std::get_if<Disk>(&pa)) {
        if (const Disk* db = std::get_if<Disk>(&pb))
            return std::max(0.0, dist(da->center, db->center) - da->radius - db->radius);
        return std::max(0.0, dist_point_primitive(da->center, pb) - da->radius);
    }
    // rect-rect, rect-polygon, polygon-polygon: edge pairs plus containment.
    const auto ea = primitive_edges(pa);
    const auto eb = primitive_edges(pb);
    if (point_in_primitive(ea[0].a, pb) || point_in_primitive(eb[0].a, pa)) return 0.0;
    double best = inf();
    for (const Seg& s : ea)
        for (const Seg& t : eb)
            best = std::min(best, dist_segment_segment(s.a, s.b, t.a, t.b));
    return best;
}

} // namespace

double set_distance(const Scene& a, const Scene& b) {
    if (a.empty() || b.empty()) throw DomainError("set_distance: empty scene");
    double best = inf();
    for (const auto& pa : a.primitives)
        for (const auto& pb : b.primitives)
            best = std::min(best, primitive_distance(pa, pb));
    return best;
}

bool angle_in_arc(double theta, const Arc& arc) {
    double t = std::fmod(theta - arc.a0, kTwoPi);
    if (t < 0) t += kTwoPi;
    return arc.a0 + t <= arc.a1 + 1e-15;
}

double dist_point_arc(Point p, const Arc& arc) {
    const Point d = p - arc.center;
    const double D = norm(d);
    if (D < 1e-300) return arc.r;
    const double theta = std::atan2(d.y, d.x);
    if (angle_in_arc(theta, arc)) return std::abs(D - arc.r);
    return std::min(dist(p, arc.at(arc.a0)), dist(p, arc.at(arc.a1)));
}

namespace {

// Roots t in [0,1] of |seg(t) - c| = r.
std::vector<double> segment_circle_params(Point a, Point b, Point c, double r) {
    std::vector<double> ts;
    const Point v = b - a;
    const Point w = a - c;
    const double A = dot(v, v);
    const double B = 2 * dot(v, w);
    const double C = dot(w, w) - r * r;
    if (A == 0.0) return ts;
    const double disc = B * B - 4 * A * C;
    if (disc < 0) return ts;
    const double sq = std::sqrt(disc);
    for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)})
        if (t >= -1e-12 && t <= 1 + 1e-12) ts.push_back(std::clamp(t, 0.0, 1.0));
    return ts;
}

} // namespace

double dist_segment_arc(Point a, Point b, const Arc& arc) {
    for (double t : segment_circle_params(a, b, arc.center, arc.r)) {
        const Point p = a + t * (b - a);
        const Point d = p - arc.center;
        if (angle_in_arc(std::atan2(d.y, d.x), arc)) return 0.0;
    }
    double best = std::min(dist_point_arc(a, arc), dist_point_arc(b, arc));
    best = std::min(best, dist_point_segment(arc.at(arc.a0), a, b));
    best = std::min(best, dist_point_segment(arc.at(arc.a1), a, b));
    const Point v = b - a;
    const double len2 = dot(v, v);
    if (len2 > 0) {
        const double t = dot(arc.center - a, v) / len2;
        if (t > 0 && t < 1) {
            const Point p = a + t * v;
            const Point d = p - arc.center;
            if (norm(d) > 1e-300 && angle_in_arc(std::atan2(d.y, d.x), arc))
                best = std::min(best, std::abs(norm(d) - arc.r));
        }
    }
    return best;
}

namespace {

bool strictly_inside_any(Point p, const Scene& s, const Primitive* skip) {
    for (const auto& prim : s.primitives) {
        if (&prim == skip) continue;
        if (point_strictly_inside(p, prim, kTol)) return true;
    }
    return false;
}

// Angles where the circle of `disk` crosses another primitive's boundary.
void circle_breakpoints(const Disk& disk, const Primitive& other, std::vector<double>& angles) {
    if (const Disk* d2 = std::get_if<Disk>(&other)) {
        const Point dd = d2->center - disk.center;
        const double D = norm(dd);
        if (D < 1e-300) return; // concentric: no transversal crossing
        const double num = disk.radius * disk.radius + D * D - d2->radius * d2->radius;
        const double cosv = num / (2 * disk.radius * D);
        if (cosv < -1 || cosv > 1) return;
        const double phi = std::atan2(dd.y, dd.x);
        const double alpha = std::acos(std::clamp(cosv, -1.0, 1.0));
        angles.push_back(phi - alpha);
        angles.push_back(phi + alpha);
        return;
    }
    for (const Seg& e : primitive_edges(other)) {
        for (double t : segment_circle_params(e.a, e.b, disk.center, disk.radius)) {
            const Point p = e.a + t * (e.b - e.a);
            const Point d = p - disk.center;
            angles.push_back(std::atan2(d.y, d.x));
        }
    }
}

// Parameters t along segment (a,b) where it crosses another primitive's
// boundary. Collinear overlaps contribute no parameters; the transitions
// they imply surface at the neighbouring non-collinear edges.
void segment_breakpoints(Point a, Point b, const Primitive& other, std::vector<double>& ts) {
    if (const Disk* d = std::get_if<Disk>(&other)) {
        for (double t : segment_circle_params(a, b, d->center, d->radius)) ts.push_back(t);
        return;
    }
    const Point v = b - a;
    for (const Seg& e : primitive_edges(other)) {
        const Point w = e.b - e.a;
        const double denom = cross(v, w);
        if (std::abs(denom) < 1e-300) continue;
        const Point s = e.a - a;
        const double t = cross(s, w) / denom;
        const double u = cross(s, v) / denom;
        if (t >= -1e-12 && t <= 1 + 1e-12 && u >= -1e-12 && u <= 1 + 1e-12)
            ts.push_back(std::clamp(t, 0.0, 1.0));
    }
}

double normalize_angle(double a) {
    double t = std::fmod(a, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

} // namespace

std::vector<BoundaryPiece> boundary_pieces(const Scene& s) {
    std::vector<BoundaryPiece> pieces;
    for (const auto& prim : s.primitives) {
        if (const Disk* d = std::get_if<Disk>(&prim)) {
            std::vector<double> angles;
            for (const auto& other : s.primitives) {
                if (&other == &prim) continue;
                circle_breakpoints(*d, other, angles);
            }
            if (angles.empty()) {
                const Point sample = Point{d->center.x + d->radius, d->center.y};
                if (!strictly_inside_any(sample, s, &prim))
                    pieces.push_back(Arc{d->center, d->radius, 0.0, kTwoPi});
                continue;
            }
            for (double& a : angles) a = normalize_angle(a);
            std::sort(angles.begin(), angles.end());
            const size_t n = angles.size();
            for (size_t i = 0; i < n; ++i) {
                const double a0 = angles[i];
                const double a1 = (i + 1 < n) ? angles[i + 1] : angles[0] + kTwoPi;
                if (a1 - a0 < 1e-14) continue;
                const double mid = (a0 + a1) / 2;
                const Point m{d->center.x + d->radius * std::cos(mid),
                              d->center.y + d->radius * std::sin(mid)};
                if (!strictly_inside_any(m, s, &prim))
                    pieces.push_back(Arc{d->center, d->radius, normalize_angle(a0), normalize_angle(a0) + (a1 - a0)});
            }
        } else {
            for (const Seg& e : primitive_edges(prim)) {
                std::vector<double> ts{0.0, 1.0};
                for (const auto& other : s.primitives) {
                    if (&other == &prim) continue;
                    segment_breakpoints(e.a, e.b, other, ts);
                }
                std::sort(ts.begin(), ts.end());
                for (size_t i = 0; i + 1 < ts.size(); ++i) {
                    const double t0 = ts[i], t1 = ts[i + 1];
                    if (t1 - t0 < 1e-14) continue;
                    const Point m = e.a + ((t0 + t1) / 2) * (e.b - e.a);
                    if (!strictly_inside_any(m, s, &prim))
                        pieces.push_back(Seg{e.a + t0 * (e.b - e.a), e.a + t1 * (e.b - e.a)});
                }
            }
        }
    }
    return pieces;
}

namespace {

double primitive_piece_distance(const Primitive& prim, const BoundaryPiece& piece) {
    if (const Disk* d = std::get_if<Disk>(&prim)) {
        if (const Arc* arc = std::get_if<Arc>(&piece))
            return std::max(0.0, dist_point_arc(d->center, *arc) - d->radius);
        const Seg& sg = std::get<Seg>(piece);
        return std::max(0.0, dist_point_segment(d->center, sg.a, sg.b) - d->radius);
    }
    const auto edges = primitive_edges(prim);
    if (const Arc* arc = std::get_if<Arc>(&piece)) {
        // A piece swallowed by the solid has distance zero; probing the arc's
        // endpoint and midpoint covers the no-edge-crossing case.
        const double amid = (arc->a0 + arc->a1) / 2;
        if (point_in_primitive(arc->at(arc->a0), prim) || point_in_primitive(arc->at(amid), prim))
            return 0.0;
        double best = inf();
        for (const Seg& e : edges) best = std::min(best, dist_segment_arc(e.a, e.b, *arc));
        return best;
    }
    const Seg& sg = std::get<Seg>(piece);
    if (point_in_primitive(sg.a, prim) || point_in_primitive(sg.b, prim)) return 0.0;
    double best = inf();
    for (const Seg& e : edges) best = std::min(best, dist_segment_segment(e.a, e.b, sg.a, sg.b));
    return best;
}

} // namespace

double boundary_distance(const Scene& k, const Scene& a) {
    if (k.empty() || a.empty()) throw DomainError("boundary_distance: empty scene");
    const auto pieces = boundary_pieces(a);
    if (pieces.empty()) throw DomainError("boundary_distance: scene has no boundary");
    double best = inf();
    for (const auto& prim : k.primitives)
        for (const auto& piece : pieces)
            best = std::min(best, primitive_piece_distance(prim, piece));
    return best;
}

} // namespace ptopo
