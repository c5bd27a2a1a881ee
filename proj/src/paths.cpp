#include "ptopo/paths.hpp"

#include <algorithm>
#include <deque>

#include "ptopo/error.hpp"

namespace ptopo {

void validate_path(const PolyPath& p) {
    if (p.vertices.empty()) throw GeometryError("path: no vertices");
    const size_t n = p.vertices.size();
    for (size_t i = 0; i + 1 < n; ++i)
        if (dist(p.vertices[i], p.vertices[i + 1]) <= kTol)
            throw GeometryError("path: consecutive vertices coincide");
    if (p.closed) {
        if (n < 4) throw GeometryError("path: closed path needs >= 4 vertices");
        if (dist(p.vertices[n - 1], p.vertices[0]) <= kTol)
            throw GeometryError("path: closed path must not repeat the first vertex");
    }
}

PolyPath concat_paths(const PolyPath& a, const PolyPath& b) {
    if (a.closed || b.closed) throw GeometryError("concat_paths: operands must be open");
    if (a.vertices.empty()) return b;
    if (b.vertices.empty()) return a;
    if (dist(a.vertices.back(), b.vertices.front()) > kTol)
        throw GeometryError("concat_paths: paths do not share an endpoint");
    PolyPath out = a;
    out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    return out;
}

PolyPath extract_path(const RasterGrid& g, Point a, Point b) {
    const Frame& f = g.frame();
    const int ax = f.cell_x(a.x), ay = f.cell_y(a.y);
    const int bx = f.cell_x(b.x), by = f.cell_y(b.y);
    if (g.occupied(ax, ay) || g.occupied(bx, by))
        throw DomainError("extract_path: endpoint lies in an occupied cell");

    PolyPath path;
    if (ax == bx && ay == by) {
        path.vertices.push_back(a);
        if (dist(a, b) > kTol) path.vertices.push_back(b);
        return path;
    }

    // Breadth-first search over clear cells, 4-adjacent, deterministic
    // neighbour order.
    const int nx = f.nx, ny = f.ny;
    std::vector<int> prev(size_t(nx) * ny, -2);
    std::deque<int> queue;
    const int start = ay * nx + ax;
    const int goal = by * nx + bx;
    prev[size_t(start)] = -1;
    queue.push_back(start);
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    while (!queue.empty() && prev[size_t(goal)] == -2) {
        const int cur = queue.front();
        queue.pop_front();
        const int cx = cur % nx, cy = cur / nx;
        for (int k = 0; k < 4; ++k) {
            const int tx = cx + dx[k], ty = cy + dy[k];
            if (!f.in_grid(tx, ty) || g.occupied(tx, ty)) continue;
            const int t = ty * nx + tx;
            if (prev[size_t(t)] != -2) continue;
            prev[size_t(t)] = cur;
            queue.push_back(t);
        }
    }
    if (prev[size_t(goal)] == -2)
        throw NoPathError("extract_path: endpoints lie in different complement components");

    std::vector<Point> centers;
    for (int cur = goal; cur != -1; cur = prev[size_t(cur)])
        centers.push_back(f.cell_center(cur % nx, cur / nx));
    std::reverse(centers.begin(), centers.end());

    path.vertices.push_back(a);
    for (const Point& c : centers)
        if (dist(path.vertices.back(), c) > kTol) path.vertices.push_back(c);
    if (dist(path.vertices.back(), b) > kTol) path.vertices.push_back(b);
    return path;
}

} // namespace ptopo
