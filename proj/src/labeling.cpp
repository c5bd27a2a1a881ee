#include "ptopo/labeling.hpp"

#include <numeric>
#include <stdexcept>

namespace ptopo {

const char* to_string(Side s) { return s == Side::occupied ? "occupied" : "complement"; }

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a; else parent[a] = b;
    }
};

} // namespace

ComponentLabeling label_components(const RasterGrid& g, Side side) {
    const int nx = g.nx(), ny = g.ny();
    const bool want = (side == Side::occupied);

    ComponentLabeling out;
    out.side = side;
    out.nx = nx;
    out.ny = ny;
    out.labels.assign(size_t(nx) * ny, -1);

    UnionFind uf(size_t(nx) * ny);
    auto at = [&](int ix, int iy) { return g.occupied(ix, iy) == want; };

    // Two sweeps: link each member cell to already-seen neighbours, then
    // compress into dense ids in row-major order of the root cells.
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            if (!at(ix, iy)) continue;
            const int me = iy * nx + ix;
            if (ix > 0 && at(ix - 1, iy)) uf.unite(me, me - 1);
            if (iy > 0 && at(ix, iy - 1)) uf.unite(me, me - nx);
            if (side == Side::occupied) {
                if (ix > 0 && iy > 0 && at(ix - 1, iy - 1)) uf.unite(me, me - nx - 1);
                if (ix < nx - 1 && iy > 0 && at(ix + 1, iy - 1)) uf.unite(me, me - nx + 1);
            }
        }
    }

    std::vector<int> root_to_id(size_t(nx) * ny, -1);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            if (!at(ix, iy)) continue;
            const int me = iy * nx + ix;
            const int root = uf.find(me);
            int id = root_to_id[root];
            if (id < 0) {
                id = int(out.components.size());
                root_to_id[root] = id;
                ComponentInfo info;
                info.id = id;
                info.rep_x = ix;
                info.rep_y = iy;
                out.components.push_back(info);
            }
            out.labels[size_t(me)] = id;
            out.components[size_t(id)].cell_count++;
            if (g.frame().on_border(ix, iy)) out.components[size_t(id)].bounded = false;
        }
    }
    return out;
}

int unbounded_component(const ComponentLabeling& c) {
    if (c.side != Side::complement)
        throw std::logic_error("unbounded_component: labeling must be of the complement side");
    int found = -1;
    for (const auto& comp : c.components) {
        if (!comp.bounded) {
            if (found >= 0)
                throw std::logic_error("unbounded_component: multiple unbounded components");
            found = comp.id;
        }
    }
    if (found < 0) throw std::logic_error("unbounded_component: no unbounded component");
    return found;
}

} // namespace ptopo
