#include <doctest.h>

#include "ptopo/certificate.hpp"
#include "ptopo/harness.hpp"
#include "ptopo/rng.hpp"
#include "test_support.hpp"

using namespace ptopo;

namespace {

// Conjunction over per-component verdicts: any disconnected decides "no";
// all connected decides "yes"; otherwise undecided.
Verdict component_conjunction(const RasterGrid& g) {
    const ComponentLabeling occ = label_components(g, Side::occupied);
    bool all_connected = true;
    for (const auto& comp : occ.components) {
        const Certificate c = component_simply_connected(g, occ, comp.id);
        if (c.verdict == Verdict::disconnected) return Verdict::disconnected;
        if (c.verdict != Verdict::connected) all_connected = false;
    }
    return all_connected ? Verdict::connected : Verdict::undecided;
}

} // namespace

TEST_CASE("single disk: complement connected from the outer raster") {
    const Scene s = testing::disk_scene(0, 0, 1);
    const Certificate c =
        sphere_connected_complement(grid_for_scene(s, testing::make_frame(4, 0.125), 0.125, RasterMode::outer));
    CHECK(c.verdict == Verdict::connected);
    CHECK(c.complement_components == 1);
    CHECK(c.witness_point() == nullptr);
}

TEST_CASE("annulus: inner raster certifies disconnection with an outside witness") {
    const Scene ring = testing::ring_of_disks({0, 0}, 1.5, 0.5);
    const Frame f = testing::make_frame(4, 0.05);
    const Certificate c = sphere_connected_complement(grid_for_scene(ring, f, 0.05, RasterMode::inner));
    REQUIRE(c.verdict == Verdict::disconnected);
    REQUIRE(c.witness_point() != nullptr);
    const Point z = *c.witness_point();
    CHECK(norm(z) < 1.1); // inside the hole (it bulges to ~1.066 between disks)
    CHECK(point_clearly_outside(z, ring));
}

TEST_CASE("annulus: outer raster with a visible hole stays undecided") {
    const Scene ring = testing::ring_of_disks({0, 0}, 1.5, 0.5);
    const Frame f = testing::make_frame(4, 0.125);
    const Certificate c = sphere_connected_complement(grid_for_scene(ring, f, 0.125, RasterMode::outer));
    CHECK(c.verdict == Verdict::undecided);
    CHECK(c.complement_components == 2);
}

TEST_CASE("decision-rule audit: verdicts never cross modes") {
    SplitMix64 rng(31);
    for (int t = 0; t < 25; ++t) {
        Scene s;
        const int n = 1 + int(rng.next() % 3);
        for (int i = 0; i < n; ++i)
            s.primitives.push_back(Disk{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.2, 0.9)});
        for (double h : {0.25, 0.125}) {
            const Frame f = testing::make_frame(6, h);
            const Certificate outer = sphere_connected_complement(grid_for_scene(s, f, h, RasterMode::outer));
            const Certificate inner = sphere_connected_complement(grid_for_scene(s, f, h, RasterMode::inner));
            CHECK(outer.verdict != Verdict::disconnected);
            CHECK(inner.verdict != Verdict::connected);
        }
    }
}

TEST_CASE("plane and sphere component counts agree for bounded scenes") {
    SplitMix64 rng(77);
    for (int t = 0; t < 20; ++t) {
        Scene s;
        s.primitives.push_back(Disk{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.3, 1.2)});
        if (t % 2) s.primitives.push_back(Rect{-2.5, -2.5, -1.2, -1.2});
        const Frame f = testing::make_frame(5, 0.125);
        for (RasterMode m : {RasterMode::outer, RasterMode::inner}) {
            const auto [plane, sphere] = complement_component_counts(rasterize(s, f, m));
            CHECK(plane == sphere);
        }
    }
}

TEST_CASE("per-component certificates: disk, annulus, horseshoe") {
    // disk component is simply connected
    {
        const Scene s = testing::disk_scene(0, 0, 1);
        const RasterGrid g = grid_for_scene(s, testing::make_frame(4, 0.125), 0.125, RasterMode::outer);
        const ComponentLabeling occ = label_components(g, Side::occupied);
        REQUIRE(occ.count() == 1);
        CHECK(component_simply_connected(g, occ, 0).verdict == Verdict::connected);
        CHECK_THROWS_AS(component_simply_connected(g, occ, 5), DomainError);
    }
    // annulus component is not (decided on the inner raster)
    {
        const Scene ring = testing::ring_of_disks({0, 0}, 1.5, 0.5);
        const RasterGrid g = grid_for_scene(ring, testing::make_frame(4, 0.05), 0.05, RasterMode::inner);
        const ComponentLabeling occ = label_components(g, Side::occupied);
        REQUIRE(occ.count() == 1);
        CHECK(component_simply_connected(g, occ, 0).verdict == Verdict::disconnected);
    }
    // flask (horseshoe-like) component: connected complement at fine enough h
    {
        const Scene flask = testing::flask_scene();
        const RasterGrid g = grid_for_scene(flask, testing::make_frame(4, 0.05), 0.05, RasterMode::outer);
        const ComponentLabeling occ = label_components(g, Side::occupied);
        REQUIRE(occ.count() == 1);
        CHECK(component_simply_connected(g, occ, 0).verdict == Verdict::connected);
    }
}

TEST_CASE("whole-set certificates and the component conjunction agree") {
    // two disjoint disks: all simply connected
    {
        Scene s = testing::disk_scene(-1.5, 0, 0.7);
        s.primitives.push_back(Disk{{1.5, 0}, 0.7});
        const RasterGrid g = grid_for_scene(s, testing::make_frame(4, 0.1), 0.1, RasterMode::outer);
        const Certificate whole = all_simply_connected(g);
        CHECK(whole.verdict == Verdict::connected);
        CHECK(component_conjunction(g) == Verdict::connected);
    }
    // disk next to an annulus: not all simply connected
    {
        Scene s = testing::ring_of_disks({-2.5, 0}, 1.2, 0.45);
        s.primitives.push_back(Disk{{2.8, 0}, 0.8});
        const RasterGrid g = grid_for_scene(s, testing::make_frame(6, 0.04), 0.04, RasterMode::inner);
        const Certificate whole = all_simply_connected(g);
        REQUIRE(whole.verdict == Verdict::disconnected);
        CHECK(component_conjunction(g) == Verdict::disconnected);
    }
    // empty grid: vacuously all simply connected
    {
        const Frame f = testing::make_frame(4, 0.25);
        RasterGrid g(f, RasterMode::outer);
        CHECK(all_simply_connected(g).verdict == Verdict::connected);
    }
}

TEST_CASE("refinement driver decides both directions") {
    const Frame f = testing::make_frame(4, 0.5);
    const Certificate disk =
        decide_sphere_connected(testing::disk_scene(0, 0, 1), f, 0.5, 0.05);
    CHECK(disk.verdict == Verdict::connected);

    const Certificate ring =
        decide_sphere_connected(testing::ring_of_disks({0, 0}, 1.5, 0.5), f, 0.5, 0.05);
    CHECK(ring.verdict == Verdict::disconnected);
    CHECK(ring.mode == RasterMode::inner);
}

TEST_CASE("verdicts decided at one resolution persist under refinement") {
    const Scene disk = testing::disk_scene(0, 0, 1);
    const Scene ring = testing::square_ring({0, 0}, 2, 0.6);
    const Frame f = testing::make_frame(5, 0.4);
    for (const Scene* s : {&disk, &ring}) {
        Verdict first = Verdict::undecided;
        for (double h : {0.4, 0.2, 0.1, 0.05}) {
            const Certificate outer = sphere_connected_complement(grid_for_scene(*s, f, h, RasterMode::outer));
            const Certificate inner = sphere_connected_complement(grid_for_scene(*s, f, h, RasterMode::inner));
            for (const Certificate* c : {&outer, &inner}) {
                if (!c->decided()) continue;
                if (first == Verdict::undecided) first = c->verdict;
                CHECK(c->verdict == first);
            }
        }
        CHECK(first != Verdict::undecided);
    }
}
