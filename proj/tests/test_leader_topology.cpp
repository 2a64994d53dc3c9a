#include <doctest.h>

#include <random>

#include "dirichlet/leader_topology.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dirichlet;

namespace {

// Bitmask view of a family set, for comparison with the closure oracle.
std::set<std::uint32_t> as_bitmasks(const LeaderTopology& t) {
    std::set<std::uint32_t> out;
    for (const RegionFamily& fam : t.families) {
        std::uint32_t mask = 0;
        for (const std::size_t id : fam) mask |= 1u << id;
        out.insert(mask);
    }
    return out;
}

}  // namespace

TEST_SUITE("leader_topology") {

TEST_CASE("neighbor families on fixtures") {
    const VoronoiDiagram one =
        build_diagram(GeneratingSet{{{0.0, 0.0}}}, BoundingBox{-1.0, -1.0, 1.0, 1.0});
    CHECK(neighbor_family(one, 0, one.tolerance) == RegionFamily{0});

    const VoronoiDiagram two = build_diagram(GeneratingSet{{{-1.0, 0.0}, {1.0, 0.0}}},
                                             BoundingBox{-2.0, -2.0, 2.0, 2.0});
    CHECK(neighbor_family(two, 0, two.tolerance) == RegionFamily{0, 1});

    const VoronoiDiagram col =
        build_diagram(fixtures::collinear3_sites(), fixtures::collinear3_box());
    CHECK(neighbor_family(col, 0, col.tolerance) == RegionFamily{0, 1});
    CHECK(neighbor_family(col, 1, col.tolerance) == RegionFamily{0, 1, 2});
    CHECK(neighbor_family(col, 2, col.tolerance) == RegionFamily{1, 2});
}

TEST_CASE("one- and two-site topologies are trivial") {
    const VoronoiDiagram one =
        build_diagram(GeneratingSet{{{0.0, 0.0}}}, BoundingBox{-1.0, -1.0, 1.0, 1.0});
    const LeaderTopology t1 = build_leader_topology(one, one.tolerance);
    CHECK(t1.families == std::set<RegionFamily>{{}, {0}});

    const VoronoiDiagram two = build_diagram(GeneratingSet{{{-1.0, 0.0}, {1.0, 0.0}}},
                                             BoundingBox{-2.0, -2.0, 2.0, 2.0});
    const LeaderTopology t2 = build_leader_topology(two, two.tolerance);
    CHECK(t2.families == std::set<RegionFamily>{{}, {0, 1}});
}

TEST_CASE("collinear fixture closes to exactly five families") {
    const VoronoiDiagram col =
        build_diagram(fixtures::collinear3_sites(), fixtures::collinear3_box());
    const LeaderTopology t = build_leader_topology(col, col.tolerance);
    // hand lattice closure: {0,1} ∩ {1,2} = {1}
    const std::set<RegionFamily> expected{{}, {1}, {0, 1}, {1, 2}, {0, 1, 2}};
    CHECK(t.families == expected);
}

TEST_CASE("closure matches the bitmask oracle on random diagrams") {
    std::mt19937_64 rng(1515);
    const BoundingBox box{0.0, 0.0, 1.0, 1.0};
    for (std::size_t n = 2; n <= 8; ++n) {
        const GeneratingSet gs = oracle::random_sites(rng, n, box);
        const VoronoiDiagram d = build_diagram(gs, box);
        const LeaderTopology t = build_leader_topology(d, d.tolerance);

        std::vector<std::uint32_t> base;
        for (std::size_t p = 0; p < n; ++p) {
            std::uint32_t mask = 0;
            for (const std::size_t id : neighbor_family(d, p, d.tolerance)) mask |= 1u << id;
            base.push_back(mask);
        }
        CHECK(as_bitmasks(t) == oracle::bitmask_closure(base, n));
    }
}

TEST_CASE("built topologies satisfy the axioms; one more pass adds nothing") {
    std::mt19937_64 rng(1616);
    const BoundingBox box{0.0, 0.0, 1.0, 1.0};
    for (std::size_t n = 2; n <= 8; n += 2) {
        const GeneratingSet gs = oracle::random_sites(rng, n, box);
        const VoronoiDiagram d = build_diagram(gs, box);
        const LeaderTopology t = build_leader_topology(d, d.tolerance);

        const TopologyAxiomReport report = verify_topology_axioms(t);
        CHECK(report.valid);
        CHECK(report.has_full_family);
        CHECK(report.has_empty_family);
        CHECK(report.violations.empty());
        CHECK(t.families.size() <= (std::size_t{1} << n));

        // base families are members; reflexivity gives them size >= 2
        for (std::size_t p = 0; p < n; ++p) {
            const RegionFamily fam = neighbor_family(d, p, d.tolerance);
            CHECK(t.families.count(fam) == 1);
            CHECK(fam.count(p) == 1);
            CHECK(fam.size() >= 2);
        }
    }
}

TEST_CASE("axiom verification flags missing unions and missing full family") {
    LeaderTopology bad;
    bad.region_count = 2;
    bad.families = {{}, {0}, {1}};
    const TopologyAxiomReport report = verify_topology_axioms(bad);
    CHECK_FALSE(report.valid);
    CHECK_FALSE(report.has_full_family);
    CHECK(report.has_empty_family);
    bool union_missing_reported = false;
    for (const TopologyAxiomViolation& v : report.violations) {
        union_missing_reported |= v.union_missing;
    }
    CHECK(union_missing_reported);
}

TEST_CASE("the discrete collection passes the axioms") {
    LeaderTopology discrete;
    discrete.region_count = 3;
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        RegionFamily fam;
        for (std::size_t i = 0; i < 3; ++i) {
            if (mask & (1u << i)) fam.insert(i);
        }
        discrete.families.insert(fam);
    }
    CHECK(verify_topology_axioms(discrete).valid);
}

}  // TEST_SUITE
