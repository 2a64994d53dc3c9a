#include <doctest.h>

#include <cmath>
#include <random>

#include "dirichlet/diagnostics.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/leader_topology.hpp"
#include "dirichlet/svg.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dirichlet;

TEST_SUITE("io") {

TEST_CASE("parse_sites with defaults expands the tight bounds by 20% of the diagonal") {
    const SiteFileModel model = parse_sites(R"({"sites": [[0, 0], [2, 0]]})");
    REQUIRE(model.sites.size() == 2);
    CHECK_FALSE(model.bbox.has_value());
    CHECK_FALSE(model.tolerance.has_value());

    const BoundingBox box = effective_bbox(model);
    CHECK(box.min_x == doctest::Approx(-0.4));
    CHECK(box.min_y == doctest::Approx(-0.4));
    CHECK(box.max_x == doctest::Approx(2.4));
    CHECK(box.max_y == doctest::Approx(0.4));
    CHECK(effective_tolerance(model, box) == doctest::Approx(1e-9 * box.diagonal()));
}

TEST_CASE("a single site still gets a usable default bbox") {
    const SiteFileModel model = parse_sites(R"({"sites": [[3, 4]]})");
    const BoundingBox box = effective_bbox(model);
    CHECK(box.strictly_contains({3.0, 4.0}));
    CHECK(box.width() > 0.0);
}

TEST_CASE("parse_sites rejects malformed documents") {
    CHECK_THROWS_AS((void)parse_sites("not json"), ParseError);
    CHECK_THROWS_AS((void)parse_sites("[1, 2]"), ParseError);
    CHECK_THROWS_AS((void)parse_sites(R"({"bbox": [0, 0, 1, 1]})"), ParseError);
    CHECK_THROWS_AS((void)parse_sites(R"({"sites": [[0, 0], [1]]})"), ParseError);
    CHECK_THROWS_AS((void)parse_sites(R"({"sites": []})"), EmptyGeneratingSetError);
    CHECK_THROWS_AS((void)parse_sites(R"({"sites": [[0, 0], [0, 0]]})"), DuplicateSiteError);
    CHECK_THROWS_AS((void)parse_sites(R"({"sites": [[0, 0], [2, 0]], "bbox": [0, -1, 1, 1]})"),
                    SiteOutsideBoxError);
    CHECK_THROWS_AS((void)parse_sites(R"({"sites": [[0, 0]], "bbox": [1, 0, 0, 1]})"),
                    InvalidBoundingBoxError);
    CHECK_THROWS_AS((void)parse_sites(R"({"sites": [[0, 0]], "tolerance": -1})"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        (void)parse_sites("{\n  \"sites\": [[0, 0],,]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("serialize/parse round-trips the model field for field") {
    std::mt19937_64 rng(1919);
    SiteFileModel model;
    const BoundingBox box{-3.0, -2.0, 5.0, 7.0};
    model.sites = oracle::random_sites(rng, 17, box).sites;
    model.bbox = box;
    model.tolerance = 2.5e-10;

    const SiteFileModel back = parse_sites(serialize_sites(model));
    REQUIRE(back.sites.size() == model.sites.size());
    for (std::size_t i = 0; i < model.sites.size(); ++i) {
        CHECK(back.sites[i] == model.sites[i]);  // bit-exact via %.17g
    }
    REQUIRE(back.bbox.has_value());
    CHECK(back.bbox->min_x == box.min_x);
    CHECK(back.bbox->max_y == box.max_y);
    REQUIRE(back.tolerance.has_value());
    CHECK(*back.tolerance == *model.tolerance);

    // no optional fields: they stay absent
    SiteFileModel bare;
    bare.sites = {{0.25, 0.75}, {0.5, 0.25}};
    const SiteFileModel bare_back = parse_sites(serialize_sites(bare));
    CHECK_FALSE(bare_back.bbox.has_value());
    CHECK_FALSE(bare_back.tolerance.has_value());
}

TEST_CASE("format_number survives a parse round trip bit-exactly") {
    std::mt19937_64 rng(2020);
    for (int i = 0; i < 1000; ++i) {
        const double v = (oracle::u01(rng) - 0.5) * std::pow(10.0, double(int(rng() % 19)) - 9.0);
        CHECK(std::stod(format_number(v)) == v);
    }
}

TEST_CASE("diagram documents round-trip and re-validate") {
    std::mt19937_64 rng(2121);
    const BoundingBox box{0.0, 0.0, 1.0, 1.0};
    const GeneratingSet gs = oracle::random_sites(rng, 15, box);

    DiagramDocument doc;
    doc.diagram = build_diagram(gs, box);
    doc.proximity = build_proximity_graph(doc.diagram, doc.diagram.tolerance);

    const std::string text = diagram_to_json(doc);
    const DiagramDocument back = diagram_from_json(text);

    CHECK(back.diagram.generating_set.sites == gs.sites);
    CHECK(back.diagram.cells.size() == doc.diagram.cells.size());
    CHECK(back.diagram.edges.size() == doc.diagram.edges.size());
    CHECK(back.diagram.vertices.size() == doc.diagram.vertices.size());
    CHECK(back.proximity.edges.size() == doc.proximity.edges.size());
    CHECK_FALSE(back.topology.has_value());

    // the re-read diagram satisfies every structural invariant
    CHECK(diagram_invariant_violations(back.diagram).empty());

    // with topology included (small fixture keeps the family count readable)
    DiagramDocument small;
    small.diagram = build_diagram(fixtures::collinear3_sites(), fixtures::collinear3_box());
    small.proximity = build_proximity_graph(small.diagram, small.diagram.tolerance);
    small.topology = build_leader_topology(small.diagram, small.diagram.tolerance);
    const DiagramDocument with_topo = diagram_from_json(diagram_to_json(small));
    REQUIRE(with_topo.topology.has_value());
    CHECK(with_topo.topology->families == small.topology->families);
}

TEST_CASE("diagram writing is deterministic") {
    const GeneratingSet gs = fixtures::equilateral_sites();
    DiagramDocument doc;
    doc.diagram = build_diagram(gs, fixtures::equilateral_box());
    doc.proximity = build_proximity_graph(doc.diagram, doc.diagram.tolerance);
    CHECK(diagram_to_json(doc) == diagram_to_json(doc));
}

TEST_CASE("diagram documents reject dangling references") {
    const std::string bad = R"({
      "sites": [[0, 0]], "bbox": [-1, -1, 1, 1], "tolerance": 1e-9,
      "cells": [{"site_id": 5, "touches_boundary": true,
                 "vertices": [[-1, -1], [1, -1], [1, 1], [-1, 1]]}],
      "edges": [], "vertices": [], "proximity": []
    })";
    CHECK_THROWS_AS((void)diagram_from_json(bad), ParseError);
}

TEST_CASE("PGM parsing: 8-bit, 16-bit, comments, and failure modes") {
    const BoundingBox world{0.0, 0.0, 1.0, 1.0};

    std::string p5 = "P5\n# a comment\n2 2\n255\n";
    p5 += '\x00';
    p5 += '\x7f';
    p5 += '\xff';
    p5 += '\x00';
    const DensityGrid grid = parse_pgm(p5, world);
    CHECK(grid.width == 2);
    CHECK(grid.height == 2);
    CHECK(grid.value_at(0, 0) == 0.0);
    CHECK(grid.value_at(0, 1) == doctest::Approx(127.0 / 255.0));
    CHECK(grid.value_at(1, 0) == 1.0);
    // row 0 is the top row
    CHECK(grid.pixel_center(0, 0).y > grid.pixel_center(1, 0).y);

    std::string p5_16 = "P5 2 1 65535\n";
    p5_16 += '\x01';
    p5_16 += '\x00';  // 256
    p5_16 += '\xff';
    p5_16 += '\xff';  // 65535
    const DensityGrid wide = parse_pgm(p5_16, world);
    CHECK(wide.value_at(0, 0) == doctest::Approx(256.0 / 65535.0));
    CHECK(wide.value_at(0, 1) == 1.0);

    CHECK_THROWS_AS((void)parse_pgm("P2 2 2 255 0 0 0 0", world), ParseError);
    CHECK_THROWS_AS((void)parse_pgm("P5 2 2 255\n\0", world), ParseError);
    CHECK_THROWS_AS((void)parse_pgm("P5 0 2 255\n", world), ParseError);
}

TEST_CASE("SVG output is well-formed with the expected element counts") {
    const VoronoiDiagram one =
        build_diagram(GeneratingSet{{{0.0, 0.0}}}, BoundingBox{-1.0, -1.0, 1.0, 1.0});
    const std::string svg1 = render_svg(one);
    CHECK(oracle::xml_well_formed(svg1));

    const auto count = [](const std::string& text, const std::string& needle) {
        std::size_t hits = 0;
        for (std::size_t at = text.find(needle); at != std::string::npos;
             at = text.find(needle, at + 1)) {
            ++hits;
        }
        return hits;
    };
    CHECK(count(svg1, "<polygon") == 1);
    CHECK(count(svg1, "<circle") == 1);

    SvgOptions with_edges;
    with_edges.show_edges = true;
    const VoronoiDiagram eq =
        build_diagram(fixtures::equilateral_sites(), fixtures::equilateral_box());
    const std::string svg3 = render_svg(eq, with_edges);
    CHECK(oracle::xml_well_formed(svg3));
    CHECK(count(svg3, "<polygon") == 3);
    CHECK(count(svg3, "<line") == 3);

    // viewBox equals the bbox
    CHECK(svg3.find("viewBox=\"-1 -1 3 3\"") != std::string::npos);

    const ProximityGraph graph = build_proximity_graph(eq, eq.tolerance);
    SvgOptions with_overlay;
    with_overlay.proximity_overlay = &graph;
    with_overlay.show_vertices = true;
    CHECK(oracle::xml_well_formed(render_svg(eq, with_overlay)));
}

}  // TEST_SUITE
