#include "cli.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirichlet/diagnostics.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/io.hpp"
#include "dirichlet/leader_topology.hpp"
#include "dirichlet/lloyd.hpp"
#include "dirichlet/proximity.hpp"
#include "dirichlet/svg.hpp"

namespace dirichlet::cli {

namespace {

struct CommonOptions {
    std::string sites_path;
    std::vector<double> bbox;  // empty or 4 values
    double tolerance = 0.0;    // relative; 0 means "not given"
    std::string svg_path;
    std::string json_path;
    std::string out_path;
};

struct LoadedInput {
    SiteFileModel model;
    BoundingBox box;
    double tol = 0.0;  // absolute
};

void add_common_options(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--sites", opts.sites_path, "sites JSON document")->required();
    cmd.add_option("--bbox", opts.bbox, "bounding box override: X0 Y0 X1 Y1")->expected(4);
    cmd.add_option("--tol", opts.tolerance,
                   "relative tolerance override (fraction of the bbox diagonal)");
    cmd.add_option("--svg", opts.svg_path, "write an SVG rendering here");
    cmd.add_option("--json", opts.json_path, "write the diagram document here");
    cmd.add_option("--out", opts.out_path, "write the text report here instead of stdout");
}

LoadedInput load_input(const CommonOptions& opts) {
    LoadedInput in;
    in.model = parse_sites(read_file(opts.sites_path));
    if (opts.bbox.size() == 4) {
        in.model.bbox = BoundingBox{opts.bbox[0], opts.bbox[1], opts.bbox[2], opts.bbox[3]};
        validate(*in.model.bbox);
    }
    if (opts.tolerance > 0.0) in.model.tolerance = opts.tolerance;
    in.box = effective_bbox(in.model);
    in.tol = effective_tolerance(in.model, in.box);
    for (std::size_t i = 0; i < in.model.sites.size(); ++i) {
        if (!in.box.strictly_contains(in.model.sites[i])) {
            throw SiteOutsideBoxError("site " + std::to_string(i) +
                                      " is not strictly inside the bbox");
        }
    }
    return in;
}

void emit_report(const CommonOptions& opts, const std::string& report) {
    if (opts.out_path.empty()) {
        std::cout << report;
    } else {
        write_file(opts.out_path, report);
    }
}

void emit_artifacts(const CommonOptions& opts, const DiagramDocument& doc,
                    const SvgOptions& svg_options) {
    if (!opts.json_path.empty()) write_file(opts.json_path, diagram_to_json(doc));
    if (!opts.svg_path.empty()) write_file(opts.svg_path, render_svg(doc.diagram, svg_options));
}

std::string family_to_string(const RegionFamily& fam) {
    std::string s = "{";
    bool first = true;
    for (const std::size_t id : fam) {
        if (!first) s += " ";
        s += std::to_string(id);
        first = false;
    }
    return s + "}";
}

int cmd_tessellate(const CommonOptions& opts) {
    const LoadedInput in = load_input(opts);
    DiagramDocument doc;
    doc.diagram = build_diagram(GeneratingSet{in.model.sites}, in.box, in.tol);
    doc.proximity = build_proximity_graph(doc.diagram, in.tol);

    SvgOptions svg;
    svg.show_edges = true;
    svg.show_vertices = true;
    emit_artifacts(opts, doc, svg);

    std::string report;
    report += "sites: " + std::to_string(doc.diagram.cells.size()) + "\n";
    report += "edges: " + std::to_string(doc.diagram.edges.size()) + "\n";
    report += "vertices: " + std::to_string(doc.diagram.vertices.size()) + "\n";
    report += "proximal pairs: " + std::to_string(doc.proximity.edges.size()) + "\n";
    emit_report(opts, report);
    return 0;
}

int cmd_proximity(const CommonOptions& opts) {
    const LoadedInput in = load_input(opts);
    DiagramDocument doc;
    doc.diagram = build_diagram(GeneratingSet{in.model.sites}, in.box, in.tol);
    doc.proximity = build_proximity_graph(doc.diagram, in.tol);

    SvgOptions svg;
    svg.proximity_overlay = &doc.proximity;
    emit_artifacts(opts, doc, svg);

    std::string report = "proximal pairs: " + std::to_string(doc.proximity.edges.size()) + "\n";
    for (const ProximityEdge& e : doc.proximity.edges) {
        report += std::to_string(e.site_a) + " " + std::to_string(e.site_b) + " " +
                  to_string(e.kind) + "\n";
    }
    emit_report(opts, report);
    return 0;
}

int cmd_topology(const CommonOptions& opts) {
    const LoadedInput in = load_input(opts);
    DiagramDocument doc;
    doc.diagram = build_diagram(GeneratingSet{in.model.sites}, in.box, in.tol);
    doc.proximity = build_proximity_graph(doc.diagram, in.tol);
    doc.topology = build_leader_topology(doc.diagram, in.tol);

    emit_artifacts(opts, doc, SvgOptions{});

    const TopologyAxiomReport axioms = verify_topology_axioms(*doc.topology);
    std::string report = "families: " + std::to_string(doc.topology->families.size()) + "\n";
    for (const RegionFamily& fam : doc.topology->families) {
        report += family_to_string(fam) + "\n";
    }
    report += std::string("axioms: ") + (axioms.valid ? "ok" : "violated") + "\n";
    emit_report(opts, report);
    return axioms.valid ? 0 : 1;
}

int cmd_lloyd(const CommonOptions& opts, std::size_t iters, double move_tol,
              const std::string& density_path) {
    const LoadedInput in = load_input(opts);
    std::optional<DensityGrid> density;
    if (!density_path.empty()) {
        density = parse_pgm(read_file(density_path), in.box);
    }

    const LloydResult result =
        lloyd_iterate(GeneratingSet{in.model.sites}, in.box, density ? &*density : nullptr,
                      iters, move_tol, in.tol);

    std::string report;
    for (const LloydState& state : result.history) {
        report += "step " + std::to_string(state.iteration) +
                  ": movement=" + format_number(state.movement) +
                  " energy=" + format_number(state.energy);
        if (!state.pinned_sites.empty()) {
            report += " pinned=" + std::to_string(state.pinned_sites.size());
        }
        report += "\n";
    }
    const bool converged =
        !result.history.empty() && result.history.back().movement <= move_tol;
    report += std::string(converged ? "converged" : "stopped") + " after " +
              std::to_string(result.history.size()) + " steps\n";

    DiagramDocument doc;
    doc.diagram = build_diagram(result.sites, in.box, in.tol);
    doc.proximity = build_proximity_graph(doc.diagram, in.tol);
    emit_artifacts(opts, doc, SvgOptions{});
    emit_report(opts, report);
    return 0;
}

int cmd_check(const CommonOptions& opts, std::uint64_t seed) {
    const LoadedInput in = load_input(opts);
    DiagramDocument doc;
    doc.diagram = build_diagram(GeneratingSet{in.model.sites}, in.box, in.tol);
    doc.proximity = build_proximity_graph(doc.diagram, in.tol);
    emit_artifacts(opts, doc, SvgOptions{});

    OracleCheckOptions check;
    check.random_samples = 5000;
    check.seed = seed;
    const OracleCheckReport report = run_oracle_checks(doc.diagram, check);
    emit_report(opts, format_report(report));
    return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Dirichlet tessellations: Voronoi diagrams as half-plane intersections,\n"
                 "proximity analysis, nearness topologies, and centroidal refinement"};
    app.require_subcommand(1);

    CommonOptions tessellate_opts;
    CLI::App* tessellate =
        app.add_subcommand("tessellate", "build the diagram and write JSON/SVG artifacts");
    add_common_options(*tessellate, tessellate_opts);

    CommonOptions proximity_opts;
    CLI::App* proximity =
        app.add_subcommand("proximity", "list proximal cell pairs and their shared regions");
    add_common_options(*proximity, proximity_opts);

    CommonOptions topology_opts;
    CLI::App* topology =
        app.add_subcommand("topology", "build the nearness topology and verify its axioms");
    add_common_options(*topology, topology_opts);

    CommonOptions lloyd_opts;
    std::size_t lloyd_iters = 100;
    double lloyd_move_tol = 1e-6;
    std::string density_path;
    CLI::App* lloyd = app.add_subcommand("lloyd", "centroidal refinement of the sites");
    add_common_options(*lloyd, lloyd_opts);
    lloyd->add_option("--iters", lloyd_iters, "maximum Lloyd steps");
    lloyd->add_option("--move-tol", lloyd_move_tol, "stop when max displacement falls below");
    lloyd->add_option("--density", density_path, "binary PGM density grid mapped onto the bbox");

    CommonOptions check_opts;
    std::uint64_t seed = 0;
    CLI::App* check =
        app.add_subcommand("check", "run the nearest-site oracle suite against the diagram");
    add_common_options(*check, check_opts);
    check->add_option("--seed", seed, "seed for the random sample points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tessellate->parsed()) return cmd_tessellate(tessellate_opts);
        if (proximity->parsed()) return cmd_proximity(proximity_opts);
        if (topology->parsed()) return cmd_topology(topology_opts);
        if (lloyd->parsed()) return cmd_lloyd(lloyd_opts, lloyd_iters, lloyd_move_tol, density_path);
        if (check->parsed()) return cmd_check(check_opts, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dirichlet::cli
