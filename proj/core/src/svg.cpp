#include "dirichlet/svg.hpp"

#include <array>
#include <cstdio>

namespace dirichlet {

namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
    "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string render_svg(const VoronoiDiagram& d, const SvgOptions& options) {
    const BoundingBox& box = d.bbox;
    const double height = options.pixel_width * box.height() / box.width();
    // SVG y grows downward; emit y' = min_y + max_y - y so +y points up.
    const auto fy = [&](double y) { return box.min_y + box.max_y - y; };
    const double diag = box.diagonal();
    const double stroke = 0.002 * diag;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(options.pixel_width) + "\" height=\"" + num(height) + "\" viewBox=\"" +
           num(box.min_x) + " " + num(box.min_y) + " " + num(box.width()) + " " +
           num(box.height()) + "\">\n";

    for (const VoronoiCell& cell : d.cells) {
        svg += "  <polygon points=\"";
        const auto& vs = cell.polygon.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i > 0) svg += " ";
            svg += num(vs[i].x) + "," + num(fy(vs[i].y));
        }
        svg += "\" fill=\"";
        svg += options.fill_cells ? kPalette[cell.site_id % kPalette.size()] : "none";
        svg += "\" stroke=\"#555555\" stroke-width=\"" + num(stroke) + "\"/>\n";
    }

    if (options.show_edges) {
        for (const VoronoiEdge& e : d.edges) {
            svg += "  <line x1=\"" + num(e.segment.a.x) + "\" y1=\"" + num(fy(e.segment.a.y)) +
                   "\" x2=\"" + num(e.segment.b.x) + "\" y2=\"" + num(fy(e.segment.b.y)) +
                   "\" stroke=\"#d62728\" stroke-width=\"" + num(1.5 * stroke) + "\"/>\n";
        }
    }

    if (options.proximity_overlay != nullptr) {
        const auto& sites = d.generating_set.sites;
        for (const ProximityEdge& e : options.proximity_overlay->edges) {
            const Point& a = sites[e.site_a];
            const Point& b = sites[e.site_b];
            svg += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(fy(a.y)) + "\" x2=\"" +
                   num(b.x) + "\" y2=\"" + num(fy(b.y)) +
                   "\" stroke=\"#1f77b4\" stroke-width=\"" + num(stroke) +
                   "\" stroke-dasharray=\"" + num(4.0 * stroke) + " " + num(3.0 * stroke) +
                   "\"/>\n";
        }
    }

    if (options.show_vertices) {
        for (const VoronoiVertex& v : d.vertices) {
            svg += "  <circle cx=\"" + num(v.point.x) + "\" cy=\"" + num(fy(v.point.y)) +
                   "\" r=\"" + num(3.0 * stroke) + "\" fill=\"#d62728\"/>\n";
        }
    }

    if (options.show_sites) {
        for (const Point& s : d.generating_set.sites) {
            svg += "  <circle cx=\"" + num(s.x) + "\" cy=\"" + num(fy(s.y)) + "\" r=\"" +
                   num(2.5 * stroke) + "\" fill=\"#111111\"/>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace dirichlet
