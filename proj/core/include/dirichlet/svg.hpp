#pragma once

#include <string>

#include "dirichlet/proximity.hpp"
#include "dirichlet/voronoi.hpp"

namespace dirichlet {

struct SvgOptions {
    double pixel_width = 800.0;  ///< rendered width; height follows the bbox aspect
    bool fill_cells = true;
    bool show_sites = true;
    bool show_edges = false;
    bool show_vertices = false;
    /// When set, draws a site-to-site line per proximity edge.
    const ProximityGraph* proximity_overlay = nullptr;
};

/// SVG 1.1 document: the viewBox equals the bbox and +y points up (one
/// polygon per cell, one marker per site, optional overlays).
[[nodiscard]] std::string render_svg(const VoronoiDiagram& d, const SvgOptions& options = {});

}  // namespace dirichlet
