#pragma once

/// Voronoi diagram construction by iterated half-plane clipping: each cell is
/// the bounding box cut by the bisector half-plane against every other site,
/// which keeps the code an audit-friendly transcription of the definition at
/// the cost of O(n) cuts per cell.

#include <cstddef>
#include <vector>

#include "dirichlet/geometry.hpp"

namespace dirichlet {

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    [[nodiscard]] double width() const { return max_x - min_x; }
    [[nodiscard]] double height() const { return max_y - min_y; }
    [[nodiscard]] double diagonal() const;
    [[nodiscard]] bool strictly_contains(const Point& p) const {
        return p.x > min_x && p.x < max_x && p.y > min_y && p.y < max_y;
    }
    [[nodiscard]] bool contains(const Point& p, double tol = 0.0) const {
        return p.x >= min_x - tol && p.x <= max_x + tol && p.y >= min_y - tol &&
               p.y <= max_y + tol;
    }
};

/// Throws InvalidBoundingBoxError unless max > min on both axes (and finite).
void validate(const BoundingBox& box);

/// CCW rectangle spanning the box.
[[nodiscard]] ConvexPolygon to_polygon(const BoundingBox& box);

/// Absolute length tolerance for a diagram over this box.
[[nodiscard]] double default_tolerance(const BoundingBox& box);

/// The sites; the index in the list is the site id.
struct GeneratingSet {
    std::vector<Point> sites;

    [[nodiscard]] std::size_t size() const { return sites.size(); }
};

/// Throws EmptyGeneratingSetError / DuplicateSiteError (pairwise distance
/// <= tol) / Error for non-finite coordinates.
void validate(const GeneratingSet& gs, double tol);

struct VoronoiCell {
    std::size_t site_id = 0;
    Point site;
    ConvexPolygon polygon;
    /// True when some bounding-box edge contributes an edge of the polygon,
    /// i.e. the cell was unbounded before clipping.
    bool touches_boundary = false;
};

struct VoronoiEdge {
    std::size_t site_a = 0;  ///< site_a < site_b
    std::size_t site_b = 0;
    Segment segment;         ///< lies on the bisector of the two sites
};

struct VoronoiVertex {
    Point point;
    std::vector<std::size_t> incident_sites;  ///< sorted, size >= 3
};

struct VoronoiDiagram {
    GeneratingSet generating_set;
    BoundingBox bbox;
    double tolerance = 0.0;  ///< absolute length tolerance used to build
    std::vector<VoronoiCell> cells;
    std::vector<VoronoiEdge> edges;
    std::vector<VoronoiVertex> vertices;
};

/// bbox ∩ (∩ over q != p of the bisector half-plane towards q).
[[nodiscard]] VoronoiCell build_cell(const GeneratingSet& gs, std::size_t site_id,
                                     const BoundingBox& box, double tol);

/// Builds all cells, then extracts shared edges and vertices.
/// Throws DuplicateSiteError / SiteOutsideBoxError / InvalidBoundingBoxError.
[[nodiscard]] VoronoiDiagram build_diagram(const GeneratingSet& gs, const BoundingBox& box,
                                           double tol);

/// Convenience overload using default_tolerance(box).
[[nodiscard]] VoronoiDiagram build_diagram(const GeneratingSet& gs, const BoundingBox& box);

/// One entry per unordered site pair whose closed cells share a boundary
/// interval longer than tol; the segment is the interval on their bisector.
[[nodiscard]] std::vector<VoronoiEdge> extract_edges(const std::vector<VoronoiCell>& cells,
                                                     const GeneratingSet& gs, double tol);

/// Polygon corners shared by >= 3 cells, coalesced within tol.
[[nodiscard]] std::vector<VoronoiVertex> extract_vertices(
    const std::vector<VoronoiCell>& cells, double tol);

/// Brute-force nearest site; ties within tol go to the lowest index.
[[nodiscard]] std::size_t nearest_site(const GeneratingSet& gs, const Point& x,
                                       double tol = 0.0);

}  // namespace dirichlet
