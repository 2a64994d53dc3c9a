#pragma once

/// Nearness machinery over a finished diagram: point-to-set distance, Čech
/// distance between cells, the proximity relation ("closures intersect",
/// realized as Čech distance <= tol), classification of the shared region of
/// two closed cells, the proximity graph, and uniform-continuity checking of
/// site mappings.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dirichlet/voronoi.hpp"

namespace dirichlet {

enum class RegionKind { Empty, Vertex, Edge };

[[nodiscard]] const char* to_string(RegionKind kind);

/// The intersection of two distinct closed cells: empty, a single point, or
/// a segment of their bisector. Never two-dimensional for distinct sites.
struct ProximalRegion {
    std::pair<std::size_t, std::size_t> site_pair;  ///< normalized, first < second
    RegionKind kind = RegionKind::Empty;
    std::optional<Point> vertex;  ///< set iff kind == Vertex
    std::optional<Segment> edge;  ///< set iff kind == Edge
};

/// Infimum distance from x to the closed polygon; exactly 0 inside.
[[nodiscard]] double point_set_distance(const Point& x, const ConvexPolygon& poly);
[[nodiscard]] double point_set_distance(const Point& x, const VoronoiCell& cell);

/// Closest approach between two closed convex polygons.
struct ClosestApproach {
    double distance = 0.0;
    Point on_a;
    Point on_b;
};
[[nodiscard]] ClosestApproach closest_approach(const ConvexPolygon& a, const ConvexPolygon& b);

/// inf { |a - b| } over the two closed cells; 0 iff the closures meet.
[[nodiscard]] double cech_distance(const ConvexPolygon& a, const ConvexPolygon& b);
[[nodiscard]] double cech_distance(const VoronoiCell& a, const VoronoiCell& b);

/// The proximity relation: closures intersect up to tol. Reflexive.
[[nodiscard]] bool are_proximal(const VoronoiCell& a, const VoronoiCell& b, double tol);

/// Classifies cl(a) ∩ cl(b) for distinct sites. Kind is Empty exactly when
/// the cells are not proximal at tol.
[[nodiscard]] ProximalRegion proximal_region(const VoronoiCell& a, const VoronoiCell& b,
                                             double tol);

struct ProximityEdge {
    std::size_t site_a = 0;  ///< site_a < site_b
    std::size_t site_b = 0;
    RegionKind kind = RegionKind::Empty;
};

/// Simple undirected graph over site ids; one edge per proximal cell pair.
struct ProximityGraph {
    std::size_t node_count = 0;
    std::vector<ProximityEdge> edges;

    [[nodiscard]] std::size_t degree(std::size_t id) const;
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
};

[[nodiscard]] ProximityGraph build_proximity_graph(const VoronoiDiagram& d, double tol);

/// Instance check of "a point near a site is near that site's region":
/// if |y - p| <= tol then the distance from y to cell p must be <= tol;
/// vacuously true otherwise.
[[nodiscard]] bool site_closeness_implies_region_closeness(const Point& y, std::size_t p_id,
                                                           const VoronoiDiagram& d, double tol);

/// A point of a within tol of b, when the cells are proximal; nullopt
/// otherwise. Witnesses the "close iff some point of one touches the other"
/// characterization.
[[nodiscard]] std::optional<Point> region_closeness_witness(const VoronoiCell& a,
                                                            const VoronoiCell& b, double tol);

/// Total function from source site ids to destination site ids.
struct SiteMapping {
    std::vector<std::size_t> image;  ///< image[src_id] = dst_id
};

struct MappedPairCheck {
    std::pair<std::size_t, std::size_t> source_pair;
    std::pair<std::size_t, std::size_t> image_pair;
    bool preserved = false;
};

struct UniformContinuityReport {
    /// One entry per proximal source pair.
    std::vector<MappedPairCheck> pairs;
    bool uniformly_continuous = false;

    [[nodiscard]] std::vector<MappedPairCheck> violations() const;
};

/// Verifies that the mapping preserves proximity: for every proximal source
/// pair, the image cells must be proximal in dst. Throws InvalidMappingError
/// when the mapping is not total or maps outside dst.
[[nodiscard]] UniformContinuityReport check_uniform_continuity(const SiteMapping& m,
                                                               const VoronoiDiagram& src,
                                                               const VoronoiDiagram& dst,
                                                               double tol);

}  // namespace dirichlet
