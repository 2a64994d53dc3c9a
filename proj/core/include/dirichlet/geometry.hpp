#pragma once

/// Planar primitives: points, closed half-planes, convex polygons, and the
/// clipping/centroid/orientation operations everything else is built from.
///
/// All coordinates are doubles and all comparisons go through explicit
/// tolerances, interpreted as lengths. The conventional default is
/// kDefaultRelativeTolerance times the bounding-box diagonal of whatever
/// diagram is being worked on.

#include <optional>
#include <vector>

namespace dirichlet {

inline constexpr double kDefaultRelativeTolerance = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    constexpr bool operator==(const Point&) const = default;
};

[[nodiscard]] bool is_finite(const Point& p);

constexpr Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }

constexpr double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the cross product a x b.
constexpr double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

[[nodiscard]] double norm(const Point& p);
[[nodiscard]] double distance(const Point& a, const Point& b);

/// Sign of the turn p -> q -> r: +1 left, -1 right, 0 straight.
/// |cross| <= tol is reported as 0; tol is in squared-length (area) units.
[[nodiscard]] int orientation(const Point& p, const Point& q, const Point& r,
                              double tol = kDefaultRelativeTolerance);

/// Closed half-plane { (x, y) : normal_x*x + normal_y*y <= offset }.
/// The normal is kept at unit length, so signed_distance() is the Euclidean
/// distance to the boundary line (negative strictly inside).
struct HalfPlane {
    double normal_x = 0.0;
    double normal_y = 0.0;
    double offset = 0.0;

    [[nodiscard]] double signed_distance(const Point& p) const {
        return normal_x * p.x + normal_y * p.y - offset;
    }
    [[nodiscard]] bool contains(const Point& p, double tol = 0.0) const {
        return signed_distance(p) <= tol;
    }
};

/// Normalizes (nx, ny); throws InvalidPolygonError if the normal is ~zero.
[[nodiscard]] HalfPlane make_half_plane(double nx, double ny, double offset);

/// Half-plane of points at least as close to p as to q. Its boundary is the
/// perpendicular bisector of pq; p itself satisfies it strictly.
/// Throws CoincidentPointsError when |p - q| <= tol.
[[nodiscard]] HalfPlane bisector_half_plane(const Point& p, const Point& q,
                                            double tol = 0.0);

struct Segment {
    Point a;
    Point b;
};

[[nodiscard]] double length(const Segment& s);
[[nodiscard]] Point midpoint(const Segment& s);
[[nodiscard]] double point_segment_distance(const Point& p, const Segment& s);
[[nodiscard]] double segment_segment_distance(const Segment& s, const Segment& t);

/// Convex polygon with vertices in counter-clockwise order.
/// A valid polygon has >= 3 vertices, no two consecutive vertices within the
/// merge tolerance, and no right turn sharper than the tolerance.
struct ConvexPolygon {
    std::vector<Point> vertices;
};

/// Validates a vertex ring (merging consecutive near-duplicates first).
/// Throws InvalidPolygonError on violation.
[[nodiscard]] ConvexPolygon make_convex_polygon(std::vector<Point> vertices, double tol);

/// True when every consecutive vertex triple turns left or is collinear
/// within tol: the middle vertex may sit at most tol (a length) below the
/// chord through its neighbours.
[[nodiscard]] bool is_convex_ccw(const ConvexPolygon& poly, double tol);

[[nodiscard]] double polygon_area(const ConvexPolygon& poly);

/// Largest vertex-to-vertex distance.
[[nodiscard]] double polygon_diameter(const ConvexPolygon& poly);

/// Shoelace-weighted area centroid. For a convex polygon the centroid lies
/// inside. Throws DegenerateAreaError when the area is (near) zero.
[[nodiscard]] Point polygon_centroid(const ConvexPolygon& poly);

/// Integral of |x - p|^2 over the polygon interior (exact, via the
/// second-moment formula on the fan triangulation about p).
[[nodiscard]] double polygon_second_moment(const ConvexPolygon& poly, const Point& p);

/// Closed-region membership: inside, or within tol of the boundary.
[[nodiscard]] bool contains_point(const ConvexPolygon& poly, const Point& p, double tol);

/// One reentrant clipping pass: poly ∩ hp. Vertices within tol of the
/// boundary are kept; collinear triples produced by the cut are NOT merged
/// here (simplify_ring does that once, after the last cut). Returns nullopt
/// when the intersection is empty or has fewer than 3 distinct vertices.
[[nodiscard]] std::optional<ConvexPolygon> clip_polygon(const ConvexPolygon& poly,
                                                        const HalfPlane& hp, double tol);

/// Vertex chain of a ∩ b, kept even when the intersection is degenerate
/// (a point or a segment). Output points are deduplicated within tol.
[[nodiscard]] std::vector<Point> convex_intersection_points(const ConvexPolygon& a,
                                                            const ConvexPolygon& b,
                                                            double tol);

/// Removes consecutive near-duplicate vertices and vertices collinear with
/// their neighbours (deviation <= tol from the chord).
[[nodiscard]] std::vector<Point> simplify_ring(std::vector<Point> ring, double tol);

}  // namespace dirichlet
