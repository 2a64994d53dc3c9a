#include "dirichlet/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirichlet/error.hpp"

namespace dirichlet {

const char* to_string(RegionKind kind) {
    switch (kind) {
        case RegionKind::Empty: return "empty";
        case RegionKind::Vertex: return "vertex";
        case RegionKind::Edge: return "edge";
    }
    return "empty";
}

double point_set_distance(const Point& x, const ConvexPolygon& poly) {
    if (contains_point(poly, x, 0.0)) return 0.0;
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, point_segment_distance(x, Segment{vs[i], vs[(i + 1) % n]}));
    }
    return best;
}

double point_set_distance(const Point& x, const VoronoiCell& cell) {
    return point_set_distance(x, cell.polygon);
}

namespace {

Point closest_point_on_segment(const Point& p, const Segment& s) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 <= 0.0) return s.a;
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return s.a + t * d;
}

}  // namespace

namespace {

// Proper (strictly transversal) crossing test, matching the one in
// segment_segment_distance.
bool segments_cross(const Segment& s, const Segment& t) {
    const int o1 = orientation(s.a, s.b, t.a, 0.0);
    const int o2 = orientation(s.a, s.b, t.b, 0.0);
    const int o3 = orientation(t.a, t.b, s.a, 0.0);
    const int o4 = orientation(t.a, t.b, s.b, 0.0);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

Point crossing_point(const Segment& s, const Segment& t) {
    const Point r = s.b - s.a;
    const Point q = t.b - t.a;
    const double denom = cross(r, q);
    const double u = cross(t.a - s.a, q) / denom;
    return s.a + u * r;
}

}  // namespace

ClosestApproach closest_approach(const ConvexPolygon& a, const ConvexPolygon& b) {
    ClosestApproach best;
    best.distance = std::numeric_limits<double>::infinity();
    const auto& va = a.vertices;
    const auto& vb = b.vertices;
    const std::size_t na = va.size();
    const std::size_t nb = vb.size();

    // Without a transversal boundary crossing, the boundary-to-boundary
    // minimum is attained at a vertex of one polygon against an edge of the
    // other.
    const auto consider = [&](const Point& on_a, const Point& on_b) {
        const double d = distance(on_a, on_b);
        if (d < best.distance) best = ClosestApproach{d, on_a, on_b};
    };
    for (std::size_t i = 0; i < na; ++i) {
        const Segment ea{va[i], va[(i + 1) % na]};
        for (std::size_t j = 0; j < nb; ++j) {
            const Segment eb{vb[j], vb[(j + 1) % nb]};
            if (segments_cross(ea, eb)) {
                const Point p = crossing_point(ea, eb);
                return ClosestApproach{0.0, p, p};
            }
            consider(ea.a, closest_point_on_segment(ea.a, eb));
            consider(ea.b, closest_point_on_segment(ea.b, eb));
            consider(closest_point_on_segment(eb.a, ea), eb.a);
            consider(closest_point_on_segment(eb.b, ea), eb.b);
        }
    }
    // One polygon nested inside the other leaves no boundary contact.
    if (best.distance > 0.0) {
        if (!va.empty() && contains_point(b, va[0], 0.0)) {
            best = ClosestApproach{0.0, va[0], va[0]};
        } else if (!vb.empty() && contains_point(a, vb[0], 0.0)) {
            best = ClosestApproach{0.0, vb[0], vb[0]};
        }
    }
    return best;
}

double cech_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
    return closest_approach(a, b).distance;
}

double cech_distance(const VoronoiCell& a, const VoronoiCell& b) {
    return cech_distance(a.polygon, b.polygon);
}

bool are_proximal(const VoronoiCell& a, const VoronoiCell& b, double tol) {
    return cech_distance(a, b) <= tol;
}

ProximalRegion proximal_region(const VoronoiCell& a, const VoronoiCell& b, double tol) {
    if (a.site_id == b.site_id) {
        throw Error("proximal_region requires cells of distinct sites");
    }
    ProximalRegion region;
    region.site_pair = {std::min(a.site_id, b.site_id), std::max(a.site_id, b.site_id)};

    const ClosestApproach approach = closest_approach(a.polygon, b.polygon);
    if (approach.distance > tol) {
        region.kind = RegionKind::Empty;
        return region;
    }

    std::vector<Point> pts = convex_intersection_points(a.polygon, b.polygon, tol);
    if (pts.empty()) {
        // Closures meet at tolerance but the clipped chain collapsed; the
        // contact point is the shared region.
        region.kind = RegionKind::Vertex;
        region.vertex = midpoint(Segment{approach.on_a, approach.on_b});
        return region;
    }

    // Farthest pair = extent of the shared region.
    std::size_t ui = 0;
    std::size_t vi = 0;
    double diam = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dij = distance(pts[i], pts[j]);
            if (dij > diam) {
                diam = dij;
                ui = i;
                vi = j;
            }
        }
    }
    if (diam <= tol) {
        Point sum{0.0, 0.0};
        for (const Point& p : pts) sum = sum + p;
        region.kind = RegionKind::Vertex;
        region.vertex = Point{sum.x / static_cast<double>(pts.size()),
                              sum.y / static_cast<double>(pts.size())};
        return region;
    }

    Segment seg{pts[ui], pts[vi]};
    for (const Point& p : pts) {
        if (point_segment_distance(p, seg) > tol) {
            throw Error("two-dimensional intersection of distinct cells; diagram is corrupt");
        }
    }
    if (seg.b.x < seg.a.x || (seg.b.x == seg.a.x && seg.b.y < seg.a.y)) {
        std::swap(seg.a, seg.b);
    }
    region.kind = RegionKind::Edge;
    region.edge = seg;
    return region;
}

std::size_t ProximityGraph::degree(std::size_t id) const {
    std::size_t deg = 0;
    for (const ProximityEdge& e : edges) {
        if (e.site_a == id || e.site_b == id) ++deg;
    }
    return deg;
}

bool ProximityGraph::has_edge(std::size_t a, std::size_t b) const {
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    return std::any_of(edges.begin(), edges.end(), [&](const ProximityEdge& e) {
        return e.site_a == lo && e.site_b == hi;
    });
}

ProximityGraph build_proximity_graph(const VoronoiDiagram& d, double tol) {
    ProximityGraph g;
    g.node_count = d.cells.size();
    for (std::size_t a = 0; a < d.cells.size(); ++a) {
        for (std::size_t b = a + 1; b < d.cells.size(); ++b) {
            const ProximalRegion region = proximal_region(d.cells[a], d.cells[b], tol);
            if (region.kind != RegionKind::Empty) {
                g.edges.push_back(ProximityEdge{a, b, region.kind});
            }
        }
    }
    return g;
}

bool site_closeness_implies_region_closeness(const Point& y, std::size_t p_id,
                                             const VoronoiDiagram& d, double tol) {
    if (p_id >= d.cells.size()) throw Error("site id out of range");
    if (distance(y, d.generating_set.sites[p_id]) > tol) return true;
    return point_set_distance(y, d.cells[p_id]) <= tol;
}

std::optional<Point> region_closeness_witness(const VoronoiCell& a, const VoronoiCell& b,
                                              double tol) {
    const ClosestApproach approach = closest_approach(a.polygon, b.polygon);
    if (approach.distance > tol) return std::nullopt;
    return approach.on_a;
}

std::vector<MappedPairCheck> UniformContinuityReport::violations() const {
    std::vector<MappedPairCheck> out;
    std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
                 [](const MappedPairCheck& c) { return !c.preserved; });
    return out;
}

UniformContinuityReport check_uniform_continuity(const SiteMapping& m, const VoronoiDiagram& src,
                                                 const VoronoiDiagram& dst, double tol) {
    if (m.image.size() != src.cells.size()) {
        throw InvalidMappingError("mapping must cover every source site exactly once");
    }
    for (const std::size_t id : m.image) {
        if (id >= dst.cells.size()) {
            throw InvalidMappingError("mapping image " + std::to_string(id) +
                                      " is not a destination site");
        }
    }

    UniformContinuityReport report;
    report.uniformly_continuous = true;
    for (std::size_t p = 0; p < src.cells.size(); ++p) {
        for (std::size_t q = p + 1; q < src.cells.size(); ++q) {
            if (!are_proximal(src.cells[p], src.cells[q], tol)) continue;
            MappedPairCheck check;
            check.source_pair = {p, q};
            check.image_pair = {m.image[p], m.image[q]};
            check.preserved =
                m.image[p] == m.image[q] ||
                are_proximal(dst.cells[m.image[p]], dst.cells[m.image[q]], tol);
            report.uniformly_continuous &= check.preserved;
            report.pairs.push_back(check);
        }
    }
    return report;
}

}  // namespace dirichlet
