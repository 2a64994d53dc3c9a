#include "dirichlet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirichlet/error.hpp"

namespace dirichlet {

namespace {

// Area below which a polygon counts as degenerate, relative to diameter^2.
constexpr double kDegenerateAreaFactor = 1e-14;

}  // namespace

bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double norm(const Point& p) { return std::hypot(p.x, p.y); }

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

int orientation(const Point& p, const Point& q, const Point& r, double tol) {
    const double v = cross(q - p, r - p);
    if (std::abs(v) <= tol) return 0;
    return v > 0.0 ? 1 : -1;
}

HalfPlane make_half_plane(double nx, double ny, double offset) {
    const double len = std::hypot(nx, ny);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw InvalidPolygonError("half-plane normal must be non-zero and finite");
    }
    return HalfPlane{nx / len, ny / len, offset / len};
}

HalfPlane bisector_half_plane(const Point& p, const Point& q, double tol) {
    const Point d = q - p;
    const double len = norm(d);
    if (len <= tol || !(len > 0.0)) {
        throw CoincidentPointsError("bisector requires distinct points");
    }
    const double nx = d.x / len;
    const double ny = d.y / len;
    const Point mid{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
    return HalfPlane{nx, ny, nx * mid.x + ny * mid.y};
}

double length(const Segment& s) { return distance(s.a, s.b); }

Point midpoint(const Segment& s) { return {0.5 * (s.a.x + s.b.x), 0.5 * (s.a.y + s.b.y)}; }

double point_segment_distance(const Point& p, const Segment& s) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 <= 0.0) return distance(p, s.a);
    double t = dot(p - s.a, d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, s.a + t * d);
}

double segment_segment_distance(const Segment& s, const Segment& t) {
    // Proper crossing means distance zero; otherwise the minimum is attained
    // at an endpoint of one segment against the other.
    const int o1 = orientation(s.a, s.b, t.a, 0.0);
    const int o2 = orientation(s.a, s.b, t.b, 0.0);
    const int o3 = orientation(t.a, t.b, s.a, 0.0);
    const int o4 = orientation(t.a, t.b, s.b, 0.0);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        return 0.0;
    }
    double best = point_segment_distance(t.a, s);
    best = std::min(best, point_segment_distance(t.b, s));
    best = std::min(best, point_segment_distance(s.a, t));
    best = std::min(best, point_segment_distance(s.b, t));
    return best;
}

namespace {

// Drops consecutive points (cyclically) closer than tol.
std::vector<Point> dedupe_ring(const std::vector<Point>& ring, double tol) {
    std::vector<Point> out;
    out.reserve(ring.size());
    for (const Point& p : ring) {
        if (out.empty() || distance(out.back(), p) > tol) {
            out.push_back(p);
        }
    }
    while (out.size() > 1 && distance(out.front(), out.back()) <= tol) {
        out.pop_back();
    }
    return out;
}

}  // namespace

ConvexPolygon make_convex_polygon(std::vector<Point> vertices, double tol) {
    for (const Point& v : vertices) {
        if (!is_finite(v)) throw InvalidPolygonError("polygon vertex is not finite");
    }
    ConvexPolygon poly{dedupe_ring(vertices, tol)};
    if (poly.vertices.size() < 3) {
        throw InvalidPolygonError("convex polygon needs at least 3 distinct vertices");
    }
    if (!is_convex_ccw(poly, tol)) {
        throw InvalidPolygonError("vertices are not in convex counter-clockwise order");
    }
    return poly;
}

bool is_convex_ccw(const ConvexPolygon& poly, double tol) {
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = vs[(i + n - 1) % n];
        const Point& cur = vs[i];
        const Point& next = vs[(i + 1) % n];
        // Signed deviation of cur from the chord prev->next; a right turn is
        // tolerated only while the vertex stays within tol of the chord.
        const double area2 = cross(cur - prev, next - prev);
        if (area2 < -tol * distance(prev, next)) return false;
    }
    return true;
}

double polygon_area(const ConvexPolygon& poly) {
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        twice += cross(vs[i], vs[(i + 1) % n]);
    }
    return 0.5 * twice;
}

double polygon_diameter(const ConvexPolygon& poly) {
    const auto& vs = poly.vertices;
    double best = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            best = std::max(best, distance(vs[i], vs[j]));
        }
    }
    return best;
}

Point polygon_centroid(const ConvexPolygon& poly) {
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    const double area = polygon_area(poly);
    const double diam = polygon_diameter(poly);
    if (!(area > kDegenerateAreaFactor * diam * diam)) {
        throw DegenerateAreaError("polygon area is degenerate");
    }
    double cx = 0.0;
    double cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        const double w = cross(a, b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    const double scale = 1.0 / (6.0 * area);
    return {cx * scale, cy * scale};
}

double polygon_second_moment(const ConvexPolygon& poly, const Point& p) {
    // Sum over fan triangles (p, v_i, v_{i+1}) of the |x|^2 integral about p:
    // cross(a,b)/12 * (a.a + a.b + b.b) for a, b relative to p.
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vs[i] - p;
        const Point b = vs[(i + 1) % n] - p;
        total += cross(a, b) / 12.0 * (dot(a, a) + dot(a, b) + dot(b, b));
    }
    return total;
}

bool contains_point(const ConvexPolygon& poly, const Point& p, double tol) {
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        const Point e = b - a;
        const double c = cross(e, p - a);
        // c < -tol * |e|, compared without the sqrt.
        if (c < 0.0 && c * c > tol * tol * dot(e, e)) return false;
    }
    return true;
}

std::optional<ConvexPolygon> clip_polygon(const ConvexPolygon& poly, const HalfPlane& hp,
                                          double tol) {
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    std::vector<double> sd(n);
    for (std::size_t i = 0; i < n; ++i) sd[i] = hp.signed_distance(vs[i]);

    std::vector<Point> out;
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const bool in_i = sd[i] <= tol;
        const bool in_j = sd[j] <= tol;
        if (in_i) out.push_back(vs[i]);
        if (in_i != in_j) {
            const double t = std::clamp(sd[i] / (sd[i] - sd[j]), 0.0, 1.0);
            out.push_back(vs[i] + t * (vs[j] - vs[i]));
        }
    }
    out = dedupe_ring(out, tol);
    if (out.size() < 3) return std::nullopt;
    return ConvexPolygon{std::move(out)};
}

std::vector<Point> convex_intersection_points(const ConvexPolygon& a, const ConvexPolygon& b,
                                              double tol) {
    std::vector<Point> pts = a.vertices;
    const auto& bs = b.vertices;
    const std::size_t nb = bs.size();
    for (std::size_t e = 0; e < nb && !pts.empty(); ++e) {
        const Point& u = bs[e];
        const Point& v = bs[(e + 1) % nb];
        const Point dir = v - u;
        const double len = norm(dir);
        if (len <= 0.0) continue;
        // signed distance to the edge line, positive outside (right of u->v)
        auto sdist = [&](const Point& p) { return cross(dir, p - u) / -len; };

        if (pts.size() == 1) {
            if (sdist(pts[0]) > tol) pts.clear();
            continue;
        }
        std::vector<Point> out;
        out.reserve(pts.size() + 2);
        const std::size_t np = pts.size();
        for (std::size_t i = 0; i < np; ++i) {
            const std::size_t j = (i + 1) % np;
            const double si = sdist(pts[i]);
            const double sj = sdist(pts[j]);
            const bool in_i = si <= tol;
            const bool in_j = sj <= tol;
            if (in_i) out.push_back(pts[i]);
            if (in_i != in_j) {
                const double t = std::clamp(si / (si - sj), 0.0, 1.0);
                out.push_back(pts[i] + t * (pts[j] - pts[i]));
            }
        }
        pts = std::move(out);
    }
    // Global dedupe: classification cares about the point set, not the chain.
    std::vector<Point> unique;
    unique.reserve(pts.size());
    for (const Point& p : pts) {
        bool seen = false;
        for (const Point& q : unique) {
            if (distance(p, q) <= tol) {
                seen = true;
                break;
            }
        }
        if (!seen) unique.push_back(p);
    }
    return unique;
}

std::vector<Point> simplify_ring(std::vector<Point> ring, double tol) {
    ring = dedupe_ring(ring, tol);
    bool changed = true;
    while (changed && ring.size() > 3) {
        changed = false;
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = ring[(i + n - 1) % n];
            const Point& cur = ring[i];
            const Point& next = ring[(i + 1) % n];
            const double chord = distance(prev, next);
            if (chord <= 0.0) continue;
            const double dev = std::abs(cross(cur - prev, next - prev)) / chord;
            if (dev <= tol) {
                ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return ring;
}

}  // namespace dirichlet
