#include "dirichlet/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirichlet/error.hpp"

namespace dirichlet {

double BoundingBox::diagonal() const { return std::hypot(width(), height()); }

void validate(const BoundingBox& box) {
    if (!std::isfinite(box.min_x) || !std::isfinite(box.min_y) || !std::isfinite(box.max_x) ||
        !std::isfinite(box.max_y)) {
        throw InvalidBoundingBoxError("bounding box coordinates must be finite");
    }
    if (!(box.max_x > box.min_x) || !(box.max_y > box.min_y)) {
        throw InvalidBoundingBoxError("bounding box must have positive width and height");
    }
}

ConvexPolygon to_polygon(const BoundingBox& box) {
    return ConvexPolygon{{{box.min_x, box.min_y},
                          {box.max_x, box.min_y},
                          {box.max_x, box.max_y},
                          {box.min_x, box.max_y}}};
}

double default_tolerance(const BoundingBox& box) {
    return kDefaultRelativeTolerance * box.diagonal();
}

void validate(const GeneratingSet& gs, double tol) {
    if (gs.sites.empty()) {
        throw EmptyGeneratingSetError("generating set needs at least one site");
    }
    for (const Point& s : gs.sites) {
        if (!is_finite(s)) throw Error("site coordinates must be finite");
    }
    for (std::size_t i = 0; i < gs.sites.size(); ++i) {
        for (std::size_t j = i + 1; j < gs.sites.size(); ++j) {
            if (distance(gs.sites[i], gs.sites[j]) <= tol) {
                throw DuplicateSiteError("sites " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide within tolerance");
            }
        }
    }
}

namespace {

bool edge_on_box_side(const Point& a, const Point& b, const BoundingBox& box, double tol) {
    return (std::abs(a.x - box.min_x) <= tol && std::abs(b.x - box.min_x) <= tol) ||
           (std::abs(a.x - box.max_x) <= tol && std::abs(b.x - box.max_x) <= tol) ||
           (std::abs(a.y - box.min_y) <= tol && std::abs(b.y - box.min_y) <= tol) ||
           (std::abs(a.y - box.max_y) <= tol && std::abs(b.y - box.max_y) <= tol);
}

}  // namespace

VoronoiCell build_cell(const GeneratingSet& gs, std::size_t site_id, const BoundingBox& box,
                       double tol) {
    if (site_id >= gs.size()) throw Error("site id out of range");
    const Point p = gs.sites[site_id];

    ConvexPolygon poly = to_polygon(box);
    for (std::size_t q = 0; q < gs.size(); ++q) {
        if (q == site_id) continue;
        const HalfPlane hp = bisector_half_plane(p, gs.sites[q], tol);
        auto clipped = clip_polygon(poly, hp, tol);
        if (!clipped) {
            throw Error("cell of site " + std::to_string(site_id) +
                        " clipped to nothing; is the site inside the bounding box?");
        }
        poly = std::move(*clipped);
    }
    poly.vertices = simplify_ring(std::move(poly.vertices), tol);

    bool touches = false;
    const auto& vs = poly.vertices;
    for (std::size_t i = 0; i < vs.size() && !touches; ++i) {
        touches = edge_on_box_side(vs[i], vs[(i + 1) % vs.size()], box, tol);
    }
    return VoronoiCell{site_id, p, std::move(poly), touches};
}

VoronoiDiagram build_diagram(const GeneratingSet& gs, const BoundingBox& box, double tol) {
    validate(box);
    validate(gs, tol);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (!box.strictly_contains(gs.sites[i])) {
            throw SiteOutsideBoxError("site " + std::to_string(i) +
                                      " is not strictly inside the bounding box");
        }
    }

    VoronoiDiagram d;
    d.generating_set = gs;
    d.bbox = box;
    d.tolerance = tol;
    d.cells.reserve(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        d.cells.push_back(build_cell(gs, i, box, tol));
    }
    d.edges = extract_edges(d.cells, gs, tol);
    d.vertices = extract_vertices(d.cells, tol);
    return d;
}

VoronoiDiagram build_diagram(const GeneratingSet& gs, const BoundingBox& box) {
    return build_diagram(gs, box, default_tolerance(box));
}

namespace {

struct LineInterval {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    [[nodiscard]] bool empty() const { return !(hi >= lo); }
};

// Parameter range of the cell-boundary edges lying on the bisector line,
// measured along the line direction.
LineInterval boundary_interval_on_line(const ConvexPolygon& poly, const HalfPlane& hp,
                                       const Point& origin, const Point& dir, double tol) {
    LineInterval iv;
    const auto& vs = poly.vertices;
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % n];
        if (std::abs(hp.signed_distance(a)) <= tol && std::abs(hp.signed_distance(b)) <= tol) {
            for (const Point& e : {a, b}) {
                const double t = dot(e - origin, dir);
                iv.lo = std::min(iv.lo, t);
                iv.hi = std::max(iv.hi, t);
            }
        }
    }
    return iv;
}

}  // namespace

std::vector<VoronoiEdge> extract_edges(const std::vector<VoronoiCell>& cells,
                                       const GeneratingSet& gs, double tol) {
    std::vector<VoronoiEdge> edges;
    const std::size_t n = cells.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const HalfPlane hp = bisector_half_plane(gs.sites[a], gs.sites[b], tol);
            const Point origin{hp.offset * hp.normal_x, hp.offset * hp.normal_y};
            const Point dir{-hp.normal_y, hp.normal_x};

            const LineInterval ia =
                boundary_interval_on_line(cells[a].polygon, hp, origin, dir, tol);
            if (ia.empty()) continue;
            const LineInterval ib =
                boundary_interval_on_line(cells[b].polygon, hp, origin, dir, tol);
            if (ib.empty()) continue;

            const double lo = std::max(ia.lo, ib.lo);
            const double hi = std::min(ia.hi, ib.hi);
            if (hi - lo > tol) {
                edges.push_back(VoronoiEdge{a, b, Segment{origin + lo * dir, origin + hi * dir}});
            }
        }
    }
    return edges;
}

std::vector<VoronoiVertex> extract_vertices(const std::vector<VoronoiCell>& cells, double tol) {
    struct Cluster {
        Point sum;
        std::size_t count = 0;
        std::vector<std::size_t> sites;

        [[nodiscard]] Point mean() const {
            return {sum.x / static_cast<double>(count), sum.y / static_cast<double>(count)};
        }
    };

    // Deterministic clustering: corners sorted lexicographically, then merged
    // greedily into the first cluster whose mean is within tol.
    std::vector<std::pair<Point, std::size_t>> corners;
    for (const VoronoiCell& cell : cells) {
        for (const Point& v : cell.polygon.vertices) {
            corners.emplace_back(v, cell.site_id);
        }
    }
    std::sort(corners.begin(), corners.end(), [](const auto& l, const auto& r) {
        return l.first.x != r.first.x ? l.first.x < r.first.x : l.first.y < r.first.y;
    });

    std::vector<Cluster> clusters;
    for (const auto& [p, site] : corners) {
        Cluster* home = nullptr;
        for (Cluster& c : clusters) {
            if (distance(c.mean(), p) <= tol) {
                home = &c;
                break;
            }
        }
        if (home == nullptr) {
            clusters.push_back(Cluster{p, 1, {site}});
        } else {
            home->sum = home->sum + p;
            home->count += 1;
            home->sites.push_back(site);
        }
    }

    std::vector<VoronoiVertex> out;
    for (Cluster& c : clusters) {
        std::sort(c.sites.begin(), c.sites.end());
        c.sites.erase(std::unique(c.sites.begin(), c.sites.end()), c.sites.end());
        if (c.sites.size() >= 3) {
            out.push_back(VoronoiVertex{c.mean(), std::move(c.sites)});
        }
    }
    std::sort(out.begin(), out.end(), [](const VoronoiVertex& l, const VoronoiVertex& r) {
        return l.point.x != r.point.x ? l.point.x < r.point.x : l.point.y < r.point.y;
    });
    return out;
}

std::size_t nearest_site(const GeneratingSet& gs, const Point& x, double tol) {
    if (gs.sites.empty()) throw EmptyGeneratingSetError("nearest_site on empty set");
    std::size_t best = 0;
    double best_d = distance(x, gs.sites[0]);
    for (std::size_t i = 1; i < gs.size(); ++i) {
        const double d = distance(x, gs.sites[i]);
        if (d < best_d - tol) {
            best = i;
            best_d = d;
        }
    }
    return best;
}

}  // namespace dirichlet
