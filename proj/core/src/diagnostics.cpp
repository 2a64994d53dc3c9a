#include "dirichlet/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dirichlet/proximity.hpp"

namespace dirichlet {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::string> diagram_invariant_violations(const VoronoiDiagram& d) {
    std::vector<std::string> out;
    const double tol = d.tolerance;
    const double slack = 10.0 * tol;
    const auto& sites = d.generating_set.sites;

    if (d.cells.size() != sites.size()) {
        out.push_back("cell count does not match site count");
    }
    for (std::size_t i = 0; i < d.cells.size(); ++i) {
        const VoronoiCell& cell = d.cells[i];
        if (cell.site_id != i) {
            out.push_back("cell " + std::to_string(i) + " has mismatched site id");
            continue;
        }
        if (!is_convex_ccw(cell.polygon, tol)) {
            out.push_back("cell " + std::to_string(i) + " is not convex CCW");
        }
        if (!contains_point(cell.polygon, sites[i], slack)) {
            out.push_back("cell " + std::to_string(i) + " does not contain its site");
        }
        for (const Point& v : cell.polygon.vertices) {
            if (!d.bbox.contains(v, slack)) {
                out.push_back("cell " + std::to_string(i) + " leaves the bounding box");
                break;
            }
        }
    }
    for (const VoronoiEdge& e : d.edges) {
        if (e.site_a >= sites.size() || e.site_b >= sites.size() || e.site_a >= e.site_b) {
            out.push_back("edge has invalid site pair");
            continue;
        }
        for (const Point& endpoint : {e.segment.a, e.segment.b}) {
            const double res =
                std::abs(distance(endpoint, sites[e.site_a]) - distance(endpoint, sites[e.site_b]));
            if (res > slack) {
                out.push_back("edge (" + std::to_string(e.site_a) + "," +
                              std::to_string(e.site_b) + ") endpoint off the bisector");
                break;
            }
        }
    }
    for (const VoronoiVertex& v : d.vertices) {
        if (v.incident_sites.size() < 3) {
            out.push_back("vertex with fewer than 3 incident sites");
            continue;
        }
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (const std::size_t id : v.incident_sites) {
            if (id >= sites.size()) {
                out.push_back("vertex references an unknown site");
                lo = hi = 0.0;
                break;
            }
            const double dist = distance(v.point, sites[id]);
            lo = std::min(lo, dist);
            hi = std::max(hi, dist);
        }
        if (hi - lo > slack) {
            out.push_back("vertex not equidistant from its incident sites");
        }
    }
    return out;
}

OracleCheckReport run_oracle_checks(const VoronoiDiagram& d, const OracleCheckOptions& options) {
    OracleCheckReport report;
    report.invariant_violations = diagram_invariant_violations(d);

    const double tol = d.tolerance;
    const double margin = options.margin >= 0.0 ? options.margin : 10.0 * tol;
    const auto& sites = d.generating_set.sites;
    const std::size_t n = sites.size();

    for (const VoronoiCell& cell : d.cells) {
        if (!is_convex_ccw(cell.polygon, tol)) ++report.convexity_failures;
    }

    const auto check_point = [&](const Point& x) {
        ++report.points_total;

        std::size_t best = nearest_site(d.generating_set, x);
        const double best_dist = distance(x, sites[best]);
        double second = std::numeric_limits<double>::infinity();
        for (std::size_t q = 0; q < n; ++q) {
            if (q == best) continue;
            second = std::min(second, distance(x, sites[q]));
        }

        bool covered = false;
        for (const VoronoiCell& cell : d.cells) {
            if (contains_point(cell.polygon, x, tol)) {
                covered = true;
                break;
            }
        }
        if (!covered) ++report.uncovered_points;

        if (n >= 2 && second - best_dist > margin) {
            ++report.points_with_clear_margin;
            bool ok = contains_point(d.cells[best].polygon, x, tol);
            if (ok) {
                for (std::size_t q = 0; q < n && ok; ++q) {
                    if (q != best && contains_point(d.cells[q].polygon, x, tol)) ok = false;
                }
            }
            if (!ok) ++report.membership_disagreements;
        }
    };

    const std::size_t res = std::max<std::size_t>(options.grid_resolution, 2);
    for (std::size_t i = 0; i < res; ++i) {
        for (std::size_t j = 0; j < res; ++j) {
            const double fx = static_cast<double>(i) / static_cast<double>(res - 1);
            const double fy = static_cast<double>(j) / static_cast<double>(res - 1);
            check_point({d.bbox.min_x + fx * d.bbox.width(), d.bbox.min_y + fy * d.bbox.height()});
        }
    }
    std::mt19937_64 rng(options.seed);
    for (std::size_t k = 0; k < options.random_samples; ++k) {
        check_point({d.bbox.min_x + uniform01(rng) * d.bbox.width(),
                     d.bbox.min_y + uniform01(rng) * d.bbox.height()});
    }

    // Čech distance, the proximity predicate, and the region classification
    // must tell one consistent story for every cell pair.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const bool near = are_proximal(d.cells[a], d.cells[b], tol);
            const bool by_distance = cech_distance(d.cells[a], d.cells[b]) <= tol;
            const bool by_region =
                proximal_region(d.cells[a], d.cells[b], tol).kind != RegionKind::Empty;
            if (near != by_distance || near != by_region) {
                ++report.proximity_inconsistencies;
            }
        }
    }
    return report;
}

std::string format_report(const OracleCheckReport& report) {
    const auto line = [](const std::string& name, bool ok, const std::string& detail) {
        return name + ": " + (ok ? "PASS" : "FAIL") + " (" + detail + ")\n";
    };
    std::string out;
    out += line("oracle-equivalence", report.membership_disagreements == 0,
                std::to_string(report.points_with_clear_margin) + " clear-margin points, " +
                    std::to_string(report.membership_disagreements) + " disagreements");
    out += line("covering", report.uncovered_points == 0,
                std::to_string(report.points_total) + " points, " +
                    std::to_string(report.uncovered_points) + " uncovered");
    out += line("convexity", report.convexity_failures == 0,
                std::to_string(report.convexity_failures) + " non-convex cells");
    out += line("proximity-consistency", report.proximity_inconsistencies == 0,
                std::to_string(report.proximity_inconsistencies) + " inconsistent pairs");
    out += line("invariants", report.invariant_violations.empty(),
                report.invariant_violations.empty() ? "all hold"
                                                    : report.invariant_violations.front());
    return out;
}

}  // namespace dirichlet
