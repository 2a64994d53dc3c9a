#include "dirichlet/lloyd.hpp"

#include <algorithm>
#include <cmath>

#include "dirichlet/error.hpp"

namespace dirichlet {

void validate(const DensityGrid& grid) {
    if (grid.width == 0 || grid.height == 0) {
        throw Error("density grid must have positive dimensions");
    }
    if (grid.values.size() != grid.width * grid.height) {
        throw Error("density grid value count does not match dimensions");
    }
    validate(grid.world);
    bool any_positive = false;
    for (const double v : grid.values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw Error("density values must be finite and non-negative");
        }
        any_positive |= v > 0.0;
    }
    if (!any_positive) {
        throw Error("density grid needs at least one positive value");
    }
}

namespace {

struct PixelRange {
    std::size_t row_begin = 0, row_end = 0;
    std::size_t col_begin = 0, col_end = 0;
};

// Rows/cols whose pixel centers can fall inside the polygon's bounds.
PixelRange pixel_range_for(const ConvexPolygon& poly, const DensityGrid& grid) {
    double min_x = poly.vertices[0].x, max_x = min_x;
    double min_y = poly.vertices[0].y, max_y = min_y;
    for (const Point& v : poly.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const double pw = grid.pixel_width();
    const double ph = grid.pixel_height();
    const auto clamp_idx = [](double v, std::size_t n) {
        if (v < 0.0) return std::size_t{0};
        if (v >= static_cast<double>(n)) return n;
        return static_cast<std::size_t>(v);
    };
    PixelRange r;
    r.col_begin = clamp_idx(std::floor((min_x - grid.world.min_x) / pw - 0.5), grid.width);
    r.col_end = clamp_idx(std::ceil((max_x - grid.world.min_x) / pw + 0.5), grid.width);
    // y decreases with the row index
    r.row_begin = clamp_idx(std::floor((grid.world.max_y - max_y) / ph - 0.5), grid.height);
    r.row_end = clamp_idx(std::ceil((grid.world.max_y - min_y) / ph + 0.5), grid.height);
    return r;
}

double pixel_area(const DensityGrid& grid) {
    return grid.pixel_width() * grid.pixel_height();
}

}  // namespace

Point weighted_cell_centroid(const VoronoiCell& cell, const DensityGrid* density, double tol) {
    if (density == nullptr) {
        return polygon_centroid(cell.polygon);
    }
    const PixelRange range = pixel_range_for(cell.polygon, *density);
    double total = 0.0;
    Point acc{0.0, 0.0};
    for (std::size_t row = range.row_begin; row < range.row_end; ++row) {
        for (std::size_t col = range.col_begin; col < range.col_end; ++col) {
            const double w = density->value_at(row, col);
            if (w <= 0.0) continue;
            const Point c = density->pixel_center(row, col);
            if (!contains_point(cell.polygon, c, tol)) continue;
            total += w;
            acc = acc + w * c;
        }
    }
    if (!(total > 0.0)) {
        throw EmptySupportError("cell of site " + std::to_string(cell.site_id) +
                                " contains no positive-density pixel");
    }
    return {acc.x / total, acc.y / total};
}

double tessellation_energy(const VoronoiDiagram& d, const DensityGrid* density) {
    double energy = 0.0;
    if (density == nullptr) {
        for (const VoronoiCell& cell : d.cells) {
            energy += polygon_second_moment(cell.polygon, cell.site);
        }
        return energy;
    }
    const double area = pixel_area(*density);
    for (const VoronoiCell& cell : d.cells) {
        const PixelRange range = pixel_range_for(cell.polygon, *density);
        for (std::size_t row = range.row_begin; row < range.row_end; ++row) {
            for (std::size_t col = range.col_begin; col < range.col_end; ++col) {
                const double w = density->value_at(row, col);
                if (w <= 0.0) continue;
                const Point c = density->pixel_center(row, col);
                if (!contains_point(cell.polygon, c, d.tolerance)) continue;
                const double dist = distance(c, cell.site);
                energy += w * dist * dist * area;
            }
        }
    }
    return energy;
}

std::pair<GeneratingSet, LloydState> lloyd_step(const GeneratingSet& sites,
                                                const BoundingBox& box,
                                                const DensityGrid* density, double tol) {
    if (density != nullptr) validate(*density);
    const VoronoiDiagram d = build_diagram(sites, box, tol);

    LloydState state;
    GeneratingSet moved;
    moved.sites.reserve(sites.size());
    for (const VoronoiCell& cell : d.cells) {
        Point target;
        try {
            target = weighted_cell_centroid(cell, density, tol);
        } catch (const EmptySupportError&) {
            target = cell.site;
            state.pinned_sites.push_back(cell.site_id);
        }
        state.movement = std::max(state.movement, distance(cell.site, target));
        moved.sites.push_back(target);
    }
    state.energy = tessellation_energy(d, density);
    state.sites = moved;
    return {std::move(moved), std::move(state)};
}

LloydResult lloyd_iterate(const GeneratingSet& initial, const BoundingBox& box,
                          const DensityGrid* density, std::size_t max_iters,
                          double movement_tol, double tol) {
    if (max_iters < 1) throw Error("lloyd_iterate needs max_iters >= 1");
    if (!(movement_tol > 0.0)) throw Error("lloyd_iterate needs movement_tol > 0");

    LloydResult result;
    result.sites = initial;
    for (std::size_t k = 1; k <= max_iters; ++k) {
        auto [next, state] = lloyd_step(result.sites, box, density, tol);
        state.iteration = k;
        result.sites = std::move(next);
        result.history.push_back(std::move(state));
        if (result.history.back().movement <= movement_tol) break;
    }
    return result;
}

}  // namespace dirichlet
