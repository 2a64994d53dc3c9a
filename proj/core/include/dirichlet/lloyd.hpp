#pragma once

/// Centroidal tessellation: Lloyd iteration moving every site to the
/// (optionally density-weighted) centroid of its own cell until the largest
/// site displacement falls under a threshold.

#include <cstddef>
#include <utility>
#include <vector>

#include "dirichlet/voronoi.hpp"

namespace dirichlet {

/// Non-negative density samples on a pixel grid mapped onto a world
/// rectangle. Row 0 is the top row (greatest world y), matching image
/// raster order.
struct DensityGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> values;  ///< row-major, width*height entries
    BoundingBox world;

    [[nodiscard]] double value_at(std::size_t row, std::size_t col) const {
        return values[row * width + col];
    }
    [[nodiscard]] double pixel_width() const {
        return world.width() / static_cast<double>(width);
    }
    [[nodiscard]] double pixel_height() const {
        return world.height() / static_cast<double>(height);
    }
    [[nodiscard]] Point pixel_center(std::size_t row, std::size_t col) const {
        return {world.min_x + (static_cast<double>(col) + 0.5) * pixel_width(),
                world.max_y - (static_cast<double>(row) + 0.5) * pixel_height()};
    }
};

/// Throws Error unless dimensions match values, all values are finite and
/// >= 0, and at least one is strictly positive.
void validate(const DensityGrid& grid);

/// Snapshot of one Lloyd step.
struct LloydState {
    std::size_t iteration = 0;  ///< 1-based step number
    GeneratingSet sites;        ///< sites after this step
    double movement = 0.0;      ///< max Euclidean site displacement this step
    /// Density-weighted squared-distance energy of the tessellation this step
    /// started from (exact polygon integral when no density is given).
    double energy = 0.0;
    /// Cells with no positive-density pixel; their sites were left in place.
    std::vector<std::size_t> pinned_sites;
};

/// Uniform density: the polygon's area centroid. With a grid: the
/// density-weighted mean of the pixel centers falling inside the cell.
/// Throws EmptySupportError when no positive-density pixel lies in the cell.
[[nodiscard]] Point weighted_cell_centroid(const VoronoiCell& cell, const DensityGrid* density,
                                           double tol);

/// Sum over cells of the density-weighted squared distance to the site.
[[nodiscard]] double tessellation_energy(const VoronoiDiagram& d, const DensityGrid* density);

/// One Lloyd step: build the diagram, move every site to its cell centroid.
/// Cells without density support keep their site and are flagged in the
/// state instead of failing the step.
[[nodiscard]] std::pair<GeneratingSet, LloydState> lloyd_step(const GeneratingSet& sites,
                                                              const BoundingBox& box,
                                                              const DensityGrid* density,
                                                              double tol);

struct LloydResult {
    GeneratingSet sites;
    std::vector<LloydState> history;  ///< one entry per executed step
};

/// Runs lloyd_step until movement <= movement_tol or max_iters steps.
[[nodiscard]] LloydResult lloyd_iterate(const GeneratingSet& initial, const BoundingBox& box,
                                        const DensityGrid* density, std::size_t max_iters,
                                        double movement_tol, double tol);

}  // namespace dirichlet
