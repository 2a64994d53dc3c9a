#pragma once

// Shared diagram fixtures. Derived expectations (circumcenters, slab
// boundaries, family lattices) were computed with the oracles and are
// asserted against them in the tests.

#include "dirichlet/voronoi.hpp"

namespace fixtures {

using dirichlet::BoundingBox;
using dirichlet::GeneratingSet;
using dirichlet::Point;

// sqrt(3)/2 and the circumcenter height sqrt(3)/6 of the unit equilateral
// triangle, frozen from the circumcenter oracle.
inline constexpr double kSqrt3Over2 = 0.8660254037844386;
inline constexpr double kEquilateralCenterY = 0.28867513459481287;

inline GeneratingSet equilateral_sites() {
    return GeneratingSet{{{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3Over2}}};
}
inline BoundingBox equilateral_box() { return {-1.0, -1.0, 2.0, 2.0}; }

// Four cocircular sites at the unit-square corners; all four cells meet at
// the center (0.5, 0.5).
inline GeneratingSet square4_sites() {
    return GeneratingSet{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
}
inline BoundingBox square4_box() { return {-1.0, -1.0, 2.0, 2.0}; }

// Collinear sites produce vertical slab cells with bisectors x = 0.5, 1.5;
// the outer pair of slabs is separated by the middle one.
inline GeneratingSet collinear3_sites() {
    return GeneratingSet{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}};
}
inline BoundingBox collinear3_box() { return {-1.0, -1.0, 3.0, 1.0}; }

// Slab path 0-1-2-3 (bisectors x = 0.5, 1.5, 2.5).
inline GeneratingSet collinear4_sites() {
    return GeneratingSet{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}}};
}
inline BoundingBox collinear4_box() { return {-1.0, -1.0, 4.0, 1.0}; }

// 3x3 grid with deterministic jitter; the opposite-corner cells (ids 0 and
// 8) stay separated by the center cell.
inline GeneratingSet jittered_grid3_sites() {
    GeneratingSet gs;
    const double jitter[9][2] = {
        {0.13, -0.07}, {-0.11, 0.05}, {0.08, 0.12},  {-0.04, -0.14}, {0.09, 0.03},
        {0.15, -0.02}, {-0.12, 0.1},  {0.02, -0.09}, {-0.06, 0.11},
    };
    int k = 0;
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            gs.sites.push_back(Point{static_cast<double>(i) + jitter[k][0],
                                     static_cast<double>(j) + jitter[k][1]});
            ++k;
        }
    }
    return gs;
}
inline BoundingBox jittered_grid3_box() { return {-1.0, -1.0, 3.0, 3.0}; }

}  // namespace fixtures
