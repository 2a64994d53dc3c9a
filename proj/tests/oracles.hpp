#pragma once

// Test-only oracles, deliberately independent of the library's construction
// paths: the circumcenter comes from a direct linear solve, hulls from a
// monotone chain, set-family closures from bitmask enumeration, and
// integrals from quadrature. Expected values frozen in the tests were
// produced by these routines.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "dirichlet/voronoi.hpp"

namespace oracle {

using dirichlet::BoundingBox;
using dirichlet::ConvexPolygon;
using dirichlet::GeneratingSet;
using dirichlet::Point;

/// Center equidistant from three non-collinear points (2x2 linear solve).
[[nodiscard]] Point circumcenter(const Point& a, const Point& b, const Point& c);

/// Uniform double in [0, 1).
[[nodiscard]] double u01(std::mt19937_64& rng);

/// Random point in the box, margin away from the border.
[[nodiscard]] Point random_point(std::mt19937_64& rng, const BoundingBox& box,
                                 double border = 0.0);

/// n distinct random sites strictly inside the box (min pairwise distance
/// min_sep, re-drawn deterministically).
[[nodiscard]] GeneratingSet random_sites(std::mt19937_64& rng, std::size_t n,
                                         const BoundingBox& box, double min_sep = 1e-4);

/// Convex hull (monotone chain, CCW). Test-side convexity route.
[[nodiscard]] std::vector<Point> convex_hull(std::vector<Point> pts);

/// Random convex polygon with at least 3 vertices: hull of random points.
[[nodiscard]] ConvexPolygon random_convex_polygon(std::mt19937_64& rng, const BoundingBox& box,
                                                  std::size_t draws = 12);

/// Midpoint-rule integral of |x - p|^2 over the polygon (membership-sampled).
[[nodiscard]] double quadrature_second_moment(const ConvexPolygon& poly, const Point& p,
                                              std::size_t resolution);

/// Minimum distance between two polygon boundaries by dense sampling.
[[nodiscard]] double sampled_boundary_distance(const ConvexPolygon& a, const ConvexPolygon& b,
                                               std::size_t samples_per_edge);

/// Closure of the given families (bitmasks over n < 32 elements) plus the
/// full and empty sets under pairwise union/intersection.
[[nodiscard]] std::set<std::uint32_t> bitmask_closure(std::vector<std::uint32_t> base,
                                                      std::size_t n);

/// Minimal XML well-formedness check: balanced tags, quoted attributes.
[[nodiscard]] bool xml_well_formed(const std::string& text);

}  // namespace oracle
