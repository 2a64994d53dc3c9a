#pragma once

/// The finite topology generated by nearness: one neighbour family per region
/// (every region proximal to it, itself included), closed under pairwise
/// union and intersection, with the full and empty families adjoined.

#include <cstddef>
#include <set>
#include <vector>

#include "dirichlet/proximity.hpp"

namespace dirichlet {

/// A family of Voronoi regions, stored as the set of their site ids.
using RegionFamily = std::set<std::size_t>;

struct LeaderTopology {
    std::size_t region_count = 0;
    std::set<RegionFamily> families;
};

/// { y : cell_y proximal to cell_p }. Always contains p itself.
[[nodiscard]] RegionFamily neighbor_family(const VoronoiDiagram& d, std::size_t p_id,
                                           double tol);

/// Fixed-point closure of the neighbour families plus the full and empty
/// families under pairwise union/intersection. The family count is bounded
/// by 2^n; max_families guards against pathological blow-up on large inputs.
[[nodiscard]] LeaderTopology build_leader_topology(const VoronoiDiagram& d, double tol,
                                                   std::size_t max_families = 1u << 20);

struct TopologyAxiomViolation {
    RegionFamily a;
    RegionFamily b;
    bool union_missing = false;
    bool intersection_missing = false;
};

struct TopologyAxiomReport {
    bool has_full_family = false;
    bool has_empty_family = false;
    std::size_t pairs_checked = 0;
    std::vector<TopologyAxiomViolation> violations;
    bool valid = false;
};

/// Exhaustively checks closure under pairwise union/intersection and the
/// presence of the full and empty families.
[[nodiscard]] TopologyAxiomReport verify_topology_axioms(const LeaderTopology& t);

}  // namespace dirichlet
