#pragma once

/// Self-checks for a finished diagram: structural invariants, and the
/// brute-force nearest-site oracle run over a sample grid. The oracle path
/// (distance comparisons) is independent of the construction path (half-plane
/// clipping); agreement between them is the executable content of the
/// region definition.

#include <cstdint>
#include <string>
#include <vector>

#include "dirichlet/voronoi.hpp"

namespace dirichlet {

/// Human-readable list of violated diagram invariants; empty when sound.
[[nodiscard]] std::vector<std::string> diagram_invariant_violations(const VoronoiDiagram& d);

struct OracleCheckOptions {
    std::size_t grid_resolution = 200;
    /// Points whose nearest-site margin is below this are skipped by the
    /// membership check (ambiguous band); < 0 means 10 * diagram tolerance.
    double margin = -1.0;
    /// Extra uniformly random sample points on top of the grid.
    std::size_t random_samples = 0;
    std::uint64_t seed = 0;
};

struct OracleCheckReport {
    std::size_t points_total = 0;
    std::size_t points_with_clear_margin = 0;
    std::size_t membership_disagreements = 0;  ///< nearest cell misses the point,
                                               ///< or a clearly-farther cell holds it
    std::size_t uncovered_points = 0;          ///< point in no closed cell
    std::size_t convexity_failures = 0;
    std::size_t proximity_inconsistencies = 0;  ///< Čech vs region-kind mismatches
    std::vector<std::string> invariant_violations;

    [[nodiscard]] bool passed() const {
        return membership_disagreements == 0 && uncovered_points == 0 &&
               convexity_failures == 0 && proximity_inconsistencies == 0 &&
               invariant_violations.empty();
    }
};

[[nodiscard]] OracleCheckReport run_oracle_checks(const VoronoiDiagram& d,
                                                  const OracleCheckOptions& options = {});

/// One "name: PASS/FAIL (details)" line per check.
[[nodiscard]] std::string format_report(const OracleCheckReport& report);

}  // namespace dirichlet
