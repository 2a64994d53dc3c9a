#pragma once

/// File formats: the JSON sites document, the JSON diagram document, and the
/// binary PGM (P5) density grid. Writing goes through a deterministic
/// in-house emitter (fixed field order, numbers at 17 significant digits) so
/// identical inputs produce byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include "dirichlet/leader_topology.hpp"
#include "dirichlet/lloyd.hpp"
#include "dirichlet/proximity.hpp"
#include "dirichlet/voronoi.hpp"

namespace dirichlet {

/// Parsed "sites" document. tolerance is relative to the bbox diagonal
/// everywhere in the file formats.
struct SiteFileModel {
    std::vector<Point> sites;
    std::optional<BoundingBox> bbox;
    std::optional<double> tolerance;
};

/// Parses {"sites": [[x,y],...], "bbox": [4 numbers]?, "tolerance": t?}.
/// Unknown keys are ignored, so a diagram document is also accepted as a
/// sites document. Throws ParseError (with line/column where available),
/// EmptyGeneratingSetError, DuplicateSiteError, SiteOutsideBoxError,
/// InvalidBoundingBoxError.
[[nodiscard]] SiteFileModel parse_sites(const std::string& text);

[[nodiscard]] std::string serialize_sites(const SiteFileModel& model);

/// Explicit bbox, or the tight site bounds padded on every side by 20% of
/// the tight diagonal (a fixed pad of 1 when the diagonal degenerates to 0,
/// i.e. a single site).
[[nodiscard]] BoundingBox effective_bbox(const SiteFileModel& model);

/// Absolute tolerance: (file tolerance or 1e-9) * diagonal of box.
[[nodiscard]] double effective_tolerance(const SiteFileModel& model, const BoundingBox& box);

/// A diagram plus the analysis layers included in its document.
struct DiagramDocument {
    VoronoiDiagram diagram;
    ProximityGraph proximity;
    std::optional<LeaderTopology> topology;
};

[[nodiscard]] std::string diagram_to_json(const DiagramDocument& doc);

/// Re-reads a diagram document verbatim (cells, edges, vertices, proximity,
/// topology); validates id cross-references and polygon invariants.
[[nodiscard]] DiagramDocument diagram_from_json(const std::string& text);

/// Parses a binary portable grey map (magic "P5", maxval <= 65535); values
/// are normalized to [0, 1]. The pixel rectangle is mapped onto `world`.
[[nodiscard]] DensityGrid parse_pgm(const std::string& bytes, const BoundingBox& world);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// "%.17g" — enough digits to round-trip any double.
[[nodiscard]] std::string format_number(double v);

}  // namespace dirichlet
