#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fsdraw/drawing.hpp"
#include "fsdraw/io_json.hpp"

namespace fsdraw {

// Resolve ids, reject structural junk (duplicate ids/edges, isolated or
// unknown vertices, self-loops, empty edge lists).
Drawing parse_drawing(const Document& doc);

// First pair of edges whose segments meet outside shared endpoints.
std::optional<std::pair<int, int>> find_crossing(const Drawing& d, double eps);

// Build the rotation system and trace all faces with their region on the
// left; identify the outer face.  With require_planar, crossings are
// rejected up front.
void derive_embedding(Drawing& d, const Config& cfg, bool require_planar = true);

// Transitive closure of "opposite edges of the same interior face".
Zones derive_zones(const Drawing& d, const Config& cfg,
                   const std::optional<std::vector<std::vector<int>>>& declared = std::nullopt);

struct CornersResult {
  std::vector<Corner> corners;
  BoundaryWalk boundary;
  std::optional<double> resolution;
};

CornersResult extract_corners(const Drawing& d, const Zones& z, const Config& cfg);

Ingested ingest(const Document& doc, const Config& cfg = {});

}  // namespace fsdraw
