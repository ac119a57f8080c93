#pragma once

#include <map>
#include <vector>

#include "fsdraw/drawing.hpp"

namespace fsdraw {

struct LengthPolicy {
  enum class Kind { unit, preserve, file };
  Kind kind = Kind::unit;
  std::map<int, double> per_zone;  // file policy: zone id -> length
};

struct ZoneVectorSet {
  std::vector<double> theta;   // output direction per zone
  std::vector<double> length;  // output length per zone, > 0
};

// Rotate each zone direction by its solved rotation and pick lengths per
// the policy.
ZoneVectorSet apply_rotations(const Zones& z, const std::vector<double>& rotations,
                              const LengthPolicy& policy);

// Rebuild coordinates by depth-first search from the lowest-id vertex,
// stepping by signed zone vectors; the result is translated so the
// bounding-box corner sits at the origin.
Drawing place_vertices(const Drawing& in, const Zones& z, const ZoneVectorSet& zv);

}  // namespace fsdraw
