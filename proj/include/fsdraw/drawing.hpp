#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsdraw/geometry.hpp"

namespace fsdraw {

struct Config {
  // Tolerance for parallelism, equal-length and angle-sum validation,
  // in radians / length units.
  double eps_geom = 1e-7;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { safe, unsafe };

inline const char* mode_name(Mode m) { return m == Mode::safe ? "safe" : "unsafe"; }

// A dart is a directed occurrence of an edge: dart 2e runs first->second
// of edge e, dart 2e+1 runs second->first.
inline int dart_edge(int d) { return d >> 1; }
inline int dart_reverse(int d) { return d ^ 1; }

struct Drawing {
  std::vector<long long> ids;                // original vertex ids
  std::vector<Vec2> pos;                     // index-aligned with ids
  std::vector<std::pair<int, int>> edges;    // vertex indices

  // Derived by derive_embedding.
  std::vector<std::vector<int>> rot;    // outgoing darts per vertex, ccw order
  std::vector<std::vector<int>> faces;  // closed dart walks, region on the left
  int outer_face = -1;

  int vertex_count() const { return static_cast<int>(ids.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int dart_tail(int d) const {
    const auto& e = edges[dart_edge(d)];
    return (d & 1) ? e.second : e.first;
  }
  int dart_head(int d) const {
    const auto& e = edges[dart_edge(d)];
    return (d & 1) ? e.first : e.second;
  }
  Vec2 dart_vec(int d) const { return pos[dart_head(d)] - pos[dart_tail(d)]; }
  double dart_dir(int d) const {
    Vec2 v = dart_vec(d);
    return std::atan2(v.y, v.x);
  }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
};

// Equivalence classes of edges that share one vector.
struct Zones {
  std::vector<int> zone_of_edge;           // edge index -> zone id
  std::vector<std::vector<int>> members;   // zone id -> sorted edge indices
  std::vector<double> theta;               // canonical direction in [0, pi)
  std::vector<double> length;              // shared edge length
  int count() const { return static_cast<int>(members.size()); }
};

enum class FaceSide { interior, outer };

// Ordered pair of consecutive darts of one face walk at a vertex.
struct Corner {
  int face = -1;
  int vertex = -1;
  int zone_in = -1;
  int zone_out = -1;
  double dir_in = 0;   // direction of the incoming dart
  double dir_out = 0;  // direction of the outgoing dart
  double angle = 0;    // in (0, 2pi], measured inside the face
  FaceSide side = FaceSide::interior;
};

// Outer boundary traversed with the drawing interior on the left.
struct BoundaryWalk {
  std::vector<int> darts;
  std::vector<int> zone;     // zone per dart
  std::vector<double> turn;  // turn[j] between darts j and j+1 (cyclic)
  std::vector<double> lift;  // direction change from dart 0 to dart j
  double total_turn = 0;     // ~= 2pi

  int size() const { return static_cast<int>(darts.size()); }

  // Turning accumulated walking ccw from occurrence `from` to `to`.
  double winding(int from, int to) const {
    if (from == to) return 0.0;
    double w = lift[to] - lift[from];
    if (to < from) w += total_turn;
    return w;
  }
};

struct Ingested {
  Drawing drawing;
  Zones zones;
  std::vector<Corner> corners;
  BoundaryWalk boundary;
  std::optional<double> resolution;  // min corner angle at vertices of degree >= 2
};

}  // namespace fsdraw
