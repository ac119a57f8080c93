#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsdraw/drawing.hpp"

namespace fsdraw {

enum class AuxTag : std::uint8_t {
  resolution_corner,
  interior_convexity,
  winding_upper,
  winding_lower,
  source,
};

const char* aux_tag_name(AuxTag t);

// Parametric edge of weight b - m*lambda, m in {0,1}.
struct AuxEdge {
  int tail = -1;
  int head = -1;
  double b = 0;
  std::uint8_t m = 0;
  AuxTag tag = AuxTag::source;
};

inline double edge_weight(const AuxEdge& e, double lambda) {
  return e.m ? e.b - lambda : e.b;
}

// Directed multigraph over zone vertices 0..zones-1 plus a source vertex
// with a zero edge to every zone.
struct AuxGraph {
  int zones = 0;
  Mode mode = Mode::safe;
  std::vector<AuxEdge> edges;  // sorted by (tail, head, m)
  double lambda_lo = 0;        // angular resolution of the input drawing
  std::size_t raw_edge_count = 0;

  int source() const { return zones; }
  int vertex_count() const { return zones + 1; }
};

// Translate corners and boundary windings into constraint edges.  With
// dedup, parallel edges with equal (tail, head, m) keep only the minimum
// constant, which never changes cycle signs or shortest distances.
AuxGraph build_aux_graph(const Ingested& ing, Mode mode, bool dedup = true);

// One line per edge: "tail head b m tag", source printed as "s".
std::string dump_aux(const AuxGraph& g);

}  // namespace fsdraw
