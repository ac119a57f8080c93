#include "fsdraw/aux_graph.hpp"

#include <algorithm>
#include <sstream>

#include "fsdraw/io_json.hpp"

namespace fsdraw {

const char* aux_tag_name(AuxTag t) {
  switch (t) {
    case AuxTag::resolution_corner: return "resolution-corner";
    case AuxTag::interior_convexity: return "interior-convexity";
    case AuxTag::winding_upper: return "winding-upper";
    case AuxTag::winding_lower: return "winding-lower";
    case AuxTag::source: return "source";
  }
  return "?";
}

AuxGraph build_aux_graph(const Ingested& ing, Mode mode, bool dedup) {
  AuxGraph g;
  g.zones = ing.zones.count();
  g.mode = mode;
  g.lambda_lo = ing.resolution.value_or(0.0);

  const int v_count = g.vertex_count();
  std::vector<int> slot;
  if (dedup) slot.assign(static_cast<std::size_t>(v_count) * v_count * 2, -1);

  auto add = [&](int tail, int head, double b, std::uint8_t m, AuxTag tag) {
    ++g.raw_edge_count;
    if (!dedup) {
      g.edges.push_back({tail, head, b, m, tag});
      return;
    }
    std::size_t key = (static_cast<std::size_t>(tail) * v_count + head) * 2 + m;
    int& s = slot[key];
    if (s < 0) {
      s = static_cast<int>(g.edges.size());
      g.edges.push_back({tail, head, b, m, tag});
    } else if (b < g.edges[s].b) {
      g.edges[s].b = b;
      g.edges[s].tag = tag;
    }
  };

  for (const Corner& c : ing.corners) {
    add(c.zone_in, c.zone_out, c.angle, 1, AuxTag::resolution_corner);
    if (c.side == FaceSide::interior)
      add(c.zone_out, c.zone_in, kPi - c.angle, 0, AuxTag::interior_convexity);
  }

  if (mode == Mode::safe) {
    const BoundaryWalk& b = ing.boundary;
    const int bn = b.size();
    for (int k = 0; k < bn; ++k) {
      for (int l = 0; l < bn; ++l) {
        if (k == l) continue;
        double w = b.winding(k, l);
        add(b.zone[k], b.zone[l], 3 * kPi - w, 0, AuxTag::winding_upper);
        add(b.zone[l], b.zone[k], kPi + w, 0, AuxTag::winding_lower);
      }
    }
  }

  for (int v = 0; v < g.zones; ++v) add(g.source(), v, 0.0, 0, AuxTag::source);

  std::stable_sort(g.edges.begin(), g.edges.end(), [](const AuxEdge& a, const AuxEdge& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    if (a.head != b.head) return a.head < b.head;
    if (a.m != b.m) return a.m < b.m;
    return a.b < b.b;
  });
  return g;
}

std::string dump_aux(const AuxGraph& g) {
  std::ostringstream os;
  auto name = [&](int v) {
    return v == g.source() ? std::string("s") : std::to_string(v);
  };
  for (const AuxEdge& e : g.edges) {
    os << name(e.tail) << " " << name(e.head) << " " << format_g12(e.b) << " "
       << static_cast<int>(e.m) << " " << aux_tag_name(e.tag) << "\n";
  }
  return os.str();
}

}  // namespace fsdraw
