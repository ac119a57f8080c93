#include "fsdraw/layout.hpp"

#include <algorithm>
#include <sstream>

namespace fsdraw {

ZoneVectorSet apply_rotations(const Zones& z, const std::vector<double>& rotations,
                              const LengthPolicy& policy) {
  ZoneVectorSet zv;
  zv.theta.resize(z.count());
  zv.length.resize(z.count());
  for (int i = 0; i < z.count(); ++i) {
    zv.theta[i] = z.theta[i] + rotations[i];
    switch (policy.kind) {
      case LengthPolicy::Kind::unit:
        zv.length[i] = 1.0;
        break;
      case LengthPolicy::Kind::preserve:
        zv.length[i] = z.length[i];
        break;
      case LengthPolicy::Kind::file: {
        auto it = policy.per_zone.find(i);
        if (it == policy.per_zone.end()) {
          std::ostringstream os;
          os << "length file is missing zone " << i;
          throw InputError(os.str());
        }
        if (!(it->second > 0)) {
          std::ostringstream os;
          os << "length file has nonpositive length for zone " << i;
          throw InputError(os.str());
        }
        zv.length[i] = it->second;
        break;
      }
    }
  }
  return zv;
}

Drawing place_vertices(const Drawing& in, const Zones& z, const ZoneVectorSet& zv) {
  const int n = in.vertex_count();

  // Orientation of each stored edge relative to its zone's canonical
  // direction, taken from the input geometry.
  std::vector<double> sign(in.edge_count());
  for (int e = 0; e < in.edge_count(); ++e) {
    int zi = z.zone_of_edge[e];
    sign[e] = dot(in.dart_vec(2 * e), unit_vec(z.theta[zi])) >= 0 ? 1.0 : -1.0;
  }

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge, other endpoint)
  for (int e = 0; e < in.edge_count(); ++e) {
    adj[in.edges[e].first].emplace_back(e, in.edges[e].second);
    adj[in.edges[e].second].emplace_back(e, in.edges[e].first);
  }

  int base = 0;
  for (int v = 1; v < n; ++v)
    if (in.ids[v] < in.ids[base]) base = v;

  Drawing out = in;
  out.rot.clear();
  out.faces.clear();
  out.outer_face = -1;

  std::vector<char> placed(n, 0);
  out.pos.assign(n, {});
  placed[base] = 1;
  std::vector<int> stack = {base};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [e, w] : adj[u]) {
      if (placed[w]) continue;
      int zi = z.zone_of_edge[e];
      Vec2 step = unit_vec(zv.theta[zi]) * (zv.length[zi] * sign[e]);
      out.pos[w] = in.edges[e].first == u ? out.pos[u] + step : out.pos[u] - step;
      placed[w] = 1;
      stack.push_back(w);
    }
  }

  Vec2 lo = out.pos[0];
  for (const Vec2& p : out.pos) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
  }
  for (Vec2& p : out.pos) p = p - lo;
  return out;
}

}  // namespace fsdraw
