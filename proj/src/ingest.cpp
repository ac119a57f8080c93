#include "fsdraw/ingest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fsdraw {

namespace {

std::string fmt(const char* what, long long a) {
  std::ostringstream os;
  os << what << " " << a;
  return os.str();
}

}  // namespace

Drawing parse_drawing(const Document& doc) {
  Drawing d;
  std::map<long long, int> index_of;
  for (const auto& v : doc.vertices) {
    if (index_of.count(v.id)) throw InputError(fmt("duplicate vertex id", v.id));
    index_of[v.id] = static_cast<int>(d.ids.size());
    d.ids.push_back(v.id);
    d.pos.push_back({v.x, v.y});
  }
  if (doc.edges.empty()) throw InputError("document has no edges");

  std::set<std::pair<int, int>> seen;
  for (const auto& e : doc.edges) {
    auto iu = index_of.find(e.first);
    auto iv = index_of.find(e.second);
    if (iu == index_of.end()) throw InputError(fmt("edge references unknown vertex", e.first));
    if (iv == index_of.end()) throw InputError(fmt("edge references unknown vertex", e.second));
    int u = iu->second, v = iv->second;
    if (u == v) throw InputError(fmt("self-loop edge at vertex", e.first));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw InputError(fmt("duplicate edge at vertex", e.first));
    d.edges.emplace_back(u, v);
  }

  std::vector<char> used(d.ids.size(), 0);
  for (const auto& e : d.edges) used[e.first] = used[e.second] = 1;
  for (size_t v = 0; v < used.size(); ++v)
    if (!used[v]) throw InputError(fmt("isolated vertex", d.ids[v]));

  if (doc.zones) {
    const int ec = d.edge_count();
    for (const auto& z : *doc.zones)
      for (int idx : z)
        if (idx < 0 || idx >= ec) throw InputError(fmt("zones field references bad edge index", idx));
  }
  return d;
}

std::optional<std::pair<int, int>> find_crossing(const Drawing& d, double eps) {
  const int ec = d.edge_count();
  for (int i = 0; i < ec; ++i) {
    auto [a, b] = d.edges[i];
    for (int j = i + 1; j < ec; ++j) {
      auto [c, e] = d.edges[j];
      int shared = -1, p1 = -1, p2 = -1;
      if (a == c) shared = a, p1 = b, p2 = e;
      else if (a == e) shared = a, p1 = b, p2 = c;
      else if (b == c) shared = b, p1 = a, p2 = e;
      else if (b == e) shared = b, p1 = a, p2 = c;
      if (shared >= 0) {
        if (collinear_overlap_at(d.pos[shared], d.pos[p1], d.pos[p2], eps)) return {{i, j}};
      } else if (segments_intersect(d.pos[a], d.pos[b], d.pos[c], d.pos[e], eps)) {
        return {{i, j}};
      }
    }
  }
  return std::nullopt;
}

namespace {

void check_connected(const Drawing& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : d.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (reached != n) throw InputError("disconnected drawing");
}

// Face angle at the corner between consecutive darts, cusps detected
// structurally so a U-turn reads as a full 2pi.
double face_corner_angle(const Drawing& d, int dart_in, int dart_out) {
  if (dart_out == dart_reverse(dart_in)) return kTwoPi;
  return corner_angle(d.dart_dir(dart_in), d.dart_dir(dart_out));
}

double face_turning_sum(const Drawing& d, const std::vector<int>& walk) {
  double sum = 0;
  const int n = static_cast<int>(walk.size());
  for (int i = 0; i < n; ++i) sum += kPi - face_corner_angle(d, walk[i], walk[(i + 1) % n]);
  return sum;
}

}  // namespace

void derive_embedding(Drawing& d, const Config& cfg, bool require_planar) {
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.dart_vec(2 * e).norm() <= cfg.eps_geom)
      throw InputError(fmt("zero-length edge", e));
  }
  if (require_planar) {
    if (auto hit = find_crossing(d, cfg.eps_geom)) {
      std::ostringstream os;
      os << "edges " << hit->first << " and " << hit->second << " cross";
      throw InputError(os.str());
    }
  }
  check_connected(d);

  const int n = d.vertex_count();
  d.rot.assign(n, {});
  for (int e = 0; e < d.edge_count(); ++e) {
    d.rot[d.edges[e].first].push_back(2 * e);
    d.rot[d.edges[e].second].push_back(2 * e + 1);
  }
  std::vector<int> pos_in_rot(2 * d.edge_count(), -1);
  for (int v = 0; v < n; ++v) {
    auto& ring = d.rot[v];
    std::sort(ring.begin(), ring.end(), [&](int a, int b) {
      double da = d.dart_dir(a), db = d.dart_dir(b);
      if (da != db) return da < db;
      return a < b;
    });
    for (size_t i = 0; i < ring.size(); ++i) pos_in_rot[ring[i]] = static_cast<int>(i);
  }

  // Trace faces: successor of a dart is the clockwise-next dart after its
  // reverse around the head vertex, which keeps the region on the left.
  d.faces.clear();
  std::vector<int> face_of(2 * d.edge_count(), -1);
  for (int start = 0; start < 2 * d.edge_count(); ++start) {
    if (face_of[start] >= 0) continue;
    std::vector<int> walk;
    int cur = start;
    do {
      face_of[cur] = static_cast<int>(d.faces.size());
      walk.push_back(cur);
      int v = d.dart_head(cur);
      const auto& ring = d.rot[v];
      int i = pos_in_rot[dart_reverse(cur)];
      cur = ring[(i + ring.size() - 1) % ring.size()];
    } while (cur != start);
    d.faces.push_back(std::move(walk));
  }

  d.outer_face = -1;
  int outer_count = 0;
  for (size_t f = 0; f < d.faces.size(); ++f) {
    double t = face_turning_sum(d, d.faces[f]);
    if (std::fabs(t - kTwoPi) < 1e-6) continue;
    if (std::fabs(t + kTwoPi) < 1e-6) {
      d.outer_face = static_cast<int>(f);
      ++outer_count;
      continue;
    }
    throw InputError("face traversal produced an inconsistent turning sum");
  }
  if (outer_count != 1) throw InputError("embedding does not have a unique outer face");

  long long euler = static_cast<long long>(n) - d.edge_count() + static_cast<long long>(d.faces.size());
  if (euler != 2) throw InputError("Euler characteristic check failed");
}

Zones derive_zones(const Drawing& d, const Config& cfg,
                   const std::optional<std::vector<std::vector<int>>>& declared) {
  const int ec = d.edge_count();
  std::vector<int> parent(ec);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    if (f == d.outer_face) continue;
    const auto& walk = d.faces[f];
    const int len = static_cast<int>(walk.size());
    if (len % 2 != 0) throw InputError("interior face of odd length is not face-symmetric");
    for (int i = 0; i < len / 2; ++i) unite(dart_edge(walk[i]), dart_edge(walk[i + len / 2]));
  }

  Zones z;
  z.zone_of_edge.assign(ec, -1);
  std::vector<int> zone_of_root(ec, -1);
  for (int e = 0; e < ec; ++e) {
    int r = find(e);
    if (zone_of_root[r] < 0) {
      zone_of_root[r] = z.count();
      z.members.push_back({});
    }
    z.zone_of_edge[e] = zone_of_root[r];
    z.members[zone_of_root[r]].push_back(e);
  }

  for (int zi = 0; zi < z.count(); ++zi) {
    int canon = z.members[zi].front();
    double theta = wrap_pi(d.dart_dir(2 * canon));
    double len = d.dart_vec(2 * canon).norm();
    z.theta.push_back(theta);
    z.length.push_back(len);
    for (int e : z.members[zi]) {
      if (angle_dist_mod_pi(d.dart_dir(2 * e), theta) > cfg.eps_geom)
        throw InputError(fmt("zone edges are not parallel near edge", e));
      if (std::fabs(d.dart_vec(2 * e).norm() - len) > cfg.eps_geom)
        throw InputError(fmt("zone edges have unequal length near edge", e));
    }
  }

  if (declared) {
    auto canon_partition = [](std::vector<std::vector<int>> p) {
      for (auto& m : p) std::sort(m.begin(), m.end());
      std::sort(p.begin(), p.end());
      return p;
    };
    if (canon_partition(*declared) != canon_partition(z.members))
      throw InputError("zones field does not match the derived zone partition");
  }
  return z;
}

CornersResult extract_corners(const Drawing& d, const Zones& z, const Config& cfg) {
  CornersResult out;

  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    const auto& walk = d.faces[f];
    const int len = static_cast<int>(walk.size());
    const bool interior = f != d.outer_face;
    for (int i = 0; i < len; ++i) {
      int din = walk[i], dout = walk[(i + 1) % len];
      Corner c;
      c.face = f;
      c.vertex = d.dart_head(din);
      c.zone_in = z.zone_of_edge[dart_edge(din)];
      c.zone_out = z.zone_of_edge[dart_edge(dout)];
      c.dir_in = d.dart_dir(din);
      c.dir_out = d.dart_dir(dout);
      c.angle = face_corner_angle(d, din, dout);
      c.side = interior ? FaceSide::interior : FaceSide::outer;
      if (interior && c.angle > kPi + cfg.eps_geom) {
        std::ostringstream os;
        os << "interior face " << f << " is not convex at vertex " << d.ids[c.vertex];
        throw InputError(os.str());
      }
      out.corners.push_back(c);
    }
  }

  // Boundary walk: the outer face runs with the unbounded region on its
  // left, so reverse it to put the drawing interior on the left.
  const auto& outer = d.faces[d.outer_face];
  BoundaryWalk& b = out.boundary;
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    int dart = dart_reverse(*it);
    b.darts.push_back(dart);
    b.zone.push_back(z.zone_of_edge[dart_edge(dart)]);
  }
  const int bn = b.size();
  b.turn.resize(bn);
  b.lift.resize(bn);
  for (int j = 0; j < bn; ++j) {
    int cur = b.darts[j], nxt = b.darts[(j + 1) % bn];
    // A cusp at a degree-1 vertex turns by +pi, the limit of walking
    // around the tip of a thickened edge with the interior on the left.
    if (nxt == dart_reverse(cur))
      b.turn[j] = kPi;
    else
      b.turn[j] = kPi - corner_angle(d.dart_dir(cur), d.dart_dir(nxt));
  }
  b.lift[0] = 0;
  for (int j = 1; j < bn; ++j) b.lift[j] = b.lift[j - 1] + b.turn[j - 1];
  b.total_turn = b.lift[bn - 1] + b.turn[bn - 1];

  for (const Corner& c : out.corners) {
    if (d.degree(c.vertex) < 2) continue;
    if (!out.resolution || c.angle < *out.resolution) out.resolution = c.angle;
  }
  return out;
}

Ingested ingest(const Document& doc, const Config& cfg) {
  Ingested ing;
  ing.drawing = parse_drawing(doc);
  derive_embedding(ing.drawing, cfg);
  ing.zones = derive_zones(ing.drawing, cfg, doc.zones);
  CornersResult cr = extract_corners(ing.drawing, ing.zones, cfg);
  ing.corners = std::move(cr.corners);
  ing.boundary = std::move(cr.boundary);
  ing.resolution = cr.resolution;
  return ing;
}

}  // namespace fsdraw
