#include "fsdraw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "fsdraw/ingest.hpp"

namespace fsdraw {

std::optional<double> measure_resolution(const Drawing& d) {
  std::optional<double> best;
  for (int v = 0; v < d.vertex_count(); ++v) {
    const auto& ring = d.rot[v];
    const int deg = static_cast<int>(ring.size());
    if (deg < 2) continue;
    for (int i = 0; i < deg; ++i) {
      double a = d.dart_dir(ring[i]);
      double b = d.dart_dir(ring[(i + 1) % deg]);
      double gap = wrap_two_pi(b - a);
      if (!best || gap < *best) best = gap;
    }
  }
  return best;
}

namespace {

void fail(CheckEntry& c, double worst, const std::string& detail) {
  c.pass = false;
  c.worst = worst;
  c.detail = detail;
}

void check_central_symmetry(CheckEntry& c, const Drawing& d, const Config& cfg) {
  try {
    Zones z = derive_zones(d, cfg);
    double worst = 0;
    for (int zi = 0; zi < z.count(); ++zi) {
      for (int e : z.members[zi]) {
        worst = std::max(worst, angle_dist_mod_pi(d.dart_dir(2 * e), z.theta[zi]));
        worst = std::max(worst, std::fabs(d.dart_vec(2 * e).norm() - z.length[zi]));
      }
    }
    c.worst = worst;
    c.pass = worst <= cfg.eps_geom;
  } catch (const InputError& e) {
    fail(c, std::numeric_limits<double>::infinity(), e.what());
  }
}

void check_convexity(CheckEntry& c, const Drawing& d, const Config& cfg) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    if (f == d.outer_face) continue;
    const auto& walk = d.faces[f];
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
      int din = walk[i], dout = walk[(i + 1) % len];
      double a = dout == dart_reverse(din) ? kTwoPi
                                           : corner_angle(d.dart_dir(din), d.dart_dir(dout));
      worst = std::max(worst, a - kPi);
    }
  }
  if (worst == -std::numeric_limits<double>::infinity()) worst = 0;  // no interior faces
  c.worst = worst;
  c.pass = worst <= cfg.eps_geom;
}

void check_winding(CheckEntry& c, const Drawing& d, const Zones& z, const Config& cfg) {
  try {
    CornersResult cr = extract_corners(d, z, cfg);
    const BoundaryWalk& b = cr.boundary;
    double worst = 0;
    for (int k = 0; k < b.size(); ++k) {
      for (int l = 0; l < b.size(); ++l) {
        if (k == l) continue;
        double w = b.winding(k, l);
        worst = std::max(worst, std::max(w - 3 * kPi, -kPi - w));
      }
    }
    c.worst = worst;
    c.pass = worst <= cfg.eps_geom;
  } catch (const InputError& e) {
    fail(c, std::numeric_limits<double>::infinity(), e.what());
  }
}

void check_planarity(CheckEntry& c, const Drawing& d, const Config& cfg) {
  if (auto hit = find_crossing(d, cfg.eps_geom)) {
    std::ostringstream os;
    os << "edges " << hit->first << " and " << hit->second << " cross";
    fail(c, 1.0, os.str());
  }
}

void check_rotation(CheckEntry& c, const Drawing& out, const Drawing& in) {
  for (int v = 0; v < in.vertex_count(); ++v) {
    std::vector<int> a, b;
    for (int dart : in.rot[v]) a.push_back(dart);
    for (int dart : out.rot[v]) b.push_back(dart);
    if (a.size() != b.size()) {
      fail(c, 1.0, "vertex degree changed");
      return;
    }
    auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) {
      fail(c, 1.0, "incident edge set changed");
      return;
    }
    std::rotate(b.begin(), it, b.end());
    if (a != b) {
      std::ostringstream os;
      os << "cyclic edge order changed at vertex " << in.ids[v];
      fail(c, 1.0, os.str());
      return;
    }
  }
}

}  // namespace

VerifyReport check_drawing(const Drawing& out, const Ingested& ref, Mode mode,
                           const Config& cfg) {
  VerifyReport rep;
  rep.mode = mode;

  Drawing d = out;
  d.rot.clear();
  d.faces.clear();
  derive_embedding(d, cfg, /*require_planar=*/false);

  rep.resolution = measure_resolution(d);
  check_planarity(rep.planarity, d, cfg);
  check_rotation(rep.rotation_preservation, d, ref.drawing);
  check_central_symmetry(rep.central_symmetry, d, cfg);
  check_convexity(rep.interior_convexity, d, cfg);

  if (mode == Mode::safe) {
    check_winding(rep.winding_range, d, ref.zones, cfg);
  } else {
    rep.winding_range.asserted = false;
    rep.winding_range.detail = "skipped";
    rep.planarity.asserted = false;
  }
  return rep;
}

double oracle_lambda(const AuxGraph& g, double tol) {
  const int n = g.vertex_count();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Minimum constants per ordered pair, split by multiplier.
  std::vector<double> b0(static_cast<std::size_t>(n) * n, kInf);
  std::vector<double> b1(static_cast<std::size_t>(n) * n, kInf);
  for (const AuxEdge& e : g.edges) {
    std::size_t k = static_cast<std::size_t>(e.tail) * n + e.head;
    auto& cell = e.m ? b1[k] : b0[k];
    cell = std::min(cell, e.b);
  }

  auto feasible = [&](double lambda) {
    std::vector<double> dist(static_cast<std::size_t>(n) * n, kInf);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::size_t k = static_cast<std::size_t>(i) * n + j;
        double w = std::min(b0[k], b1[k] == kInf ? kInf : b1[k] - lambda);
        if (i == j) w = std::min(w, 0.0);
        dist[k] = w;
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        double dik = dist[static_cast<std::size_t>(i) * n + k];
        if (dik == kInf) continue;
        for (int j = 0; j < n; ++j) {
          double dkj = dist[static_cast<std::size_t>(k) * n + j];
          if (dkj == kInf) continue;
          double& dij = dist[static_cast<std::size_t>(i) * n + j];
          if (dik + dkj < dij) dij = dik + dkj;
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (dist[static_cast<std::size_t>(i) * n + i] < -1e-12) return false;
    return true;
  };

  double lo = 0, hi = kTwoPi;
  if (!feasible(lo)) throw InputError("input drawing violates its own constraints");
  if (feasible(hi)) return hi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace fsdraw
