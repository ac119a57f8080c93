#include "fsdraw/svg.hpp"

#include <algorithm>
#include <sstream>

#include "fsdraw/io_json.hpp"

namespace fsdraw {

std::string render_svg(const Drawing& d, const Zones& z, const SvgOptions& opt) {
  Vec2 lo = d.pos[0], hi = d.pos[0];
  for (const Vec2& p : d.pos) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  double w = hi.x - lo.x, h = hi.y - lo.y;
  double margin = 0.05 * std::max({w, h, 1e-9});

  // Keep the drawing upright by reflecting y inside its own bounding box.
  auto flip_y = [&](double y) { return lo.y + hi.y - y; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_g12(lo.x - margin)
     << " " << format_g12(lo.y - margin) << " " << format_g12(w + 2 * margin) << " "
     << format_g12(h + 2 * margin) << "\">\n";

  double stroke = std::max(w, h) / 200.0;
  if (stroke <= 0) stroke = 0.01;
  for (int e = 0; e < d.edge_count(); ++e) {
    Vec2 a = d.pos[d.edges[e].first];
    Vec2 b = d.pos[d.edges[e].second];
    std::string color = "#222222";
    if (opt.color_zones) {
      double theta = wrap_pi(d.dart_dir(2 * z.members[z.zone_of_edge[e]].front()));
      int hue = static_cast<int>(theta / kPi * 360.0) % 360;
      std::ostringstream c;
      c << "hsl(" << hue << ",80%,45%)";
      color = c.str();
    }
    os << "  <line x1=\"" << format_g12(a.x) << "\" y1=\"" << format_g12(flip_y(a.y))
       << "\" x2=\"" << format_g12(b.x) << "\" y2=\"" << format_g12(flip_y(b.y))
       << "\" stroke=\"" << color << "\" stroke-width=\"" << format_g12(stroke)
       << "\" stroke-linecap=\"round\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fsdraw
