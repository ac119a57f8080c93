#pragma once

#include <string>

#include "fsdraw/drawing.hpp"

namespace fsdraw {

struct SvgOptions {
  bool color_zones = false;  // hue from the output direction mod pi
};

std::string render_svg(const Drawing& d, const Zones& z, const SvgOptions& opt = {});

}  // namespace fsdraw
