#pragma once

#include <string>

#include "socs/society.hpp"

namespace socs {

struct RenderOptions {
  int width = 640;
  int height = 480;
  bool show_witness = false;  // mark a maximal-agreement platform
};

/// Renders a society as SVG 1.1: offset segments above a line, offset arcs
/// around a circle, or filled rectangles in the fundamental domain with
/// wrapping sets split into pieces and identification marks on circular
/// axes. Pure function; coordinates are converted to decimals for display
/// only. Every voter is wrapped in a <g class="voter"> element.
std::string render_svg(const Society& s, const RenderOptions& options = {});

}  // namespace socs
