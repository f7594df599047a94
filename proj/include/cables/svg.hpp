#pragma once

#include <string>

#include "cables/atlas.hpp"

namespace cables {

// How to draw a mountain range: the tb cutoff, the lattice cell size in
// SVG user units, and whether to print (tb, rot) labels at the markers.
struct RenderSpec {
  Int floor;
  Int cell = 24;
  bool labels = false;
};

// Renders the range as standalone SVG: rot runs horizontally, tb
// vertically (larger tb higher), one circle per entry, peak entries
// larger and darker. Byte-deterministic for fixed inputs. The spec's
// floor must match the range's, and the cell size must be positive.
std::string render_svg(const MountainRange& range, const RenderSpec& spec);

}  // namespace cables
