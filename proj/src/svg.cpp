#include "cables/svg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cables {

std::string render_svg(const MountainRange& range, const RenderSpec& spec) {
  if (spec.cell < 1)
    throw std::invalid_argument("render cell size must be positive, got " +
                                spec.cell.str());
  if (spec.floor != range.floor)
    throw std::invalid_argument("render floor " + spec.floor.str() +
                                " does not match the range's floor " +
                                range.floor.str());
  if (range.entries.empty())
    throw std::invalid_argument("cannot render an empty mountain range");

  Int rot_min = range.entries.begin()->second;
  Int rot_max = rot_min;
  Int tb_top = range.entries.begin()->first;
  for (const auto& [t, r] : range.entries) {
    rot_min = std::min(rot_min, r);
    rot_max = std::max(rot_max, r);
    tb_top = std::max(tb_top, t);
  }

  const Int& cell = spec.cell;
  Int margin = cell;
  Int width = (rot_max - rot_min) * cell + 2 * margin;
  Int height = (tb_top - range.floor) * cell + 2 * margin;
  Int dot = std::max(Int(2), Int(cell / 5));
  Int peak_dot = std::max(Int(3), Int(3 * cell / 10));

  std::set<std::pair<Int, Int>> peaks = range.peak_entries();

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + width.str() +
         "\" height=\"" + height.str() + "\" viewBox=\"0 0 " + width.str() +
         " " + height.str() + "\">\n";
  svg +=
      "  <style>.entry{fill:#4a6fa5}.peak{fill:#b03a2e}"
      "text{font:10px monospace;fill:#333}</style>\n";
  for (const auto& [t, r] : range.entries) {
    Int cx = margin + (r - rot_min) * cell;
    Int cy = margin + (tb_top - t) * cell;
    bool is_peak = peaks.count({t, r}) != 0;
    svg += "  <circle class=\"" + std::string(is_peak ? "peak" : "entry") +
           "\" cx=\"" + cx.str() + "\" cy=\"" + cy.str() + "\" r=\"" +
           (is_peak ? peak_dot : dot).str() + "\"/>\n";
    if (spec.labels) {
      svg += "  <text x=\"" + Int(cx + dot + 2).str() + "\" y=\"" +
             Int(cy - dot).str() + "\">(" + t.str() + "," + r.str() +
             ")</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cables
