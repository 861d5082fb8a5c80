#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "crosscap/config.hpp"
#include "crosscap/ribbon.hpp"

namespace crosscap {

// Re-presentation of the same embedded configuration: curve order,
// directions, starting visits, declaration order and basepoint gauge.
struct Relabel {
  std::vector<int> order;           // new curve index -> old curve index
  std::vector<char> reversed;       // per old curve
  std::vector<int> start;           // per old curve: old visit that becomes visit 0
  std::vector<int> basepoint_gauge; // per old vertex, +1/-1, only read for basepoints
  std::vector<char> swap_declaration;  // per old vertex, ignored when canonical_declaration
  bool canonical_declaration = false;  // lower new curve index declared first
  std::vector<std::string> curve_names;   // per new curve; empty keeps names
  std::vector<std::string> vertex_names;  // per old vertex; empty keeps names
};

Relabel identity_relabel(const CurveConfiguration& c);

// with_regions=false skips the region transfer (structure only).
CurveConfiguration apply_relabel(const CurveConfiguration& c, const Relabel& r, bool with_regions = true);

// Removes basepoints on curves that have crossings and extra basepoints on
// crossing-free curves; merged arcs carry the product of signs.
CurveConfiguration smooth(const CurveConfiguration& c);

// Orientable regions get `match` on their least face; nonorientable ones
// carry `match` everywhere. Faces are sorted.
void normalize_attachments(CurveConfiguration& c);

// Moves the regions of `old` onto `fresh`, whose structure describes the
// same neighborhood. corr maps a flag of `fresh` to the corresponding flag
// of `old` and the orientation change (+1/-1) at that flag's vertex.
void transfer_regions(const CurveConfiguration& old, const RibbonMap& old_map, CurveConfiguration& fresh,
                      const RibbonMap& fresh_map, const std::function<std::pair<int, int>(int)>& corr);

// Structure of the kept curves only. Crossings with dropped curves become
// basepoints with the same name; curve order, arcs and flags are unchanged
// (a kept curve's flag has the same (arc, end, side) in both maps).
CurveConfiguration sub_structure(const CurveConfiguration& c, const std::vector<char>& keep);

}  // namespace crosscap
