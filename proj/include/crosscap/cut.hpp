#pragma once

#include <vector>

#include "crosscap/config.hpp"
#include "crosscap/ribbon.hpp"

namespace crosscap {

// The complement of the neighborhood of a curve subset, as a configuration
// of the kept curves whose regions are the complementary components.
struct Restriction {
  CurveConfiguration config;       // unsmoothed: former crossings with dropped curves are basepoints
  std::vector<int> piece_of_region;  // original region -> component (region index in config)
  int neighborhood_chi = 0;        // Euler characteristic of the kept curves' neighborhood
};

Restriction restrict_curves(const CurveConfiguration& c, const std::vector<char>& keep);

// Same configuration with one curve removed (regions merged accordingly).
CurveConfiguration delete_curve(const CurveConfiguration& c, int curve);

// Mask helpers.
std::vector<char> curve_mask(const CurveConfiguration& c, const std::vector<int>& curves);

}  // namespace crosscap
