#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crosscap/surface.hpp"

namespace crosscap {

// A vertex of the curve union: a transverse crossing of two curves or a
// basepoint on a single curve. At a crossing declared `cross x a b` the
// cyclic rotation is (a-in, b-in, a-out, b-out); at a basepoint (in, out).
struct Vertex {
  std::string name;
  int first = -1;
  int second = -1;  // -1 marks a basepoint
  bool is_crossing() const { return second >= 0; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Attachment flags: +1 is `match`, -1 is `reverse`.
inline constexpr int kMatch = 1;
inline constexpr int kReverse = -1;

// A filled complementary region glued to some boundary circles of the
// curve neighborhood. collars counts its circles that are ambient boundary.
struct Region {
  std::string name;
  SurfaceInvariants type;
  std::vector<int> faces;
  std::vector<int> attach;  // parallel to faces
  int collars = 0;
  friend bool operator==(const Region&, const Region&) = default;
};

// Signed combinatorial map of a union of simple closed curves plus fillings.
// Arc j of a curve runs from visit j to visit j+1 (cyclically).
struct CurveConfiguration {
  SurfaceInvariants ambient;
  std::vector<std::string> curves;
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> visits;
  std::vector<std::vector<int>> signs;
  std::vector<Region> regions;

  int curve_index(std::string_view name) const;  // throws UnknownCurve
  int find_curve(std::string_view name) const;   // -1 when absent
  int find_vertex(std::string_view name) const;
  int arc_count() const;
  int crossing_count() const;
  // Curves sharing a crossing with `curve` (with multiplicity).
  int shared_crossings(int a, int b) const;

  friend bool operator==(const CurveConfiguration&, const CurveConfiguration&) = default;
};

// Natural ordering of names: digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

CurveConfiguration parse_config(std::string_view text);
CurveConfiguration load_config(const std::string& path);

// Writes the configuration as is (no re-gauging).
std::string serialize(const CurveConfiguration& c);

// Canonical form: curves sorted, visits rotated to the least vertex name,
// crossings declared in curve order, redundant basepoints smoothed,
// region attachments normalized. Names are kept.
CurveConfiguration canonical(const CurveConfiguration& c);
std::string canonical_text(const CurveConfiguration& c);

// Name-free key: minimum canonical text over curve relabelings and
// directions with vertices and regions renamed in traversal order.
// Curve names listed in `fixed` keep their identity.
std::string anonymous_key(const CurveConfiguration& c, const std::vector<std::string>& fixed = {});
// The configuration whose serialization is the key; free curves are named ~0, ~1, ...
CurveConfiguration anonymous_form(const CurveConfiguration& c, const std::vector<std::string>& fixed = {});

// Reverses the direction of one curve (same embedded configuration).
CurveConfiguration reverse_curve(const CurveConfiguration& c, int curve);

// Swaps the declaration order of a crossing and flips its incident signs
// (same embedded configuration).
CurveConfiguration flip_crossing(const CurveConfiguration& c, int vertex);

}  // namespace crosscap
