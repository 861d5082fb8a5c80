#pragma once

#include <vector>

#include "crosscap/config.hpp"

namespace crosscap {

// A boundary circle of the curve neighborhood, as its cyclic walk of flags.
struct Face {
  int id = 0;
  std::vector<int> flags;  // orbit order, starting at the least flag
  int degree() const { return static_cast<int>(flags.size()) / 2; }
};

struct FlagParts {
  int curve = 0;
  int arc = 0;
  int end = 0;   // 0 = tail of the arc, 1 = head
  int side = 1;  // +1 / -1
};

// Signed rotation system of a configuration. Darts are arc ends
// (dart = 2*arc + end); a flag is a dart together with a side, numbered
// 2*dart + (side < 0). Flag numbers follow (curve, arc, end, side) order.
class RibbonMap {
 public:
  explicit RibbonMap(const CurveConfiguration& c);

  int curve_count() const { return static_cast<int>(arc_offset_.size()) - 1; }
  int arc_count() const { return static_cast<int>(arc_curve_.size()); }
  int flag_count() const { return 4 * arc_count(); }
  int used_vertex_count() const { return used_vertices_; }

  int arc_id(int curve, int j) const { return arc_offset_[curve] + j; }
  int arcs_of(int curve) const { return arc_offset_[curve + 1] - arc_offset_[curve]; }
  int arc_curve(int arc) const { return arc_curve_[arc]; }
  int arc_index(int arc) const { return arc - arc_offset_[arc_curve_[arc]]; }
  int arc_sign(int arc) const { return arc_sign_[arc]; }

  int dart_vertex(int dart) const { return dart_vertex_[dart]; }
  int succ(int dart) const { return succ_[dart]; }
  int pred(int dart) const { return pred_[dart]; }

  static int flag(int dart, int side) { return 2 * dart + (side < 0 ? 1 : 0); }
  static int flag_dart(int f) { return f / 2; }
  static int flag_side(int f) { return (f & 1) ? -1 : 1; }
  static int flag_arc(int f) { return f / 4; }
  int flag_of(int curve, int j, int end, int side) const { return flag(2 * arc_id(curve, j) + end, side); }
  FlagParts parts(int f) const;
  int flag_vertex(int f) const { return dart_vertex_[flag_dart(f)]; }

  int alpha0(int f) const;
  int alpha1(int f) const;

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(int f) const { return face_of_[f]; }
  int face_position(int f) const { return face_pos_[f]; }
  // Orientation of the collar of f's face at f, relative to the rotation at
  // f's vertex, when the collar is oriented like the rotation at the face's
  // least flag.
  int epsilon(int f) const;

  bool orientable() const { return orientable_; }
  int euler() const { return used_vertices_ - arc_count(); }

 private:
  std::vector<int> arc_offset_;
  std::vector<int> arc_curve_;
  std::vector<int> arc_sign_;
  std::vector<int> dart_vertex_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<Face> faces_;
  std::vector<int> face_of_;
  std::vector<int> face_pos_;
  bool orientable_ = true;
  int used_vertices_ = 0;
};

}  // namespace crosscap
