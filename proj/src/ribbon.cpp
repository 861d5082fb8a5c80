#include "crosscap/ribbon.hpp"

#include <array>

#include "crosscap/errors.hpp"
#include "crosscap/parity_union_find.hpp"

namespace crosscap {

RibbonMap::RibbonMap(const CurveConfiguration& c) {
  const int nc = static_cast<int>(c.curves.size());
  const int nv = static_cast<int>(c.vertices.size());
  if (static_cast<int>(c.visits.size()) != nc || static_cast<int>(c.signs.size()) != nc)
    throw InternalError("visit or sign table does not match the curve list");

  arc_offset_.assign(nc + 1, 0);
  for (int i = 0; i < nc; ++i) {
    if (c.visits[i].empty()) throw ArityError("curve '" + c.curves[i] + "' has no vertex");
    if (c.signs[i].size() != c.visits[i].size())
      throw InternalError("sign table of '" + c.curves[i] + "' has the wrong length");
    arc_offset_[i + 1] = arc_offset_[i] + static_cast<int>(c.visits[i].size());
  }
  const int na = arc_offset_[nc];
  arc_curve_.resize(na);
  arc_sign_.resize(na);
  dart_vertex_.assign(2 * na, -1);

  // darts of each vertex: [curve first: in, out] [curve second: in, out]
  std::vector<std::array<int, 4>> ends(nv, {-1, -1, -1, -1});
  for (int i = 0; i < nc; ++i) {
    const auto& vis = c.visits[i];
    const int n = static_cast<int>(vis.size());
    for (int j = 0; j < n; ++j) {
      const int a = arc_offset_[i] + j;
      arc_curve_[a] = i;
      const int s = c.signs[i][j];
      if (s != 1 && s != -1) throw InternalError("arc sign must be +1 or -1");
      arc_sign_[a] = s;
      const int v = vis[j];
      if (v < 0 || v >= nv) throw ReferenceError("curve '" + c.curves[i] + "' visits an unknown vertex");
      const Vertex& vx = c.vertices[v];
      int slot;
      if (vx.first == i)
        slot = 0;
      else if (vx.second == i)
        slot = 2;
      else
        throw ReferenceError("curve '" + c.curves[i] + "' visits '" + vx.name + "' which does not lie on it");
      if (ends[v][slot + 1] != -1)
        throw ArityError("vertex '" + vx.name + "' is visited twice by '" + c.curves[i] + "'");
      const int out = 2 * a;
      const int in = 2 * (arc_offset_[i] + (j + n - 1) % n) + 1;
      ends[v][slot] = in;
      ends[v][slot + 1] = out;
      dart_vertex_[out] = v;
      dart_vertex_[in] = v;
    }
  }

  succ_.assign(2 * na, -1);
  pred_.assign(2 * na, -1);
  used_vertices_ = 0;
  for (int v = 0; v < nv; ++v) {
    const Vertex& vx = c.vertices[v];
    const auto& e = ends[v];
    if (vx.is_crossing()) {
      if (e[1] == -1 || e[3] == -1)
        throw ArityError("crossing '" + vx.name + "' is not visited exactly once by each of its curves");
      const std::array<int, 4> rot{e[0], e[2], e[1], e[3]};
      for (int p = 0; p < 4; ++p) {
        succ_[rot[p]] = rot[(p + 1) % 4];
        pred_[rot[p]] = rot[(p + 3) % 4];
      }
      ++used_vertices_;
    } else {
      if (e[1] == -1) throw ArityError("basepoint '" + vx.name + "' is not visited by its curve");
      succ_[e[0]] = e[1];
      succ_[e[1]] = e[0];
      pred_[e[0]] = e[1];
      pred_[e[1]] = e[0];
      ++used_vertices_;
    }
  }

  face_of_.assign(4 * na, -1);
  face_pos_.assign(4 * na, -1);
  for (int x = 0; x < 4 * na; ++x) {
    if (face_of_[x] != -1) continue;
    Face face;
    face.id = static_cast<int>(faces_.size());
    int cur = x;
    int pos = 0;
    do {
      face_of_[cur] = face.id;
      face_pos_[cur] = pos;
      face.flags.push_back(cur);
      cur = (pos % 2 == 0) ? alpha0(cur) : alpha1(cur);
      ++pos;
    } while (cur != x);
    faces_.push_back(std::move(face));
  }

  ParityUnionFind uf(nv);
  orientable_ = true;
  for (int a = 0; a < na; ++a)
    if (!uf.unite(dart_vertex_[2 * a], dart_vertex_[2 * a + 1], arc_sign_[a])) orientable_ = false;
}

FlagParts RibbonMap::parts(int f) const {
  const int arc = flag_arc(f);
  return FlagParts{arc_curve_[arc], arc_index(arc), flag_dart(f) & 1, flag_side(f)};
}

int RibbonMap::alpha0(int f) const {
  const int d = flag_dart(f);
  const int side = flag_side(f);
  const int s = arc_sign_[d / 2];
  return flag(d ^ 1, s > 0 ? -side : side);
}

int RibbonMap::alpha1(int f) const {
  const int d = flag_dart(f);
  return flag_side(f) > 0 ? flag(succ_[d], -1) : flag(pred_[d], 1);
}

int RibbonMap::epsilon(int f) const {
  const Face& face = faces_[face_of_[f]];
  const int delta = (face_pos_[f] % 2 == 0) ? 1 : -1;
  return flag_side(f) * delta * flag_side(face.flags.front());
}

}  // namespace crosscap
