#include "crosscap/cut.hpp"

#include <algorithm>
#include <map>

#include "crosscap/errors.hpp"
#include "crosscap/parity_union_find.hpp"
#include "crosscap/transform.hpp"

namespace crosscap {

std::vector<char> curve_mask(const CurveConfiguration& c, const std::vector<int>& curves) {
  std::vector<char> keep(c.curves.size(), 0);
  for (int i : curves) keep.at(i) = 1;
  return keep;
}

Restriction restrict_curves(const CurveConfiguration& c, const std::vector<char>& keep) {
  const int nc = static_cast<int>(c.curves.size());
  const int nr = static_cast<int>(c.regions.size());
  const RibbonMap map(c);
  const int nfaces = static_cast<int>(map.faces().size());

  std::vector<int> region_of(nfaces, -1), slot_of(nfaces, -1);
  for (int r = 0; r < nr; ++r)
    for (std::size_t k = 0; k < c.regions[r].faces.size(); ++k) {
      const int f = c.regions[r].faces[k];
      if (f < 0 || f >= nfaces) throw ReferenceError("region '" + c.regions[r].name + "' names an unknown face");
      region_of[f] = r;
      slot_of[f] = static_cast<int>(k);
    }
  for (int f = 0; f < nfaces; ++f)
    if (region_of[f] < 0) throw ReferenceError("face f" + std::to_string(f) + " is not assigned to a region");
  if (nc == 0 && nr != 1) throw ReferenceError("a configuration without curves needs exactly one region");

  auto kept_dart = [&](int d) { return keep[map.arc_curve(d / 2)] != 0; };

  // nodes: regions, then discs of vertices without kept darts, then stubs
  ParityUnionFind uf(nr);
  std::vector<int> chi_delta(nr, 0);
  for (int r = 0; r < nr; ++r) chi_delta[r] = euler_characteristic(c.regions[r].type);
  const int nv = static_cast<int>(c.vertices.size());
  std::vector<int> vertex_kind(nv, 0);  // bit0: has kept dart, bit1: has dropped dart
  for (int d = 0; d < 2 * map.arc_count(); ++d) vertex_kind[map.dart_vertex(d)] |= kept_dart(d) ? 1 : 2;
  std::vector<int> disc_node(nv, -1);
  std::vector<int> piece(2 * map.arc_count(), -1);
  for (int v = 0; v < nv; ++v)
    if (vertex_kind[v] == 2) {
      disc_node[v] = uf.add();
      chi_delta.push_back(1);
    }
  for (int d = 0; d < 2 * map.arc_count(); ++d) {
    if (kept_dart(d)) continue;
    const int v = map.dart_vertex(d);
    if (vertex_kind[v] == 2) {
      piece[d] = disc_node[v];
    } else {
      piece[d] = uf.add();
      chi_delta.push_back(1);
    }
  }
  // bands of dropped arcs: +1 for the band, -2 for its two glued ends
  for (int a = 0; a < map.arc_count(); ++a) {
    if (keep[map.arc_curve(a)]) continue;
    uf.unite(piece[2 * a], piece[2 * a + 1], map.arc_sign(a));
    chi_delta[piece[2 * a]] -= 1;
  }
  // regions glue to the dropped material along runs of dropped flags
  for (const Face& face : map.faces()) {
    const int r = region_of[face.id];
    const int phi = c.regions[r].attach[slot_of[face.id]];
    const int len = static_cast<int>(face.flags.size());
    int dropped = 0;
    for (int x : face.flags)
      if (!kept_dart(RibbonMap::flag_dart(x))) {
        ++dropped;
        uf.unite(r, piece[RibbonMap::flag_dart(x)], phi * map.epsilon(x));
      }
    if (dropped == 0 || dropped == len) continue;
    int runs = 0;
    for (int p = 0; p < len; ++p) {
      const bool cur = !kept_dart(RibbonMap::flag_dart(face.flags[p]));
      const bool prev = !kept_dart(RibbonMap::flag_dart(face.flags[(p + len - 1) % len]));
      if (cur && !prev) ++runs;
    }
    chi_delta[r] -= runs;
  }

  Restriction out;
  out.config = sub_structure(c, keep);
  const int total_nodes = uf.size();
  std::vector<int> root_of(total_nodes);
  for (int n = 0; n < total_nodes; ++n) root_of[n] = uf.find(n).first;

  const RibbonMap sub(out.config);
  out.neighborhood_chi = out.config.curves.empty() ? 0 : sub.euler();
  // kept curve index in c for each sub curve
  std::vector<int> kept_index;
  for (int i = 0; i < nc; ++i)
    if (keep[i]) kept_index.push_back(i);

  std::map<int, int> comp_of_root;
  std::vector<Region> pieces;
  auto component = [&](int root) {
    auto it = comp_of_root.find(root);
    if (it != comp_of_root.end()) return it->second;
    const int id = static_cast<int>(pieces.size());
    comp_of_root[root] = id;
    pieces.push_back(Region{});
    return id;
  };
  for (const Face& face : sub.faces()) {
    const int xs = face.flags.front();
    const FlagParts fp = sub.parts(xs);
    const int x = map.flag_of(kept_index[fp.curve], fp.arc, fp.end, fp.side);
    const int f = map.face_of(x);
    const int r = region_of[f];
    const auto [root, parity] = uf.find(r);
    const int k = component(root);
    pieces[k].faces.push_back(face.id);
    pieces[k].attach.push_back(parity * c.regions[r].attach[slot_of[f]] * map.epsilon(x));
  }
  for (int r = 0; r < nr; ++r) component(root_of[r]);

  const int npieces = static_cast<int>(pieces.size());
  std::vector<int> chi(npieces, 0), punct(npieces, 0), collars(npieces, 0);
  std::vector<char> orient(npieces, 1);
  std::vector<std::vector<std::string>> names(npieces);
  for (int n = 0; n < total_nodes; ++n) chi[component(root_of[n])] += chi_delta[n];
  out.piece_of_region.resize(nr);
  for (int r = 0; r < nr; ++r) {
    const int k = component(root_of[r]);
    out.piece_of_region[r] = k;
    punct[k] += c.regions[r].type.punctures;
    collars[k] += c.regions[r].collars;
    if (!c.regions[r].type.orientable) orient[k] = 0;
    names[k].push_back(c.regions[r].name);
  }
  for (const auto& [root, k] : comp_of_root)
    if (!uf.consistent(root)) orient[k] = 0;
  for (int k = 0; k < npieces; ++k) {
    Region& p = pieces[k];
    std::sort(names[k].begin(), names[k].end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    for (std::size_t i = 0; i < names[k].size(); ++i) p.name += (i ? "+" : "") + names[k][i];
    p.collars = collars[k];
    try {
      p.type = surface_from_chi(orient[k] != 0, chi[k], punct[k], static_cast<int>(p.faces.size()) + collars[k]);
    } catch (const Error& e) {
      throw InternalError(std::string("inconsistent complement piece: ") + e.what());
    }
    if (!p.type.orientable) std::fill(p.attach.begin(), p.attach.end(), kMatch);
  }
  out.config.regions = std::move(pieces);
  return out;
}

CurveConfiguration delete_curve(const CurveConfiguration& c, int curve) {
  std::vector<char> keep(c.curves.size(), 1);
  keep.at(curve) = 0;
  return smooth(restrict_curves(c, keep).config);
}

}  // namespace crosscap
