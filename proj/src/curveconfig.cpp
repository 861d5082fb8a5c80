#include "crosscap/curveconfig.hpp"

#include <set>

#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/parity_union_find.hpp"
#include "crosscap/transform.hpp"

namespace crosscap {

std::vector<Face> trace_faces(const CurveConfiguration& c) {
  if (c.curves.empty()) return {};
  return RibbonMap(c).faces();
}

SurfaceInvariants neighborhood_invariants(const CurveConfiguration& c, const std::vector<int>& subset) {
  if (subset.empty()) throw PreconditionViolated("neighborhood of an empty curve set");
  const CurveConfiguration s = sub_structure(c, curve_mask(c, subset));
  const RibbonMap m(s);
  return surface_from_chi(m.orientable(), m.euler(), 0, static_cast<int>(m.faces().size()));
}

SurfaceInvariants assembled_invariants(const CurveConfiguration& c) {
  const int nr = static_cast<int>(c.regions.size());
  if (c.curves.empty()) {
    if (nr != 1) throw AssemblyMismatch("a configuration without curves needs exactly one region");
    SurfaceInvariants t = c.regions.front().type;
    if (t.boundary != c.regions.front().collars)
      throw AssemblyMismatch("region '" + c.regions.front().name + "' boundary count does not match its collars");
    return t;
  }
  const RibbonMap map(c);
  const int nv = static_cast<int>(c.vertices.size());
  const int nfaces = static_cast<int>(map.faces().size());
  std::vector<int> region_of(nfaces, -1), slot_of(nfaces, -1);
  int chi = map.euler(), punctures = 0, boundary = 0;
  bool orientable = map.orientable();
  for (int r = 0; r < nr; ++r) {
    const Region& reg = c.regions[r];
    if (reg.attach.size() != reg.faces.size()) throw AssemblyMismatch("region '" + reg.name + "' attachment list is malformed");
    for (std::size_t k = 0; k < reg.faces.size(); ++k) {
      const int f = reg.faces[k];
      if (f < 0 || f >= nfaces) throw ReferenceError("region '" + reg.name + "' names unknown face f" + std::to_string(f));
      if (region_of[f] >= 0) throw ReferenceError("face f" + std::to_string(f) + " assigned twice");
      region_of[f] = r;
      slot_of[f] = static_cast<int>(k);
    }
    if (reg.type.boundary != static_cast<int>(reg.faces.size()) + reg.collars)
      throw AssemblyMismatch("region '" + reg.name + "' has " + std::to_string(reg.type.boundary) +
                             " boundary circles but " + std::to_string(reg.faces.size()) + " faces and " +
                             std::to_string(reg.collars) + " collars");
    chi += euler_characteristic(reg.type);
    punctures += reg.type.punctures;
    boundary += reg.collars;
    if (!reg.type.orientable) orientable = false;
  }
  for (int f = 0; f < nfaces; ++f)
    if (region_of[f] < 0) throw ReferenceError("face f" + std::to_string(f) + " is not assigned to a region");
  // vertices then regions
  ParityUnionFind uf(nv + nr);
  for (int a = 0; a < map.arc_count(); ++a)
    if (!uf.unite(map.dart_vertex(2 * a), map.dart_vertex(2 * a + 1), map.arc_sign(a))) orientable = false;
  for (const Face& face : map.faces()) {
    const int r = region_of[face.id];
    const int x = face.flags.front();
    if (!uf.unite(nv + r, map.flag_vertex(x), c.regions[r].attach[slot_of[face.id]])) orientable = false;
  }
  std::set<int> roots;
  for (int v = 0; v < nv; ++v) roots.insert(uf.find(v).first);
  for (int r = 0; r < nr; ++r) roots.insert(uf.find(nv + r).first);
  if (roots.size() != 1) throw AssemblyMismatch("the pieces do not assemble into a connected surface");
  try {
    return surface_from_chi(orientable, chi, punctures, boundary);
  } catch (const Error& e) {
    throw AssemblyMismatch(std::string("assembled pieces do not form a surface: ") + e.what());
  }
}

SurfaceInvariants assemble(const CurveConfiguration& c) {
  const SurfaceInvariants s = assembled_invariants(c);
  if (s != c.ambient)
    throw AssemblyMismatch("assembled " + to_literal(s) + " but declared " + to_literal(c.ambient));
  return s;
}

std::vector<Violation> find_bigons(const CurveConfiguration& c) {
  std::vector<Violation> out;
  const int nc = static_cast<int>(c.curves.size());
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b) {
      if (c.shared_crossings(a, b) == 0) continue;
      const CurveConfiguration pair = smooth(restrict_curves(c, curve_mask(c, {a, b})).config);
      const RibbonMap m(pair);
      std::vector<int> region_of(m.faces().size(), -1);
      for (std::size_t r = 0; r < pair.regions.size(); ++r)
        for (int f : pair.regions[r].faces) region_of[f] = static_cast<int>(r);
      for (const Face& face : m.faces()) {
        if (face.degree() != 2) continue;
        std::set<int> curves;
        for (int x : face.flags) curves.insert(m.arc_curve(RibbonMap::flag_arc(x)));
        if (curves.size() != 2) continue;
        const Region& reg = pair.regions[region_of[face.id]];
        if (reg.type == orientable_surface(0, 0, 1) && reg.faces.size() == 1) {
          std::set<std::string> corners;
          for (int x : face.flags) corners.insert(pair.vertices[m.flag_vertex(x)].name);
          std::string at;
          for (const auto& v : corners) at += (at.empty() ? "" : ",") + v;
          out.push_back({"Bigon", "curves '" + c.curves[a] + "' and '" + c.curves[b] + "' bound an empty bigon (" + reg.name + ") at " + at});
        }
      }
    }
  return out;
}

std::vector<Violation> validate_config(const CurveConfiguration& c) {
  std::vector<Violation> out;
  try {
    check_surface(c.ambient);
  } catch (const Error& e) {
    out.push_back({"InvalidAmbient", e.what()});
    return out;
  }
  int punctures = 0;
  for (const auto& r : c.regions) {
    try {
      check_surface(r.type);
    } catch (const Error& e) {
      out.push_back({"InvalidRegion", r.name + ": " + e.what()});
    }
    punctures += r.type.punctures;
  }
  if (punctures != c.ambient.punctures)
    out.push_back({"PunctureCountMismatch", "regions carry " + std::to_string(punctures) + " punctures, ambient has " +
                                                std::to_string(c.ambient.punctures)});
  int collars = 0;
  for (const auto& r : c.regions) collars += r.collars;
  if (collars != c.ambient.boundary)
    out.push_back({"BoundaryCountMismatch", "regions carry " + std::to_string(collars) + " collars, ambient has " +
                                                std::to_string(c.ambient.boundary) + " boundary circles"});
  try {
    const RibbonMap m(c);
    std::vector<int> count(m.faces().size(), 0);
    for (const auto& r : c.regions)
      for (int f : r.faces) {
        if (f < 0 || f >= static_cast<int>(count.size()))
          out.push_back({"UnknownFace", r.name + " names f" + std::to_string(f)});
        else
          ++count[f];
      }
    for (std::size_t f = 0; f < count.size(); ++f) {
      if (count[f] == 0) out.push_back({"UnassignedFace", "f" + std::to_string(f)});
      if (count[f] > 1) out.push_back({"FaceAssignedTwice", "f" + std::to_string(f)});
    }
    for (const auto& r : c.regions)
      if (r.type.boundary != static_cast<int>(r.faces.size()) + r.collars)
        out.push_back({"RegionBoundaryMismatch", r.name + " declares " + std::to_string(r.type.boundary) +
                                                     " boundary circles, attached to " + std::to_string(r.faces.size()) +
                                                     " faces and " + std::to_string(r.collars) + " collars"});
  } catch (const Error& e) {
    out.push_back({e.kind(), e.what()});
    return out;
  }
  if (!out.empty()) return out;
  try {
    const SurfaceInvariants s = assembled_invariants(c);
    if (s != c.ambient)
      out.push_back({"AssemblyMismatch", "assembled " + to_literal(s) + " but declared " + to_literal(c.ambient)});
  } catch (const Error& e) {
    out.push_back({"AssemblyMismatch", e.what()});
    return out;
  }
  for (auto& v : find_bigons(c)) out.push_back(v);
  return out;
}

}  // namespace crosscap
