#include "crosscap/topology.hpp"

#include <algorithm>
#include <set>

#include "crosscap/curveconfig.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/ribbon.hpp"

namespace crosscap {

std::string to_string(Sidedness s) { return s == Sidedness::OneSided ? "OneSided" : "TwoSided"; }

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::NonTrivial: return "NonTrivial";
    case Triviality::BoundsDisc: return "BoundsDisc";
    case Triviality::BoundsOncePuncturedDisc: return "BoundsOncePuncturedDisc";
    case Triviality::BoundsMoebius: return "BoundsMoebius";
    case Triviality::BoundaryParallel: return "BoundaryParallel";
  }
  return "?";
}

std::string to_string(TriangleType t) {
  return t == TriangleType::OrientationPreserving ? "OrientationPreserving" : "OrientationReversing";
}

std::vector<int> curve_indices(const CurveConfiguration& c, const std::vector<std::string>& names) {
  std::vector<int> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(c.curve_index(n));
  return out;
}

void require_bigon_free(const CurveConfiguration& c) {
  const auto bigons = find_bigons(c);
  if (!bigons.empty()) throw BigonPresent(bigons.front().detail);
}

namespace {

void check_curve(const CurveConfiguration& c, int a) {
  if (a < 0 || a >= static_cast<int>(c.curves.size())) throw UnknownCurve("curve index " + std::to_string(a));
}

}  // namespace

int intersection_number(const CurveConfiguration& c, int a, int b) {
  check_curve(c, a);
  check_curve(c, b);
  if (a == b) throw PreconditionViolated("intersection number of '" + c.curves[a] + "' with itself");
  require_bigon_free(c);
  return c.shared_crossings(a, b);
}

int intersection_number(const CurveConfiguration& c, const std::string& a, const std::string& b) {
  return intersection_number(c, c.curve_index(a), c.curve_index(b));
}

int sign_product(const CurveConfiguration& c, int curve) {
  check_curve(c, curve);
  int p = 1;
  for (int s : c.signs[curve]) p *= s;
  return p;
}

Sidedness sidedness(const CurveConfiguration& c, int curve) {
  return sign_product(c, curve) > 0 ? Sidedness::TwoSided : Sidedness::OneSided;
}

CutResult cut_along(const CurveConfiguration& c, const std::vector<int>& subset) {
  for (int a : subset) check_curve(c, a);
  CutResult out;
  const Restriction r = restrict_curves(c, curve_mask(c, subset));
  for (const Region& reg : r.config.regions) out.components.push_back(reg.type);
  out.neighborhood_chi = r.neighborhood_chi;
  std::vector<int> seen{subset.empty() ? -1 : subset.front()};
  for (std::size_t q = 0; q < seen.size() && !subset.empty(); ++q)
    for (int b : subset)
      if (std::find(seen.begin(), seen.end(), b) == seen.end() && c.shared_crossings(seen[q], b) > 0) seen.push_back(b);
  out.neighborhood_connected = !subset.empty() && seen.size() == subset.size();
  if (out.neighborhood_connected) out.neighborhood = neighborhood_invariants(c, subset);
  return out;
}

CutResult cut_along_named(const CurveConfiguration& c, const std::vector<std::string>& subset) {
  return cut_along(c, curve_indices(c, subset));
}

CurveClass classify_curve(const CurveConfiguration& c, int curve) {
  check_curve(c, curve);
  CurveClass out;
  out.sidedness = sidedness(c, curve);
  const CutResult cut = cut_along(c, {curve});
  out.components = cut.components;
  out.separating = cut.components.size() > 1;
  const bool two_sided = out.sidedness == Sidedness::TwoSided;
  out.characteristic = two_sided && std::all_of(cut.components.begin(), cut.components.end(),
                                                [](const SurfaceInvariants& s) { return s.orientable; });
  if (out.separating) {
    for (const SurfaceInvariants& s : cut.components) {
      if (s == orientable_surface(0, 0, 1)) out.trivial = Triviality::BoundsDisc;
      else if (s == orientable_surface(0, 1, 1)) out.trivial = Triviality::BoundsOncePuncturedDisc;
      else if (s == nonorientable_surface(1, 0, 1)) out.trivial = Triviality::BoundsMoebius;
      else if (s == orientable_surface(0, 0, 2)) out.trivial = Triviality::BoundaryParallel;
      else continue;
      break;
    }
  }
  return out;
}

CurveClass classify_curve(const CurveConfiguration& c, const std::string& curve) {
  return classify_curve(c, c.curve_index(curve));
}

bool admissible(const CurveConfiguration& c, int curve) {
  const CurveClass k = classify_curve(c, curve);
  if (k.sidedness != Sidedness::TwoSided || k.separating) return false;
  return c.ambient.orientable || !k.components.front().orientable;
}

bool isotopic_disjoint(const CurveConfiguration& c, int a, int b) {
  check_curve(c, a);
  check_curve(c, b);
  if (a == b) return true;
  if (c.shared_crossings(a, b) != 0) return false;
  if (sidedness(c, a) == Sidedness::OneSided || sidedness(c, b) == Sidedness::OneSided) return false;
  const Restriction r = restrict_curves(c, curve_mask(c, {a, b}));
  const RibbonMap m(r.config);
  for (const Region& reg : r.config.regions) {
    if (reg.type != orientable_surface(0, 0, 2) || reg.faces.size() != 2) continue;
    std::set<int> owners;
    for (int f : reg.faces) owners.insert(m.parts(m.faces()[f].flags.front()).curve);
    if (owners.size() == 2) return true;
  }
  return false;
}

std::vector<Edge> path_edges(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

bool recognize_pattern(const CurveConfiguration& c, const std::vector<int>& curves, const std::vector<Edge>& edges) {
  const int n = static_cast<int>(curves.size());
  for (int v : curves) check_curve(c, v);
  if (std::set<int>(curves.begin(), curves.end()).size() != curves.size()) return false;
  require_bigon_free(c);
  std::set<Edge> want;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw PatternMismatch("edge outside the vertex list");
    want.insert({std::min(i, j), std::max(i, j)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.shared_crossings(curves[i], curves[j]) != (want.count({i, j}) ? 1 : 0)) return false;
  return true;
}

TriangleType triangle_type(const CurveConfiguration& c, int a1, int a2, int a3) {
  const std::vector<int> tri{a1, a2, a3};
  if (!recognize_pattern(c, tri, {{0, 1}, {1, 2}, {0, 2}}))
    throw NotATriangle("curves do not pairwise intersect exactly once");
  for (int a : tri)
    if (sidedness(c, a) != Sidedness::TwoSided) throw NotATriangle("curve '" + c.curves[a] + "' is one-sided");
  return neighborhood_invariants(c, tri).orientable ? TriangleType::OrientationPreserving
                                                   : TriangleType::OrientationReversing;
}

void check_pair_preconditions(const CurveConfiguration& c, int a1, int a2) {
  check_curve(c, a1);
  check_curve(c, a2);
  if (a1 == a2) throw PreconditionViolated("the pair must consist of two distinct curves");
  require_bigon_free(c);
  if (c.shared_crossings(a1, a2) != 0)
    throw PreconditionViolated("curves '" + c.curves[a1] + "' and '" + c.curves[a2] + "' intersect");
  for (int a : {a1, a2}) {
    const CurveClass k = classify_curve(c, a);
    if (k.sidedness != Sidedness::TwoSided) throw PreconditionViolated("curve '" + c.curves[a] + "' is one-sided");
    if (k.separating) throw PreconditionViolated("curve '" + c.curves[a] + "' separates the surface");
    if (k.components.front().orientable)
      throw PreconditionViolated("curve '" + c.curves[a] + "' has an orientable complement");
  }
}

SeparatingPairResult separating_pair_direct(const CurveConfiguration& c, int a1, int a2) {
  check_pair_preconditions(c, a1, a2);
  SeparatingPairResult out;
  out.components = cut_along(c, {a1, a2}).components;
  out.separates = out.components.size() == 2;
  return out;
}

bool chain_separates_disc(const CurveConfiguration& c, const std::vector<int>& chain) {
  if (chain.empty() || !recognize_pattern(c, chain, path_edges(static_cast<int>(chain.size()))))
    throw NotAChain("curves do not form a chain");
  const CutResult cut = cut_along(c, chain);
  return std::any_of(cut.components.begin(), cut.components.end(),
                     [](const SurfaceInvariants& s) { return s == orientable_surface(0, 0, 1); });
}

}  // namespace crosscap
