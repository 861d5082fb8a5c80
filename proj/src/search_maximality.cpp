#include <algorithm>
#include <numeric>
#include <set>

#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/ribbon.hpp"
#include "crosscap/search.hpp"

namespace crosscap {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::CertifiedTrue: return "CertifiedTrue";
    case Outcome::CertifiedFalse: return "CertifiedFalse";
    case Outcome::InconclusiveAtBound: return "InconclusiveAtBound";
  }
  return "?";
}

std::string to_string(SystemMode m) {
  switch (m) {
    case SystemMode::Chain: return "chain";
    case SystemMode::Tree: return "tree";
    case SystemMode::Abelian: return "abelian";
  }
  return "?";
}

CrossingOptions once_crossing_options(const CurveConfiguration& c, int curve) {
  if (curve < 0 || curve >= static_cast<int>(c.curves.size())) throw UnknownCurve("curve index " + std::to_string(curve));
  const RibbonMap m(c);
  const int nf = static_cast<int>(m.faces().size());
  std::vector<int> region_of(nf, -1), slot_of(nf, -1);
  for (std::size_t r = 0; r < c.regions.size(); ++r)
    for (std::size_t k = 0; k < c.regions[r].faces.size(); ++k) {
      region_of[c.regions[r].faces[k]] = static_cast<int>(r);
      slot_of[c.regions[r].faces[k]] = static_cast<int>(k);
    }
  CrossingOptions out;
  for (int j = 0; j < m.arcs_of(curve); ++j) {
    const int dart = 2 * m.arc_id(curve, j);
    const int xp = RibbonMap::flag(dart, 1), xm = RibbonMap::flag(dart, -1);
    const int fp = m.face_of(xp), fm = m.face_of(xm);
    if (region_of[fp] != region_of[fm]) continue;
    const Region& reg = c.regions[region_of[fp]];
    if (!reg.type.orientable) {
      out.two_sided = out.one_sided = true;
      break;
    }
    // orientation carried around the loop: region -> face -> dart and back
    const int parity = reg.attach[slot_of[fp]] * m.epsilon(xp) * reg.attach[slot_of[fm]] * m.epsilon(xm);
    (parity > 0 ? out.two_sided : out.one_sided) = true;
  }
  return out;
}

std::optional<CurveConfiguration> find_curve(const CurveConfiguration& c, const CurveSpec& spec,
                                             const SearchBudget& budget, bool admissible_only, SearchStats* stats,
                                             const std::string& name) {
  std::optional<CurveConfiguration> found;
  const int b = static_cast<int>(c.curves.size());
  const SearchStats st = for_each_candidate(c, spec, budget, [&](const CurveConfiguration& e) {
    if (admissible_only && !admissible(e, b)) return true;
    found = e;
    return false;
  }, name);
  if (stats) {
    stats->structures += st.structures;
    stats->emitted += st.emitted;
    stats->truncated = stats->truncated || st.truncated;
  }
  return found;
}

namespace {

bool is_tree(int n, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : edges) {
    const int a = find(i), b = find(j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Pieces in which no nontrivial, non-peripheral two-sided curve lives.
bool saturated_piece(const SurfaceInvariants& s) {
  const int holes = s.boundary + s.punctures;
  if (s.orientable) return s.genus == 0 && holes <= 3;
  return s.genus == 1 && holes <= 2;
}

}  // namespace

BoundedVerdict bounded_maximality(const CurveConfiguration& c, const std::vector<int>& system, SystemMode mode,
                                  const SearchBudget& budget, const std::vector<Edge>& edges,
                                  const std::vector<int>& avoid) {
  const int n = static_cast<int>(system.size());
  if (n == 0) throw PatternMismatch("empty system");
  std::vector<Edge> pattern;
  if (mode == SystemMode::Chain) pattern = path_edges(n);
  if (mode == SystemMode::Tree) {
    if (!is_tree(n, edges)) throw PatternMismatch("declared edges do not form a tree on the system");
    pattern = edges;
  }
  if (!recognize_pattern(c, system, pattern))
    throw PatternMismatch("system does not match the declared " + to_string(mode) + " pattern");

  std::vector<std::string> names;
  for (int v : system) names.push_back(c.curves[v]);
  std::vector<int> kept = system;
  for (int a : avoid)
    if (std::find(system.begin(), system.end(), a) != system.end()) throw PatternMismatch("a system curve is also avoided");
  kept.insert(kept.end(), avoid.begin(), avoid.end());
  const CurveConfiguration r = restrict_to(c, kept);
  std::vector<int> local, fence;
  for (const auto& nm : names) local.push_back(r.curve_index(nm));
  for (int a : avoid) fence.push_back(r.curve_index(c.curves[a]));

  BoundedVerdict out;
  if (mode == SystemMode::Abelian) {
    std::vector<int> all = local;
    all.insert(all.end(), fence.begin(), fence.end());
    const CutResult cut = cut_along(r, all);
    if (std::all_of(cut.components.begin(), cut.components.end(), saturated_piece)) {
      out.outcome = Outcome::CertifiedTrue;
      out.certificate = "every complementary piece is a pair of pants or a two-holed projective plane (punctures count as holes)";
      return out;
    }
    CurveSpec spec = CurveSpec::disjoint_from_all(r);
    spec.sidedness = Sidedness::TwoSided;
    if (auto w = find_curve(r, spec, budget, true, &out.stats)) {
      out.outcome = Outcome::CertifiedFalse;
      out.witness_curve = w->curves.back();
      out.witness = std::move(w);
    }
    return out;
  }

  std::vector<int> targets;
  if (mode == SystemMode::Chain) {
    targets.push_back(0);
    if (n > 1) targets.push_back(n - 1);
  } else {
    targets.resize(n);
    std::iota(targets.begin(), targets.end(), 0);
  }
  std::vector<int> open;
  for (int t : targets)
    if (once_crossing_options(r, local[t]).two_sided) open.push_back(t);
  if (open.empty()) {
    out.outcome = Outcome::CertifiedTrue;
    std::string who;
    for (int t : targets) who += (who.empty() ? "" : ", ") + names[t];
    out.certificate = "no two-sided curve can meet exactly one of " + who +
                      " once: along every arc the two sides lie in different complementary pieces or close up one-sided";
    return out;
  }
  for (int t : open) {
    CurveSpec spec = CurveSpec::disjoint_from_all(r);
    spec.exact[local[t]] = 1;
    spec.sidedness = Sidedness::TwoSided;
    if (auto w = find_curve(r, spec, budget, false, &out.stats)) {
      out.outcome = Outcome::CertifiedFalse;
      out.witness_curve = w->curves.back();
      out.witness = std::move(w);
      return out;
    }
  }
  return out;
}

}  // namespace crosscap
