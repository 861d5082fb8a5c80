#include <algorithm>
#include <functional>

#include "crosscap/characterize.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/ribbon.hpp"

namespace crosscap {

namespace {

// Regions of cur lying on the side of `sep` that holds `inside`.
std::vector<char> side_regions(const CurveConfiguration& cur, int sep, int inside) {
  const Restriction cut = restrict_curves(cur, curve_mask(cur, {sep}));
  const RibbonMap m(cur);
  std::vector<int> region_of(m.faces().size(), -1);
  for (std::size_t r = 0; r < cur.regions.size(); ++r)
    for (int f : cur.regions[r].faces) region_of[f] = static_cast<int>(r);
  const int piece = cut.piece_of_region[region_of[m.face_of(RibbonMap::flag(2 * m.arc_id(inside, 0), 1))]];
  std::vector<char> out(cur.regions.size(), 0);
  for (std::size_t r = 0; r < cur.regions.size(); ++r) out[r] = cut.piece_of_region[r] == piece;
  return out;
}

bool saturated(const CurveConfiguration& cur, const std::vector<char>& side) {
  for (std::size_t r = 0; r < cur.regions.size(); ++r)
    if (side[r] && euler_characteristic(cur.regions[r].type) != 0) return false;
  return true;
}

struct Daisy {
  int petals = 0;
  bool certified = false;
  std::optional<CurveConfiguration> config;
};

// Largest star found on one side: a center with pairwise disjoint petals
// each meeting it once. Certified when the side is cut into annuli,
// punctured discs and Moebius bands.
Daisy grow_daisy(const CurveConfiguration& w, int sep, int region, const SearchBudget& budget) {
  Daisy best;
  const long limit = std::max(40L, budget.max_candidates / 500);
  long nodes = 0;
  CurveSpec cs = CurveSpec::disjoint_from_all(w);
  cs.sidedness = Sidedness::TwoSided;
  cs.allowed_regions.assign(w.regions.size(), 0);
  cs.allowed_regions[region] = 1;
  const auto centers = enumerate_candidate_curves(w, cs, budget, "d0");
  const int center = static_cast<int>(w.curves.size());
  std::function<bool(const CurveConfiguration&, int)> grow = [&](const CurveConfiguration& cur, int petals) {
    const auto side = side_regions(cur, sep, center);
    if (petals > best.petals || !best.config) {
      best = {petals, false, cur};
    }
    if (saturated(cur, side)) {
      best = {petals, true, cur};
      return true;
    }
    if (++nodes > limit) return true;
    CurveSpec ps = CurveSpec::disjoint_from_all(cur);
    ps.exact[center] = 1;
    ps.sidedness = Sidedness::TwoSided;
    ps.allowed_regions = side;
    for (const auto& e : enumerate_candidate_curves(cur, ps, budget, "d" + std::to_string(petals + 1)))
      if (grow(e, petals + 1)) return true;
    return false;
  };
  for (const auto& c0 : centers)
    if (grow(c0, 0)) break;
  return best;
}

bool chain_of_two(const CurveConfiguration& w, int region, const SearchBudget& budget) {
  CurveSpec xs = CurveSpec::disjoint_from_all(w);
  xs.sidedness = Sidedness::TwoSided;
  xs.allowed_regions.assign(w.regions.size(), 0);
  xs.allowed_regions[region] = 1;
  const int x = static_cast<int>(w.curves.size());
  bool found = false;
  for_each_candidate(w, xs, budget, [&](const CurveConfiguration& cx) {
    CurveSpec ys = CurveSpec::disjoint_from_all(cx);
    ys.exact[x] = 1;
    ys.sidedness = Sidedness::TwoSided;
    ys.allowed_regions = side_regions(cx, 0, x);
    found = find_curve(cx, ys, budget, false, nullptr, "y").has_value();
    return !found;
  }, "x");
  return found;
}

bool has_one_sided(const CurveConfiguration& w, int region, const SearchBudget& budget) {
  CurveSpec s = CurveSpec::disjoint_from_all(w);
  s.sidedness = Sidedness::OneSided;
  s.allowed_regions.assign(w.regions.size(), 0);
  s.allowed_regions[region] = 1;
  return find_curve(w, s, budget, false).has_value();
}

}  // namespace

LemmaReport small_genus_classify(const CurveConfiguration& c, int curve, const SearchBudget& budget) {
  if (curve < 0 || curve >= static_cast<int>(c.curves.size())) throw UnknownCurve("curve index " + std::to_string(curve));
  const SurfaceInvariants& amb = c.ambient;
  if (amb.orientable || (amb.genus != 5 && amb.genus != 6) || amb.boundary != 0)
    throw PreconditionViolated("ambient must be a closed nonorientable surface of genus 5 or 6");
  const CurveClass klass = classify_curve(c, curve);
  if (klass.sidedness != Sidedness::TwoSided || !klass.separating || klass.is_trivial())
    throw PreconditionViolated("'" + c.curves[curve] + "' must be a nontrivial separating curve");

  const CurveConfiguration w = restrict_to(c, {curve});
  if (w.regions.size() != 2) throw PreconditionViolated("'" + c.curves[curve] + "' does not cut the surface in two");
  std::vector<SurfaceInvariants> truth{w.regions[0].type, w.regions[1].type};
  if (tree_lemma_applicable(truth))
    throw PreconditionViolated("a side of '" + c.curves[curve] + "' carries a colored tree; use the tree lemma");

  LemmaReport rep;
  rep.lemma = "small-genus";
  rep.bound = budget.to_string();
  rep.facts["curve"] = c.curves[curve];
  rep.facts["genus"] = amb.genus;

  std::vector<Daisy> daisies;
  std::vector<int> chain2(2, -1);  // 1 found, 0 excluded, -1 unknown
  for (int s = 0; s < 2; ++s) {
    daisies.push_back(grow_daisy(w, 0, s, budget));
    if (amb.genus == 5) {
      if (chain_of_two(w, s, budget))
        chain2[s] = 1;
      else if (chain_capacity(truth[s]) < 2)
        chain2[s] = 0;
      // a petal and its center would form a chain of two
      if (chain2[s] == 0) daisies[s] = {0, true, std::nullopt};
    }
  }

  std::vector<std::optional<SurfaceInvariants>> inferred(2);
  auto from_daisy = [&](int s, bool orientable, int genus, int offset) {
    if (!daisies[s].certified) return;
    inferred[s] = orientable ? orientable_surface(genus, daisies[s].petals - offset, 1)
                             : nonorientable_surface(genus, daisies[s].petals - offset, 1);
  };
  if (amb.genus == 6) {
    from_daisy(0, false, 3, 2);
    from_daisy(1, false, 3, 2);
  } else {
    int n3 = -1;
    if (chain2[0] == 0 && chain2[1] == 1) n3 = 1;
    if (chain2[1] == 0 && chain2[0] == 1) n3 = 0;
    if (chain2[0] == 1 && chain2[1] == 1) {
      const bool o0 = has_one_sided(w, 0, budget), o1 = has_one_sided(w, 1, budget);
      if (o0 != o1) n3 = o0 ? 0 : 1;
    }
    if (n3 >= 0) {
      const int other = 1 - n3;
      from_daisy(n3, false, 3, 2);
      if (chain2[other] == 1) {
        from_daisy(other, true, 1, 1);
      } else if (inferred[n3]) {
        inferred[other] = nonorientable_surface(2, amb.punctures - inferred[n3]->punctures, 1);
      }
    }
  }

  Json sides = Json::array();
  bool all_known = true, all_match = true;
  for (int s = 0; s < 2; ++s) {
    Json j;
    j["region"] = w.regions[s].name;
    j["daisy_rank"] = daisies[s].petals;
    j["daisy_certified"] = daisies[s].certified;
    if (amb.genus == 5) j["chain_of_two"] = chain2[s] == 1 ? Json("found") : chain2[s] == 0 ? Json("excluded") : Json("unknown");
    j["inferred"] = inferred[s] ? Json(to_literal(*inferred[s])) : Json(nullptr);
    j["inferred_punctures"] = inferred[s] ? Json(inferred[s]->punctures) : Json(nullptr);
    j["ground_truth"] = to_literal(truth[s]);
    sides.push_back(j);
    if (!inferred[s])
      all_known = false;
    else if (*inferred[s] != truth[s])
      all_match = false;
  }
  rep.facts["sides"] = sides;

  for (int s = 0; s < 2; ++s) {
    const std::string id = "daisy-" + std::to_string(s + 1);
    if (daisies[s].certified)
      rep.add(id, Verdict::Holds, "maximal daisy with " + std::to_string(daisies[s].petals) + " petals");
    else
      rep.add(id, Verdict::BoundedInconclusive,
              "daisy with " + std::to_string(daisies[s].petals) + " petals, maximality not reached within the bound");
  }
  if (amb.genus == 5) {
    if (chain2[0] < 0 || chain2[1] < 0)
      rep.add("chain-of-two", Verdict::BoundedInconclusive, "a side neither carries nor excludes a chain of length two");
    else
      rep.add("chain-of-two", Verdict::Holds,
              std::to_string(chain2[0] + chain2[1]) + " side(s) carry a chain of length two");
  }
  if (!all_known)
    rep.add("components", Verdict::BoundedInconclusive, "a side was not identified within the bound");
  else if (all_match)
    rep.add("components", Verdict::Holds, "inferred sides match the cut: " + describe(truth[0]) + " | " + describe(truth[1]));
  else
    rep.add("components", Verdict::Fails, "inferred sides differ from the cut");
  return rep;
}

}  // namespace crosscap
