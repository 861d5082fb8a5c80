#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "crosscap/characterize.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/ribbon.hpp"

namespace crosscap {

namespace {

// Pieces of c cut along `subset` that the curve v runs through.
std::set<int> pieces_met(const CurveConfiguration& c, const Restriction& cut, int v) {
  const RibbonMap m(c);
  std::vector<int> region_of(m.faces().size(), -1);
  for (std::size_t r = 0; r < c.regions.size(); ++r)
    for (int f : c.regions[r].faces) region_of[f] = static_cast<int>(r);
  std::set<int> out;
  for (int j = 0; j < m.arcs_of(v); ++j)
    for (int side : {1, -1}) {
      const int f = m.face_of(RibbonMap::flag(2 * m.arc_id(v, j), side));
      out.insert(cut.piece_of_region[region_of[f]]);
    }
  return out;
}

bool holds_reversing_triangle(const SurfaceInvariants& s) { return !s.orientable && s.genus >= 4; }

struct TriangleSearch {
  std::optional<CurveConfiguration> found;
  bool exhausted = true;
};

// Orientation-reversing triangle x, y, z missing every curve in `zero`,
// where x meets one of `meet` once. Other curves may be crossed freely.
TriangleSearch find_reversing_triangle(const CurveConfiguration& c, const std::vector<int>& meet,
                                       const std::vector<int>& zero, const SearchBudget& budget) {
  TriangleSearch out;
  const int n = static_cast<int>(c.curves.size());
  const std::size_t fanout = 12;
  auto spec_for = [&](const CurveConfiguration& cur) {
    CurveSpec s = CurveSpec::any(cur);
    for (int z : zero) s.exact[z] = 0;
    s.sidedness = Sidedness::TwoSided;
    return s;
  };
  for (int v : meet) {
    CurveSpec sx = spec_for(c);
    sx.exact[v] = 1;
    SearchStats st;
    auto xs = enumerate_candidate_curves(c, sx, budget, "tx", &st);
    if (st.truncated || xs.size() > fanout) out.exhausted = false;
    if (xs.size() > fanout) xs.resize(fanout);
    for (const auto& cx : xs) {
      CurveSpec sy = spec_for(cx);
      sy.exact[n] = 1;
      auto ys = enumerate_candidate_curves(cx, sy, budget, "ty", &st);
      if (st.truncated || ys.size() > fanout) out.exhausted = false;
      if (ys.size() > fanout) ys.resize(fanout);
      for (const auto& cy : ys) {
        CurveSpec sz = spec_for(cy);
        sz.exact[n] = 1;
        sz.exact[n + 1] = 1;
        std::optional<CurveConfiguration> hit;
        const SearchStats sst = for_each_candidate(cy, sz, budget, [&](const CurveConfiguration& e) {
          if (triangle_type(e, n, n + 1, n + 2) != TriangleType::OrientationReversing) return true;
          hit = e;
          return false;
        }, "tz");
        if (sst.truncated) out.exhausted = false;
        if (hit) {
          out.found = std::move(hit);
          return out;
        }
      }
    }
  }
  return out;
}

// Tree curves touching a piece of c cut along `cut_set` that can hold an
// orientation-reversing triangle.
std::vector<int> exposed_to_triangles(const CurveConfiguration& c, const std::vector<int>& cut_set,
                                      const std::vector<int>& candidates) {
  const Restriction cut = restrict_curves(c, curve_mask(c, cut_set));
  std::vector<int> out;
  for (int v : candidates)
    for (int p : pieces_met(c, cut, v))
      if (holds_reversing_triangle(cut.config.regions[p].type)) {
        out.push_back(v);
        break;
      }
  return out;
}

std::string joined(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
  return s;
}

}  // namespace

LemmaReport classify_via_tree(const CurveConfiguration& c, int curve, const TreeTemplate& t, const Embedding& embedding,
                              const SearchBudget& budget) {
  if (curve < 0 || curve >= static_cast<int>(c.curves.size())) throw UnknownCurve("curve index " + std::to_string(curve));
  if (t.family == TreeFamily::Daisy) throw PreconditionViolated("daisies are read by the small-genus classifier");
  const std::string cname = c.curves[curve];

  std::map<std::string, std::string> image;
  for (const auto& [v, cv] : embedding) {
    t.vertex(v);
    if (!image.emplace(v, cv).second) throw PreconditionViolated("vertex '" + v + "' embedded twice");
  }
  std::vector<std::string> tree_names;
  for (const auto& v : t.vertices) {
    auto it = image.find(v);
    if (it == image.end()) throw PreconditionViolated("vertex '" + v + "' has no curve");
    tree_names.push_back(it->second);
  }
  if (std::set<std::string>(tree_names.begin(), tree_names.end()).size() != tree_names.size())
    throw PreconditionViolated("two vertices share a curve");
  std::vector<int> tree_curves = curve_indices(c, tree_names);
  for (int v : tree_curves) {
    if (v == curve) throw PreconditionViolated("the curve itself is a tree vertex");
    if (c.shared_crossings(v, curve) != 0)
      throw PreconditionViolated("tree curve '" + c.curves[v] + "' meets '" + cname + "'");
  }
  if (!recognize_pattern(c, tree_curves, t.edges)) throw PreconditionViolated("the curves do not realize the template's tree");
  const CurveClass klass = classify_curve(c, curve);
  if (klass.sidedness != Sidedness::TwoSided || klass.is_trivial())
    throw PreconditionViolated("'" + cname + "' must be a nontrivial two-sided curve");

  const SurfaceInvariants& amb = c.ambient;
  const bool nt = t.family == TreeFamily::NT;
  if (nt) {
    if (amb.orientable || amb.genus != 2 * t.g + 2 || amb.punctures != t.k || amb.boundary != 0)
      throw PreconditionViolated("NT(g=" + std::to_string(t.g) + ",k=" + std::to_string(t.k) + ") lives on N_" +
                                 std::to_string(2 * t.g + 2) + "^" + std::to_string(t.k));
  } else {
    if (!klass.separating) throw PreconditionViolated("'" + cname + "' does not separate");
    if (amb.orientable ? (t.family != TreeFamily::OT || amb.genus < 2) : amb.genus < 5)
      throw PreconditionViolated("the colored-tree lemma needs a nonorientable ambient of genus >= 5, or OT on an orientable "
                                 "ambient of genus >= 2");
  }

  std::vector<int> keep = tree_curves;
  keep.push_back(curve);
  const CurveConfiguration w = restrict_to(c, keep);
  const int wc = w.curve_index(cname);
  const std::vector<int> wt = curve_indices(w, tree_names);

  LemmaReport rep;
  rep.lemma = nt ? "characteristic-tree" : "component-tree";
  rep.bound = budget.to_string();
  rep.facts["family"] = to_string(t.family);
  rep.facts["curve"] = cname;

  std::string bad;
  for (int v : wt)
    if (!admissible(w, v)) {
      bad = w.curves[v];
      break;
    }
  if (bad.empty())
    rep.add("vertices", Verdict::Holds, "every tree curve is two-sided and nonseparating with the right complement");
  else
    rep.add("vertices", Verdict::Fails, "tree curve '" + bad + "' is not admissible", bad);

  const int min_g = t.family == TreeFamily::TEven ? 1 : 2;
  if (t.g < min_g)
    rep.add("parameters", Verdict::Fails, to_string(t.family) + " needs g >= " + std::to_string(min_g), std::to_string(t.g));

  // (1) maximal chains of the tree are maximal in the surface
  const auto chains = t.maximal_chains.empty() ? t.leaf_paths() : t.maximal_chains;
  int certified = 0;
  for (const auto& ch : chains) {
    std::vector<int> idx;
    std::vector<std::string> names;
    for (int v : ch) {
      idx.push_back(wt[v]);
      names.push_back(tree_names[v]);
    }
    const BoundedVerdict bv = bounded_maximality(w, idx, SystemMode::Chain, budget, {}, {wc});
    if (bv.outcome == Outcome::CertifiedFalse) {
      rep.add("maximal-chains", Verdict::Fails, "chain " + joined(names) + " extends by '" + bv.witness_curve + "'",
              joined(names));
      rep.witness_config = bv.witness;
      break;
    }
    if (bv.outcome == Outcome::InconclusiveAtBound) {
      rep.add("maximal-chains", Verdict::BoundedInconclusive, "chain " + joined(names) + " neither extended nor certified");
      break;
    }
    ++certified;
  }
  if (certified == static_cast<int>(chains.size()))
    rep.add("maximal-chains", Verdict::Holds, std::to_string(certified) + " chains certified maximal");

  // (2) the tree carries a longest chain of the centralizer
  const CutResult sides = cut_along(w, {wc});
  Json side_types = Json::array();
  for (const auto& s : sides.components) side_types.push_back(to_literal(s));
  rep.facts["ground_truth"] = side_types;
  if (t.family != TreeFamily::OT) {
    int capacity = 0;
    for (const auto& s : sides.components) capacity = std::max(capacity, chain_capacity(s));
    const int longest = t.longest_chain();
    rep.facts["longest_tree_chain"] = longest;
    rep.facts["centralizer_chain_capacity"] = capacity;
    if (longest >= capacity)
      rep.add("longest-chain", Verdict::Holds,
              "tree chain of length " + std::to_string(longest) + ", centralizer carries at most " + std::to_string(capacity));
    else
      rep.add("longest-chain", Verdict::Fails,
              "the centralizer carries a chain of length " + std::to_string(capacity) + " > " + std::to_string(longest),
              std::to_string(capacity));
  }

  // (3) declared separating pairs
  int pairs_ok = 0;
  for (auto [a, b] : t.separating_pairs) {
    const std::string pa = tree_names[a], pb = tree_names[b];
    std::string why;
    try {
      if (!separating_pair_direct(w, wt[a], wt[b]).separates) why = "does not separate";
    } catch (const PreconditionViolated& e) {
      why = e.what();
    }
    if (!why.empty()) {
      rep.add("separating-pairs", Verdict::Fails, "pair " + pa + "," + pb + ": " + why, pa + "," + pb);
      break;
    }
    ++pairs_ok;
  }
  if (pairs_ok == static_cast<int>(t.separating_pairs.size()))
    rep.add("separating-pairs", Verdict::Holds, std::to_string(pairs_ok) + " declared pairs separate");

  // (4) triangles
  if (!amb.orientable && (t.family == TreeFamily::TOdd || t.family == TreeFamily::TEven)) {
    const Restriction side_cut = restrict_curves(w, curve_mask(w, {wc}));
    const int home = *pieces_met(w, side_cut, wt[0]).begin();
    const SurfaceInvariants home_type = side_cut.config.regions[home].type;
    std::vector<int> cut_set = wt;
    cut_set.push_back(wc);
    if (!holds_reversing_triangle(home_type)) {
      rep.add("reversing-triangle", Verdict::Fails,
              "the side " + describe(home_type) + " holding the tree has no orientation-reversing triangle", describe(home_type));
    } else if (exposed_to_triangles(w, cut_set, wt).empty()) {
      rep.add("reversing-triangle", Verdict::Holds,
              "the side " + describe(home_type) +
                  " holds orientation-reversing triangles and none fits between the tree curves, so each meets the tree");
    } else {
      const auto tri = find_reversing_triangle(w, wt, {wc}, budget);
      if (tri.found) {
        rep.add("reversing-triangle", Verdict::Holds, "orientation-reversing triangle tx,ty,tz misses the curve and meets the tree");
        rep.facts["triangle"] = serialize(*tri.found);
      } else {
        rep.add("reversing-triangle", Verdict::BoundedInconclusive, "no orientation-reversing triangle meeting the tree found");
      }
    }
  }
  if (!amb.orientable && t.family == TreeFamily::OT) {
    std::vector<int> cut_set, others;
    for (std::size_t v = 0; v < wt.size(); ++v) {
      if (std::find(t.colored.begin(), t.colored.end(), static_cast<int>(v)) != t.colored.end())
        cut_set.push_back(wt[v]);
      else
        others.push_back(wt[v]);
    }
    const std::vector<int> exposed = exposed_to_triangles(w, cut_set, others);
    if (exposed.empty()) {
      rep.add("colored-triangles", Verdict::Holds,
              "no orientation-reversing triangle misses the colored curves and meets the tree");
    } else {
      const auto tri = find_reversing_triangle(w, exposed, cut_set, budget);
      if (tri.found) {
        rep.add("colored-triangles", Verdict::Fails,
                "orientation-reversing triangle tx,ty,tz misses the colored curves but meets the tree", "tx,ty,tz");
        rep.witness_config = tri.found;
      } else {
        rep.add("colored-triangles", Verdict::BoundedInconclusive, "no violating triangle found, none excluded");
      }
    }
  }

  if (nt) {
    rep.facts["claim"] = "complement orientable";
    rep.facts["ground_truth_orientable"] = klass.characteristic;
  } else if (auto claim = claimed_component(t)) {
    rep.facts["claimed_component"] = to_literal(*claim);
    rep.facts["claim_matches"] =
        std::find(sides.components.begin(), sides.components.end(), *claim) != sides.components.end();
  }
  return rep;
}

EmbeddingSearch find_tree_embedding(const CurveConfiguration& c, int curve, const TreeTemplate& t,
                                    const SearchBudget& budget,
                                    const std::function<bool(const CurveConfiguration&)>& accept) {
  CurveConfiguration base = restrict_to(c, {curve});
  if (std::find(t.vertices.begin(), t.vertices.end(), base.curves[0]) != t.vertices.end())
    throw PreconditionViolated("curve name '" + base.curves[0] + "' clashes with a template vertex");
  const int n = static_cast<int>(t.vertices.size());
  std::vector<int> order{0}, parent(n, -2);
  parent[0] = -1;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (int w : t.neighbors(order[q]))
      if (parent[w] == -2) {
        parent[w] = order[q];
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != n) throw PreconditionViolated("template is not connected");

  const long limit = std::max(50L, budget.max_candidates / 100);
  EmbeddingSearch out;
  std::function<bool(const CurveConfiguration&, int)> rec = [&](const CurveConfiguration& cur, int level) {
    if (level == n) {
      if (accept(cur)) {
        out.found = cur;
        return true;
      }
      return false;
    }
    if (++out.nodes > limit) {
      out.complete = false;
      return true;
    }
    const int v = order[level];
    CurveSpec spec = CurveSpec::disjoint_from_all(cur);
    if (parent[v] >= 0) spec.exact[cur.curve_index(t.vertices[parent[v]])] = 1;
    spec.sidedness = Sidedness::TwoSided;
    const int idx = static_cast<int>(cur.curves.size());
    std::vector<CurveConfiguration> next;
    const SearchStats st = for_each_candidate(cur, spec, budget, [&](const CurveConfiguration& e) {
      if (admissible(e, idx)) next.push_back(e);
      return true;
    }, t.vertices[v]);
    if (st.truncated) out.complete = false;
    for (const auto& e : next)
      if (rec(e, level + 1)) return true;
    return false;
  };
  rec(base, 0);
  return out;
}

}  // namespace crosscap
