#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "doctest.h"

#include "crosscap/config.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/ribbon.hpp"
#include "crosscap/topology.hpp"

using namespace crosscap;

namespace {

const std::string kData = CROSSCAP_DATA_DIR;

CurveConfiguration golden(const std::string& name) { return load_config(kData + "/golden/" + name); }

// Orientability of the curve neighborhood by 2-colouring vertices: an arc
// with sign s forces flip(u) * flip(v) = s.
bool oracle_orientable(const CurveConfiguration& c, const std::vector<int>& subset) {
  const int nv = static_cast<int>(c.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (int i : subset) {
    const auto& vis = c.visits[i];
    const int n = static_cast<int>(vis.size());
    for (int j = 0; j < n; ++j) {
      const int u = vis[j];
      const int v = vis[(j + 1) % n];
      adj[u].emplace_back(v, c.signs[i][j]);
      adj[v].emplace_back(u, c.signs[i][j]);
    }
  }
  std::vector<int> flip(nv, 0);
  for (int s = 0; s < nv; ++s) {
    if (flip[s] != 0 || adj[s].empty()) continue;
    flip[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (auto [v, sign] : adj[u]) {
        const int want = flip[u] * sign;
        if (flip[v] == 0) {
          flip[v] = want;
          q.push(v);
        } else if (flip[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// Caps every face with its own one-holed torus: no face is a disc, so no
// bigon check fires. The assembled surface is not the declared one.
CurveConfiguration capped(const std::string& text) {
  std::string out = text;
  const auto faces = trace_faces(parse_config(text)).size();
  for (std::size_t f = 0; f < faces; ++f)
    out += "region R" + std::to_string(f) + " faces=f" + std::to_string(f) + " type=S1k0b1\n";
  return parse_config(out);
}

CurveConfiguration triangle(int signs_mask) {
  // arcs: a0 a1 b0 b1 c0 c1
  std::string text =
      "surface N4k0\ncurve a\ncurve b\ncurve c\ncross x a b\ncross y b c\ncross z c a\nseq a: x z\nseq b: x y\nseq c: y z\n";
  const char* names[] = {"a 0", "a 1", "b 0", "b 1", "c 0", "c 1"};
  for (int i = 0; i < 6; ++i)
    if (signs_mask >> i & 1) text += std::string("arc ") + names[i] + " sign=-\n";
  return capped(text);
}

const char* kChain3 = "surface S2k0\ncurve a\ncurve b\ncurve c\ncross x a b\ncross y b c\nseq a: x\nseq b: x y\nseq c: y\n";
const char* kChain5 =
    "surface S2k0\ncurve a\ncurve b\ncurve c\ncurve d\ncurve e\ncross x a b\ncross y b c\ncross z c d\ncross w d e\n"
    "seq a: x\nseq b: x y\nseq c: y z\nseq d: z w\nseq e: w\n";

}  // namespace

TEST_CASE("face counts of small maps") {
  CHECK(trace_faces(parse_config("surface N5k0\ncurve c\nbasept p c\nseq c: p\narc c 0 sign=+\n")).size() == 2);
  CHECK(trace_faces(parse_config("surface N5k0\ncurve c\nbasept p c\nseq c: p\narc c 0 sign=-\n")).size() == 1);
  CHECK(trace_faces(parse_config(kChain3)).size() == 2);
}

TEST_CASE("neighborhood invariants") {
  const auto one = parse_config("surface N5k0\ncurve c\nbasept p c\nseq c: p\n");
  CHECK(neighborhood_invariants(one, {0}) == orientable_surface(0, 0, 2));
  const auto mob = parse_config("surface N5k0\ncurve c\nbasept p c\nseq c: p\narc c 0 sign=-\n");
  CHECK(neighborhood_invariants(mob, {0}) == nonorientable_surface(1, 0, 1));
  CHECK(neighborhood_invariants(parse_config(kChain3), {0, 1, 2}) == orientable_surface(1, 0, 2));
  const auto c5 = parse_config(kChain5);
  CHECK(neighborhood_invariants(c5, {0, 1, 2, 3, 4}) == orientable_surface(2, 0, 2));
  CHECK(neighborhood_invariants(c5, {0, 1}) == orientable_surface(1, 0, 1));
}

TEST_CASE("triangle neighborhoods against the colouring oracle") {
  int reversing = 0;
  for (int mask = 0; mask < 64; ++mask) {
    CAPTURE(mask);
    const auto t = triangle(mask);
    const auto nb = neighborhood_invariants(t, {0, 1, 2});
    CHECK(euler_characteristic(nb) == -3);  // three crossings
    CHECK(nb.orientable == oracle_orientable(t, {0, 1, 2}));
    bool two_sided = true;
    for (int i = 0; i < 3; ++i) two_sided = two_sided && sign_product(t, i) > 0;
    if (!two_sided) {
      CHECK_THROWS_AS(triangle_type(t, 0, 1, 2), NotATriangle);
      continue;
    }
    const TriangleType tt = triangle_type(t, 0, 1, 2);
    CHECK((tt == TriangleType::OrientationReversing) == !nb.orientable);
    if (tt == TriangleType::OrientationReversing) {
      ++reversing;
      CHECK(nb == nonorientable_surface(4, 0, 1));
    }
  }
  CHECK(reversing > 0);
  // one negative arc makes a one-sided curve: N_{3,2}, not N_{4,1}
  CHECK(neighborhood_invariants(triangle(1), {0, 1, 2}) == nonorientable_surface(3, 0, 2));
  CHECK(triangle_type(triangle(0), 0, 1, 2) == TriangleType::OrientationPreserving);
  CHECK(triangle_type(triangle(3), 0, 1, 2) == TriangleType::OrientationReversing);
}

TEST_CASE("sidedness") {
  CHECK(sidedness(triangle(1), 0) == Sidedness::OneSided);
  CHECK(sidedness(triangle(3), 0) == Sidedness::TwoSided);
  CHECK(sign_product(triangle(1), 0) == -1);
}

TEST_CASE("intersection numbers and patterns") {
  const auto c3 = capped(kChain3);
  CHECK(intersection_number(c3, "a", "b") == 1);
  CHECK(intersection_number(c3, "a", "c") == 0);
  CHECK(recognize_pattern(c3, {0, 1, 2}, path_edges(3)));
  CHECK_FALSE(recognize_pattern(c3, {0, 2, 1}, path_edges(3)));
  const auto t = triangle(0);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(intersection_number(t, i, j) == 1);
  CHECK(recognize_pattern(t, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}));
  const auto fig = load_config(kData + "/fig1.crv");
  CHECK_FALSE(recognize_pattern(fig, {0, 2}, path_edges(2)));
}

TEST_CASE("curve classification") {
  const auto fig = load_config(kData + "/fig1.crv");
  const CurveClass k = classify_curve(fig, "c");
  CHECK(k.sidedness == Sidedness::TwoSided);
  CHECK(k.separating);
  CHECK_FALSE(k.characteristic);
  CHECK_FALSE(k.is_trivial());
  REQUIRE(k.components.size() == 2);
  CHECK(k.components[0] == orientable_surface(1, 0, 1));
  CHECK(k.components[1] == nonorientable_surface(3, 0, 1));

  const auto ch = parse_config(
      "surface N6k0\ncurve c\nbasept p c\nseq c: p\nregion A faces=f0,f1 type=S2k0b2 attach=f0:match,f1:reverse\n");
  const CurveClass kc = classify_curve(ch, "c");
  CHECK(kc.characteristic);
  CHECK_FALSE(kc.separating);
  CHECK(kc.components == std::vector<SurfaceInvariants>{orientable_surface(2, 0, 2)});
  CHECK(cut_along(ch, {0}).components == kc.components);
  CHECK_FALSE(admissible(ch, 0));

  const auto moeb = parse_config(
      "surface N5k0\ncurve c\nbasept p c\nseq c: p\nregion M faces=f0 type=N1k0b1\nregion R faces=f1 type=N4k0b1\n");
  const CurveClass km = classify_curve(moeb, "c");
  CHECK(km.trivial == Triviality::BoundsMoebius);
  CHECK(km.components[0] == nonorientable_surface(1, 0, 1));

  const auto one = parse_config("surface N5k0\ncurve c\nbasept p c\nseq c: p\narc c 0 sign=-\nregion R faces=f0 type=N4k0b1\n");
  const CurveClass ko = classify_curve(one, "c");
  CHECK(ko.sidedness == Sidedness::OneSided);
  CHECK_FALSE(ko.separating);

  // characteristic curves are two-sided with orientable complement
  for (const auto* name : {"tree_nt_n6.crv", "tree_todd_n9.crv", "sys.crv", "puncture_slide.crv"}) {
    const auto c = golden(name);
    for (int i = 0; i < static_cast<int>(c.curves.size()); ++i) {
      const CurveClass q = classify_curve(c, i);
      if (!q.characteristic) continue;
      CHECK(q.sidedness == Sidedness::TwoSided);
      for (const auto& s : q.components) CHECK(s.orientable);
    }
  }
}

TEST_CASE("cuts conserve chi") {
  for (const auto* name : {"tree_todd_n9.crv", "sys.crv", "daisy_n6.crv", "chain7_in_tree.crv", "tree_ot_n6.crv"}) {
    const auto c = golden(name);
    const int n = static_cast<int>(c.curves.size());
    for (int mask = 1; mask < (1 << std::min(n, 8)); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(i);
      const CutResult r = cut_along(c, subset);
      int total = r.neighborhood_chi;
      for (const auto& s : r.components) total += euler_characteristic(s);
      CAPTURE(std::string(name));
      CAPTURE(mask);
      CHECK(total == euler_characteristic(c.ambient));
      if (r.neighborhood_connected) CHECK(euler_characteristic(r.neighborhood) == r.neighborhood_chi);
    }
  }
}

TEST_CASE("separating pairs by cutting") {
  const auto t = golden("tree_todd_n9.crv");
  const int a5 = t.curve_index("a5"), a7 = t.curve_index("a7");
  const auto yes = separating_pair_direct(t, a5, a7);
  CHECK(yes.separates);
  CHECK(yes.components.size() == 2);
  CHECK(yes.components == cut_along(t, {a5, a7}).components);
  // every admissible disjoint pair agrees with a plain component count
  const int n = static_cast<int>(t.curves.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (intersection_number(t, a, b) != 0 || !admissible(t, a) || !admissible(t, b)) continue;
      CHECK(separating_pair_direct(t, a, b).separates == (cut_along(t, {a, b}).components.size() == 2));
    }
  CHECK_THROWS_AS(separating_pair_direct(t, t.curve_index("c"), a5), PreconditionViolated);
}

TEST_CASE("chains bounding discs") {
  const auto c9 = golden("chain9_full.crv");
  std::vector<int> all(9);
  std::iota(all.begin(), all.end(), 0);
  CHECK(chain_separates_disc(c9, all));
  const auto c7 = golden("chain7_in_tree.crv");
  std::vector<int> seven(7);
  std::iota(seven.begin(), seven.end(), 0);
  CHECK_FALSE(chain_separates_disc(c7, seven));
  CHECK_FALSE(chain_separates_disc(c9, {0}));
}
