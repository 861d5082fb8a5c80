#include <algorithm>
#include <filesystem>
#include <numeric>
#include <regex>
#include <string>

#include "doctest.h"

#include "crosscap/characterize.hpp"
#include "crosscap/config.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/topology.hpp"

using namespace crosscap;
namespace fs = std::filesystem;

namespace {

const std::string kData = CROSSCAP_DATA_DIR;

CurveConfiguration golden(const std::string& name) { return load_config(kData + "/golden/" + name); }
TreeTemplate shipped(const std::string& name) { return load_template(kData + "/templates/" + name); }

Embedding identity(const TreeTemplate& t) {
  Embedding e;
  for (const auto& v : t.vertices) e.emplace_back(v, v);
  return e;
}

const ConditionResult* condition(const LemmaReport& r, const std::string& id) {
  for (const auto& c : r.conditions)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("maximal abelian systems on the shipped surfaces") {
  const std::regex pattern(R"(abelian_g(\d+)_k(\d+)_s(\d+)\.crv)");
  int files = 0;
  for (const auto& e : fs::directory_iterator(kData + "/golden")) {
    std::smatch m;
    const std::string name = e.path().filename().string();
    if (!std::regex_match(name, m, pattern)) continue;
    ++files;
    const int g = std::stoi(m[1]), k = std::stoi(m[2]), s = std::stoi(m[3]);
    CAPTURE(name);
    const auto c = load_config(e.path().string());
    std::vector<int> sys(c.curves.size());
    std::iota(sys.begin(), sys.end(), 0);
    const LemmaReport r = verify_max_abelian_system(c, sys, s);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(static_cast<int>(sys.size()) == (3 * g - 6 - 2 * s) / 2 + k);
    // count pieces straight from the cut
    int pants = 0, projective = 0;
    for (const auto& p : cut_along(c, sys).components) {
      if (p.orientable && p.genus == 0 && p.boundary + p.punctures == 3) ++pants;
      else if (!p.orientable && p.genus == 1 && p.boundary + p.punctures == 2) ++projective;
      else FAIL("unexpected piece " << describe(p));
    }
    CHECK(pants == g + k - 2 * s - 2);
    CHECK(projective == 2 * s);
    CHECK(3 * pants + 2 * projective == 3 * g - 6 - 2 * s + 3 * k);
    CHECK(-pants - projective == 2 - g - k);
    CHECK(r.facts["pants"] == pants);
    CHECK(r.facts["projective_pairs"] == projective);
  }
  CHECK(files == 15);
}

TEST_CASE("abelian system failures") {
  const auto sys = golden("sys.crv");
  std::vector<int> all(sys.curves.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(verify_max_abelian_system(sys, all, 1).verdict == Verdict::Holds);
  // wrong s changes the expected rank
  CHECK(verify_max_abelian_system(sys, all, 0).verdict == Verdict::Fails);
  // a separating member is named as the witness
  const auto ot = golden("tree_ot_n6.crv");
  const LemmaReport bad = verify_max_abelian_system(ot, {ot.curve_index("c"), ot.curve_index("a1")}, 1);
  CHECK(bad.verdict == Verdict::Fails);
  CHECK(bad.witness == "c");
}

TEST_CASE("certificate kinds") {
  const auto any = nonorientable_surface(4, 0, 1);
  CHECK(certificate_kind(orientable_surface(1, 0, 1), any).kind == CertificateType::ChainSquare6);
  CHECK(certificate_kind(orientable_surface(1, 1, 1), any).kind == CertificateType::ChainTriple4);
  CHECK(certificate_kind(nonorientable_surface(1, 1, 1), any).kind == CertificateType::PunctureSlideSquare);
  CHECK(certificate_kind(nonorientable_surface(3, 2, 1), nonorientable_surface(3, 0, 1)).kind == CertificateType::Primitive);

  CHECK(certificate_kind(load_config(kData + "/fig1.crv"), 2).kind == CertificateType::ChainSquare6);
  const auto slide = golden("puncture_slide.crv");
  CHECK(certificate_kind(slide, slide.curve_index("c")).kind == CertificateType::PunctureSlideSquare);
  const auto daisy = golden("daisy_n6.crv");
  CHECK(certificate_kind(daisy, daisy.curve_index("c")).kind == CertificateType::Primitive);
  CHECK_THROWS_AS(certificate_kind(golden("sys.crv"), 0), NotASeparation);
}

TEST_CASE("certificate kind is symmetric") {
  std::vector<SurfaceInvariants> pieces;
  for (int k = 0; k <= 2; ++k) {
    for (int g = 0; g <= 3; ++g) pieces.push_back(orientable_surface(g, k, 1));
    for (int g = 1; g <= 5; ++g) pieces.push_back(nonorientable_surface(g, k, 1));
  }
  for (const auto& a : pieces)
    for (const auto& b : pieces) {
      const auto ab = certificate_kind(a, b), ba = certificate_kind(b, a);
      CHECK(ab.kind == ba.kind);
      CHECK(ab.separated_piece == ba.separated_piece);
    }
}

TEST_CASE("relation facts") {
  CHECK(relation_fact(orientable_surface(1, 0, 1)).relation.find("^6") != std::string::npos);
  CHECK(relation_fact(orientable_surface(1, 1, 1)).relation.find("^4") != std::string::npos);
  CHECK(relation_fact(nonorientable_surface(1, 1, 1)).relation.find("v^2") != std::string::npos);
  CHECK_THROWS_AS(relation_fact(orientable_surface(2, 0, 1)), NoFact);
}

TEST_CASE("separating pairs through centralizers") {
  const auto t = golden("tree_todd_n9.crv");
  const SearchBudget b;
  const auto yes = separating_pair_algebraic(t, t.curve_index("a5"), t.curve_index("a7"), b);
  CHECK(yes.verdict == Verdict::Holds);
  const auto no = separating_pair_algebraic(t, t.curve_index("a1"), t.curve_index("a5"), b);
  CHECK(no.verdict == Verdict::Fails);
  CHECK_FALSE(no.witness.empty());
  // agreement with the cut on every admissible disjoint pair of the tree
  const int n = static_cast<int>(t.curves.size());
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c) {
      if (intersection_number(t, a, c) != 0 || !admissible(t, a) || !admissible(t, c)) continue;
      const auto r = separating_pair_algebraic(t, a, c, b);
      if (r.verdict == Verdict::BoundedInconclusive) continue;
      CAPTURE(t.curves[a] + "," + t.curves[c]);
      CHECK((r.verdict == Verdict::Holds) == separating_pair_direct(t, a, c).separates);
    }
}

TEST_CASE("s from the two sides") {
  CHECK(separating_pair_s({nonorientable_surface(2, 0, 2), nonorientable_surface(4, 0, 2)}) == 2);
  CHECK(separating_pair_s({orientable_surface(1, 0, 2), nonorientable_surface(4, 0, 2)}) == 1);
  CHECK(separating_pair_s({nonorientable_surface(3, 0, 2), nonorientable_surface(2, 0, 2)}) == 1);
}

TEST_CASE("shipped templates") {
  for (const auto& e : fs::directory_iterator(kData + "/templates")) {
    CAPTURE(e.path().string());
    const auto t = load_template(e.path().string());
    CHECK(validate_template(t).verdict == Verdict::Holds);
    CHECK(serialize_template(parse_template(serialize_template(t))) == serialize_template(t));
  }
  const auto t = standard_template(TreeFamily::TOdd, 2, 1);
  CHECK(t.vertices.size() == 8);
  CHECK(validate_template(t).verdict == Verdict::Holds);
}

TEST_CASE("template vertex counts") {
  for (int g = 2; g <= 4; ++g)
    for (int k = 0; k <= 3; ++k) {
      CAPTURE(g);
      CAPTURE(k);
      const auto odd = standard_template(TreeFamily::TOdd, g, k);
      const auto even = standard_template(TreeFamily::TEven, g, k);
      const auto nt = standard_template(TreeFamily::NT, g, k);
      const auto ot = standard_template(TreeFamily::OT, g, k);
      CHECK(static_cast<int>(odd.vertices.size()) == 4 * g + k - 1);
      CHECK(static_cast<int>(even.vertices.size()) == 4 * g + k);
      CHECK(static_cast<int>(nt.vertices.size()) == 4 * g + k - 1);
      CHECK(static_cast<int>(ot.vertices.size()) == 4 * g + k - 2);
      for (const auto* t : {&odd, &even, &nt, &ot}) {
        CHECK(validate_template(*t).verdict == Verdict::Holds);
        CHECK(t->edges.size() + 1 == t->vertices.size());
      }
      // NT without a0: a tree on 4g+k-2 curves, chi = -(edges)
      CHECK(-static_cast<int>(nt.vertices.size() - 2) == -(4 * g + k - 3));
      CHECK(nt.vertex("a0") >= 0);
      CHECK(std::find(ot.colored.begin(), ot.colored.end(), ot.vertex("a" + std::to_string(4 * g - 3))) != ot.colored.end());
      CHECK(std::find(ot.colored.begin(), ot.colored.end(), ot.vertex("a" + std::to_string(4 * g - 1))) != ot.colored.end());
    }
  CHECK(daisy_template(4).vertices.size() == 5);
  CHECK_THROWS_AS(standard_template(TreeFamily::OT, 1, 2), PreconditionViolated);
}

TEST_CASE("broken templates fail validation") {
  auto t = standard_template(TreeFamily::TOdd, 2, 0);
  t.colored.clear();
  const auto r = validate_template(t);
  CHECK(r.verdict == Verdict::Fails);
  REQUIRE(condition(r, "colored"));
  CHECK(condition(r, "colored")->verdict == Verdict::Fails);
  auto u = standard_template(TreeFamily::TEven, 2, 0);
  u.edges.pop_back();
  CHECK(validate_template(u).verdict == Verdict::Fails);
}

TEST_CASE("chain capacity") {
  CHECK(chain_capacity(orientable_surface(2, 0, 1)) == 5);
  CHECK(chain_capacity(orientable_surface(1, 3, 1)) == 3);
  CHECK(chain_capacity(nonorientable_surface(5, 0, 1)) == 5);
  CHECK(chain_capacity(nonorientable_surface(3, 0, 1)) == 3);
  CHECK(chain_capacity(nonorientable_surface(2, 0, 1)) == 1);
  CHECK(chain_capacity(orientable_surface(0, 2, 1)) == 1);
}

TEST_CASE("tree lemma on placed trees") {
  const SearchBudget b;
  struct Case {
    const char* config;
    const char* tree;
    Verdict verdict;
  };
  for (const Case& k : {Case{"tree_todd_n9.crv", "t_odd_g2_k0.tree", Verdict::Holds},
                        Case{"tree_teven_n6.crv", "t_even_g1_k0.tree", Verdict::Holds},
                        Case{"tree_nt_n6.crv", "nt_g2_k0.tree", Verdict::Holds},
                        Case{"tree_ot_n6.crv", "ot_g2_k0.tree", Verdict::Holds},
                        Case{"tree_ot_n9.crv", "ot_g2_k0.tree", Verdict::Holds}}) {
    CAPTURE(std::string(k.config));
    const auto c = golden(k.config);
    const auto t = shipped(k.tree);
    const LemmaReport r = classify_via_tree(c, c.curve_index("c"), t, identity(t), b);
    CHECK(r.verdict == k.verdict);
    // the claim is one of the cut components
    const auto claim = claimed_component(t);
    if (claim) {
      CHECK(r.facts["claim_matches"] == true);
      const auto parts = classify_curve(c, "c").components;
      CHECK(std::find(parts.begin(), parts.end(), *claim) != parts.end());
    }
  }
  const auto nt = golden("tree_nt_n6.crv");
  const auto r = classify_via_tree(nt, nt.curve_index("c"), shipped("nt_g2_k0.tree"), identity(shipped("nt_g2_k0.tree")), b);
  CHECK(r.facts["ground_truth_orientable"] == true);
  CHECK(classify_curve(nt, "c").characteristic);
}

TEST_CASE("tree lemma: odd tree on N9 claims the N_{5,1} side") {
  const auto c = golden("tree_todd_n9.crv");
  const auto t = shipped("t_odd_g2_k0.tree");
  const auto claim = claimed_component(t);
  REQUIRE(claim);
  CHECK(*claim == nonorientable_surface(5, 0, 1));
}

TEST_CASE("tree lemma rejects bad input") {
  const auto c = golden("tree_todd_n9.crv");
  const auto t = shipped("t_odd_g2_k0.tree");
  Embedding wrong = identity(t);
  wrong[0].second = "nope";
  CHECK_THROWS_AS(classify_via_tree(c, c.curve_index("c"), t, wrong, SearchBudget{}), UnknownCurve);
  CHECK_THROWS_AS(classify_via_tree(c, c.curve_index("c"), daisy_template(3), {}, SearchBudget{}), PreconditionViolated);
}

TEST_CASE("tree lemma: colored triangle violation" * doctest::timeout(900)) {
  const auto c = golden("tree_ot_violation_n7.crv");
  const auto t = shipped("ot_g2_k0.tree");
  const LemmaReport r = classify_via_tree(c, c.curve_index("c"), t, identity(t), SearchBudget{});
  CHECK(r.verdict == Verdict::Fails);
  CHECK(r.witness == "tx,ty,tz");
  REQUIRE(r.witness_config);
  const auto& w = *r.witness_config;
  const int x = w.curve_index("tx"), y = w.curve_index("ty"), z = w.curve_index("tz");
  CHECK(triangle_type(w, x, y, z) == TriangleType::OrientationReversing);
  CHECK(neighborhood_invariants(w, {x, y, z}) == nonorientable_surface(4, 0, 1));
  // misses the colored curves, meets some other tree curve
  bool meets_tree = false;
  for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
    const int cv = w.curve_index(t.vertices[v]);
    const bool colored = std::find(t.colored.begin(), t.colored.end(), v) != t.colored.end();
    for (int q : {x, y, z}) {
      if (colored) CHECK(intersection_number(w, q, cv) == 0);
      else meets_tree = meets_tree || intersection_number(w, q, cv) > 0;
    }
  }
  CHECK(meets_tree);
  CHECK(r.facts["claim_matches"] == false);
}

TEST_CASE("small genus classification") {
  const SearchBudget b;
  for (const auto* name : {"daisy_n6.crv", "small_genus_torus.crv", "small_genus_klein.crv"}) {
    CAPTURE(std::string(name));
    const auto c = golden(name);
    const LemmaReport r = small_genus_classify(c, c.curve_index("c"), b);
    CHECK(r.verdict == Verdict::Holds);
    const auto truth = classify_curve(c, "c").components;
    for (const auto& side : r.facts["sides"]) {
      CHECK(side["inferred"] == side["ground_truth"]);
      const auto t = parse_surface_literal(side["ground_truth"].get<std::string>());
      CHECK(std::find(truth.begin(), truth.end(), t) != truth.end());
      // on N6 each side is N_{3,1} with two fewer punctures than petals
      if (c.ambient.genus == 6) CHECK(side["daisy_rank"].get<int>() - 2 == t.punctures);
    }
  }
  const auto t = golden("tree_todd_n9.crv");
  CHECK_THROWS_AS(small_genus_classify(t, t.curve_index("c"), b), PreconditionViolated);
}
