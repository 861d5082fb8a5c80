#include <atomic>
#include <numeric>
#include <string>

#include "doctest.h"

#include "crosscap/config.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/search.hpp"
#include "crosscap/topology.hpp"

using namespace crosscap;

namespace {

const std::string kData = CROSSCAP_DATA_DIR;

CurveConfiguration golden(const std::string& name) { return load_config(kData + "/golden/" + name); }

// Candidates meeting `curve` once and missing the rest, by sidedness.
// Copies of existing curves count.
std::pair<bool, bool> searched_options(const CurveConfiguration& c, int curve, const SearchBudget& b) {
  bool two = false, one = false;
  CurveSpec spec = CurveSpec::disjoint_from_all(c);
  spec.exact[curve] = 1;
  spec.distinct = false;
  for_each_candidate(c, spec, b, [&](const CurveConfiguration& e) {
    const int w = static_cast<int>(e.curves.size()) - 1;
    (sidedness(e, w) == Sidedness::TwoSided ? two : one) = true;
    return !(two && one);
  });
  return {two, one};
}

}  // namespace

TEST_CASE("budget parsing") {
  const auto b = SearchBudget::parse("max_arcs=4,max_crossings=5,max_candidates=1000");
  CHECK(b.max_arcs == 4);
  CHECK(b.max_crossings == 5);
  CHECK(b.max_candidates == 1000);
  const auto partial = SearchBudget::parse("max_arcs=3");
  CHECK(partial.max_arcs == 3);
  CHECK(partial.max_candidates == SearchBudget{}.max_candidates);
  CHECK(SearchBudget::parse(b.to_string()).max_candidates == 1000);
  CHECK_THROWS(SearchBudget::parse("max_arcs=x"));
  CHECK_THROWS(SearchBudget::parse("speed=3"));
}

TEST_CASE("once-crossing options match exhaustive search") {
  SearchBudget b;
  b.max_arcs = 4;
  int compared = 0;
  for (const auto* name : {"puncture_slide.crv", "small_genus_torus.crv", "small_genus_klein.crv", "tree_teven_n6.crv"}) {
    const auto c = golden(name);
    for (int i = 0; i < static_cast<int>(c.curves.size()); ++i) {
      CAPTURE(std::string(name));
      CAPTURE(c.curves[i]);
      const CrossingOptions o = once_crossing_options(c, i);
      const auto [two, one] = searched_options(c, i, b);
      CHECK(o.two_sided == two);
      CHECK(o.one_sided == one);
      ++compared;
    }
  }
  const auto fig = load_config(kData + "/fig1.crv");
  for (int i = 0; i < 3; ++i) {
    const CrossingOptions o = once_crossing_options(fig, i);
    const auto [two, one] = searched_options(fig, i, b);
    CHECK(o.two_sided == two);
    CHECK(o.one_sided == one);
  }
  CHECK(compared > 5);
}

TEST_CASE("candidate curves") {
  // a nonseparating pair: some two-sided b meets a1 once and misses a2
  const auto t = golden("tree_todd_n9.crv");
  const int a1 = t.curve_index("a1"), a5 = t.curve_index("a5");
  REQUIRE_FALSE(separating_pair_direct(t, a1, a5).separates);
  CurveSpec spec = CurveSpec::any(t);
  spec.exact[a1] = 1;
  spec.exact[a5] = 0;
  spec.sidedness = Sidedness::TwoSided;
  SearchBudget small;
  small.max_arcs = 4;
  const auto found = find_curve(t, spec, small, false);
  REQUIRE(found);
  const int w = static_cast<int>(found->curves.size()) - 1;
  CHECK(intersection_number(*found, w, found->curve_index("a1")) == 1);
  CHECK(intersection_number(*found, w, found->curve_index("a5")) == 0);
  CHECK(validate_config(*found).empty());

  // nothing nontrivial lives in a pair of pants
  const auto pants = golden("sys.crv");
  CurveSpec inside = CurveSpec::disjoint_from_all(pants);
  inside.allowed_regions.assign(pants.regions.size(), 0);
  for (std::size_t r = 0; r < pants.regions.size(); ++r)
    if (pants.regions[r].type == orientable_surface(0, 0, 3)) inside.allowed_regions[r] = 1;
  CHECK(enumerate_candidate_curves(pants, inside, SearchBudget{}).empty());
}

TEST_CASE("small corpora") {
  SearchBudget b;
  b.max_crossings = 0;
  const auto n1 = enumerate_configurations(nonorientable_surface(1), 1, b);
  REQUIRE(n1.size() == 1);
  CHECK(sidedness(n1[0], 0) == Sidedness::OneSided);
  CHECK(enumerate_configurations(nonorientable_surface(5), 0, b).size() == 1);
  CHECK(enumerate_configurations(orientable_surface(2), 0, b).size() == 1);

  // disjoint pairs on N5 include separating and nonseparating pairs
  const auto pairs = enumerate_configurations(nonorientable_surface(5), 2, b);
  bool sep = false, nonsep = false;
  for (const auto& c : pairs) {
    CHECK(validate_config(c).empty());
    if (!admissible(c, 0) || !admissible(c, 1)) continue;
    (separating_pair_direct(c, 0, 1).separates ? sep : nonsep) = true;
  }
  CHECK(sep);
  CHECK(nonsep);
}

TEST_CASE("enumeration does not depend on the worker count") {
  SearchBudget b;
  b.max_crossings = 2;
  const auto amb = nonorientable_surface(5);
  const auto one = corpus_index(build_corpus(amb, 2, b, 1));
  const auto four = corpus_index(build_corpus(amb, 2, b, 4));
  CHECK(one == four);
  CHECK(!one.empty());
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(500);
  parallel_for(500, 4, [&](int i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("chain maximality") {
  const auto c7 = golden("chain7_in_tree.crv");
  std::vector<int> chain;
  for (int i = 1; i <= 7; ++i) chain.push_back(c7.curve_index("c" + std::to_string(i)));
  const auto v = bounded_maximality(c7, chain, SystemMode::Chain, SearchBudget{});
  REQUIRE(v.outcome == Outcome::CertifiedFalse);
  REQUIRE(v.witness);
  // the witness prolongs the chain at one end
  const int w = v.witness->curve_index(v.witness_curve);
  std::vector<int> longer = chain, other = chain;
  longer.push_back(w);
  other.insert(other.begin(), w);
  CHECK((recognize_pattern(*v.witness, longer, path_edges(8)) || recognize_pattern(*v.witness, other, path_edges(8))));

  const auto c9 = golden("chain9_full.crv");
  std::vector<int> nine;
  for (int i = 1; i <= 9; ++i) nine.push_back(c9.curve_index("c" + std::to_string(i)));
  const auto full = bounded_maximality(c9, nine, SystemMode::Chain, SearchBudget{});
  CHECK(full.outcome == Outcome::CertifiedTrue);
  CHECK_FALSE(full.certificate.empty());

  const auto fig = load_config(kData + "/fig1.crv");
  // a curve crossing b once fits in a single arc
  SearchBudget one_arc;
  one_arc.max_arcs = 1;
  CHECK(bounded_maximality(fig, {0, 1}, SystemMode::Chain, one_arc).outcome == Outcome::CertifiedFalse);
  SearchBudget tiny;
  tiny.max_candidates = 0;
  CHECK(bounded_maximality(fig, {0, 1}, SystemMode::Chain, tiny).outcome == Outcome::InconclusiveAtBound);
  CHECK_THROWS_AS(bounded_maximality(fig, {0, 2}, SystemMode::Chain, tiny), PatternMismatch);
}

TEST_CASE("abelian maximality") {
  const auto sys = golden("sys.crv");
  std::vector<int> all(sys.curves.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(bounded_maximality(sys, all, SystemMode::Abelian, SearchBudget{}).outcome == Outcome::CertifiedTrue);
  const auto drop = std::vector<int>(all.begin(), all.end() - 1);
  CHECK(bounded_maximality(sys, drop, SystemMode::Abelian, SearchBudget{}).outcome == Outcome::CertifiedFalse);
}
