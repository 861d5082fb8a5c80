#include <filesystem>
#include <string>

#include "doctest.h"

#include "crosscap/config.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/search.hpp"
#include "crosscap/topology.hpp"
#include "crosscap/transform.hpp"

using namespace crosscap;
namespace fs = std::filesystem;

namespace {

const std::string kData = CROSSCAP_DATA_DIR;

const char* kLoop = R"(surface N5k0
curve c
basept p c
seq c: p
arc c 0 sign=+
region A faces=f0 type=N2k0b1
region B faces=f1 type=N3k0b1
)";

bool has_kind(const std::vector<Violation>& vs, const std::string& kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

std::vector<fs::path> shipped_configs() {
  std::vector<fs::path> out;
  for (const auto& dir : {fs::path(kData), fs::path(kData) / "golden"})
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".crv") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("minimal crossing-free file") {
  const auto c = parse_config(kLoop);
  REQUIRE(c.curves.size() == 1);
  CHECK(c.crossing_count() == 0);
  CHECK(validate_config(c).empty());
  CHECK(sidedness(c, 0) == Sidedness::TwoSided);
  CHECK(assemble(c) == nonorientable_surface(5));
}

TEST_CASE("figure configuration parses") {
  const auto c = load_config(kData + "/fig1.crv");
  CHECK(c.curves.size() == 3);
  CHECK(validate_config(c).empty());
  CHECK(intersection_number(c, "a", "b") == 1);
  CHECK(intersection_number(c, "a", "c") == 0);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_config("surface N5k0\ncurve c\n  bogus c\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_config("curve c\n"), SyntaxError);
  CHECK_THROWS_AS(parse_config("surface N5k0\ncurve c!\n"), SyntaxError);
}

TEST_CASE("reference and arity errors") {
  CHECK_THROWS_AS(parse_config("surface N5k0\ncurve c\nbasept p d\nseq c: p\n"), ReferenceError);
  CHECK_THROWS_AS(parse_config("surface N5k0\ncurve c\nbasept p c\nseq c: q\n"), ReferenceError);
  CHECK_THROWS_AS(parse_config("surface N5k0\ncurve a\ncurve b\ncross x a b\nseq a: x\n"), ArityError);
  CHECK_THROWS_AS(parse_config("surface N5k0\ncurve a\ncross x a a\nseq a: x x\n"), ArityError);
  // one face claimed by two regions
  CHECK_THROWS_AS(parse_config(R"(surface N5k0
curve c
basept p c
seq c: p
region A faces=f0 type=N2k0b1
region B faces=f0,f1 type=N3k0b2
)"),
                  ReferenceError);
}

TEST_CASE("assembly") {
  // c splits N5 into N_{2,1} and N_{3,1}: chi 0 + (-1) + (-2) = -3
  CHECK(assembled_invariants(parse_config(kLoop)) == nonorientable_surface(5));
  // pieces too small for the declared ambient
  const auto small = parse_config(R"(surface N5k0
curve c
basept p c
seq c: p
region A faces=f0 type=N1k0b1
region B faces=f1 type=N3k0b1
)");
  CHECK_THROWS_AS(assemble(small), AssemblyMismatch);
  CHECK(has_kind(validate_config(small), "AssemblyMismatch"));

  // an annulus closing up a nonseparating curve: torus or Klein bottle
  const char* tube = R"(surface %s
curve c
basept p c
seq c: p
region A faces=f0,f1 type=S0k0b2 attach=f0:match,f1:%s
)";
  char buf[256];
  std::snprintf(buf, sizeof buf, tube, "S1k0", "match");
  CHECK(assembled_invariants(parse_config(buf)) == orientable_surface(1));
  std::snprintf(buf, sizeof buf, tube, "N2k0", "reverse");
  CHECK(assembled_invariants(parse_config(buf)) == nonorientable_surface(2));
  CHECK(validate_config(parse_config(buf)).empty());
}

TEST_CASE("validation reports") {
  for (const auto& p : shipped_configs()) {
    CAPTURE(p.string());
    const auto c = load_config(p.string());
    if (p.filename() == "bigon.crv") {
      const auto vs = validate_config(c);
      CHECK(has_kind(vs, "Bigon"));
    } else {
      CHECK(validate_config(c).empty());
    }
  }
  const auto punct = parse_config(R"(surface N5k1
curve c
basept p c
seq c: p
region A faces=f0 type=N2k0b1
region B faces=f1 type=N3k0b1
)");
  CHECK(has_kind(validate_config(punct), "PunctureCountMismatch"));
}

TEST_CASE("serialization round trip") {
  for (const auto& p : shipped_configs()) {
    CAPTURE(p.string());
    const auto c = load_config(p.string());
    const std::string text = serialize(c);
    CHECK(serialize(parse_config(text)) == text);
    CHECK(parse_config(text) == c);
  }
}

TEST_CASE("search results survive a round trip") {
  // new curves are appended after existing ones, out of name order
  const auto c = load_config(kData + "/fig1.crv");
  SearchBudget b;
  b.max_arcs = 3;
  CurveSpec spec = CurveSpec::any(c);
  spec.exact = {-1, -1, 0};
  int seen = 0;
  for_each_candidate(
      c, spec, b,
      [&](const CurveConfiguration& e) {
        const auto back = parse_config(serialize(e));
        CHECK(validate_config(back).empty());
        const int w = static_cast<int>(e.curves.size()) - 1;
        const auto k1 = classify_curve(e, w);
        const auto k2 = classify_curve(back, e.curves[w]);
        CHECK(k1.components == k2.components);
        CHECK(k1.sidedness == k2.sidedness);
        CHECK(anonymous_key(back) == anonymous_key(e));
        return ++seen < 25;
      },
      "A0");
  CHECK(seen > 0);
}

TEST_CASE("anonymous key ignores presentation") {
  const auto c = load_config(kData + "/golden/tree_teven_n6.crv");
  const std::string key = anonymous_key(c);
  CHECK(anonymous_key(canonical(c)) == key);
  for (int i = 0; i < static_cast<int>(c.curves.size()); ++i) CHECK(anonymous_key(reverse_curve(c, i)) == key);
  for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v)
    if (c.vertices[v].is_crossing()) CHECK(anonymous_key(flip_crossing(c, v)) == key);
  // different configuration, different key
  CHECK(anonymous_key(load_config(kData + "/golden/tree_ot_n9.crv")) != key);
}

TEST_CASE("fixed names survive in the anonymous form") {
  const auto c = load_config(kData + "/fig1.crv");
  const auto f = anonymous_form(c, {"c"});
  CHECK(f.find_curve("c") >= 0);
  CHECK(f.find_curve("a") < 0);
  // a and b play symmetric roles
  Relabel r = identity_relabel(c);
  r.curve_names = {"b", "a", "c"};
  CHECK(anonymous_key(apply_relabel(c, r), {"c"}) == anonymous_key(c, {"c"}));
}
