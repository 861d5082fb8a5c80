// One PASS/FAIL line per acceptance criterion. Audits and the determinism
// check go through the CLI given by --cli; the rest calls the library.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <numeric>
#include <regex>
#include <sstream>
#include <sys/wait.h>
#include <string>

#include "CLI11.hpp"

#include "crosscap/characterize.hpp"
#include "crosscap/config.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/search.hpp"
#include "crosscap/topology.hpp"

using namespace crosscap;
namespace fs = std::filesystem;

namespace {

const std::string kData = CROSSCAP_DATA_DIR;
constexpr int kCorpusCrossings = 3;
constexpr int kCorpusCurves = 3;

struct Run {
  int code = -1;
  std::string out;
};

Run shell(const std::string& command) {
  Run r;
  FILE* p = popen((command + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Criteria {
 public:
  void run(const std::string& id, const std::function<std::string(bool&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      detail = body(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "PASS " : "FAIL ") << id << " (" << secs << " s): " << detail;
    std::cout << line.str() << std::endl;
    failed_ += ok ? 0 : 1;
  }
  int failed() const { return failed_; }

 private:
  int failed_ = 0;
};

std::vector<CorpusEntry> corpus_of(const SurfaceInvariants& amb) {
  static std::map<std::string, std::vector<CorpusEntry>> cache;
  auto& slot = cache[to_literal(amb)];
  if (slot.empty()) {
    SearchBudget b;
    b.max_crossings = kCorpusCrossings;
    slot = build_corpus(amb, kCorpusCurves, b);
  }
  return slot;
}

const std::vector<SurfaceInvariants>& corpus_surfaces() {
  static const std::vector<SurfaceInvariants> s{nonorientable_surface(5), nonorientable_surface(6),
                                                orientable_surface(2)};
  return s;
}

Json audit_json(const std::string& cli, const std::string& lemma, const std::string& surface, int jobs, Run* raw = nullptr) {
  const Run r = shell(cli + " --format json --jobs " + std::to_string(jobs) + " audit --lemma " + lemma +
                      " --surface " + surface + " --curves " + std::to_string(kCorpusCurves) + " --crossings " +
                      std::to_string(kCorpusCrossings));
  if (raw) *raw = r;
  if (r.code != 0 && r.code != 1) throw std::runtime_error("audit exited with " + std::to_string(r.code));
  return Json::parse(r.out);
}

std::string audit_summary(const Json& j) {
  std::ostringstream s;
  s << j["ambient"].get<std::string>() << " cases=" << j["cases"] << " agree=" << j["agreements"]
    << " disagree=" << j["disagreements"] << " inconclusive=" << j["inconclusive"];
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string cli;
  app.add_option("--cli", cli, "crosscap executable")->required();
  CLI11_PARSE(app, argc, argv);

  Criteria c;

  c.run("1 abelian-system-counts", [](bool& ok) {
    const std::regex pattern(R"(abelian_g(\d+)_k(\d+)_s(\d+)\.crv)");
    std::set<std::array<int, 3>> seen;
    int bad = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& e : fs::directory_iterator(kData + "/golden")) {
      std::smatch m;
      const std::string name = e.path().filename().string();
      if (!std::regex_match(name, m, pattern)) continue;
      const int g = std::stoi(m[1]), k = std::stoi(m[2]), s = std::stoi(m[3]);
      seen.insert({g, k, s});
      const auto cfg = load_config(e.path().string());
      std::vector<int> sys(cfg.curves.size());
      std::iota(sys.begin(), sys.end(), 0);
      const LemmaReport r = verify_max_abelian_system(cfg, sys, s);
      int pants = 0, projective = 0, other = 0;
      for (const auto& p : cut_along(cfg, sys).components) {
        if (p.orientable && p.genus == 0 && p.boundary + p.punctures == 3) ++pants;
        else if (!p.orientable && p.genus == 1 && p.boundary + p.punctures == 2) ++projective;
        else ++other;
      }
      const bool good = r.verdict == Verdict::Holds && static_cast<int>(sys.size()) == (3 * g - 6 - 2 * s) / 2 + k &&
                        pants == g + k - 2 * s - 2 && projective == 2 * s && other == 0;
      bad += good ? 0 : 1;
    }
    int missing = 0;
    for (int g : {4, 6})
      for (int k = 0; k <= 2; ++k)
        for (int s = 0; s <= (g - 2) / 2; ++s) missing += seen.count({g, k, s}) ? 0 : 1;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = bad == 0 && missing == 0 && secs < 10;
    return std::to_string(seen.size()) + " systems, " + std::to_string(bad) + " mismatches, " +
           std::to_string(missing) + " missing";
  });

  c.run("2 euler-conservation", [](bool& ok) {
    long cuts = 0, failures = 0;
    std::string sizes;
    for (const auto& amb : corpus_surfaces()) {
      const auto corpus = corpus_of(amb);
      sizes += " " + to_literal(amb) + ":" + std::to_string(corpus.size());
      for (const auto& e : corpus) {
        const int n = static_cast<int>(e.config.curves.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
          std::vector<int> subset;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1) subset.push_back(i);
          const CutResult r = cut_along(e.config, subset);
          int total = r.neighborhood_chi;
          for (const auto& s : r.components) total += euler_characteristic(s);
          ++cuts;
          failures += total == euler_characteristic(amb) ? 0 : 1;
        }
      }
    }
    ok = failures == 0 && cuts > 0;
    return std::to_string(cuts) + " cuts, " + std::to_string(failures) + " failures; corpora" + sizes;
  });

  c.run("3 separating-pair-audit", [&](bool& ok) {
    ok = true;
    std::string out;
    for (const char* s : {"N5", "N6"}) {
      const Json j = audit_json(cli, "separating-pair", s, 1);
      const double frac = j.value("inconclusive_fraction", 1.0);
      ok = ok && j["status"] == "Ran" && j["disagreements"] == 0 && frac < 0.2 && j["cases"].get<int>() > 0;
      out += audit_summary(j) + "; ";
    }
    return out;
  });

  c.run("4 triangle-dichotomy", [](bool& ok) {
    long triangles = 0, reversing = 0, bad = 0;
    for (const auto& amb : corpus_surfaces())
      for (const auto& e : corpus_of(amb)) {
        const auto& cfg = e.config;
        const int n = static_cast<int>(cfg.curves.size());
        if (n < 3) continue;
        bool pairwise_once = true;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) pairwise_once = pairwise_once && intersection_number(cfg, i, j) == 1;
        bool two_sided = true;
        for (int i = 0; i < 3; ++i) two_sided = two_sided && sidedness(cfg, i) == Sidedness::TwoSided;
        if (!pairwise_once || !two_sided) continue;
        ++triangles;
        const TriangleType t = triangle_type(cfg, 0, 1, 2);
        const auto nb = neighborhood_invariants(cfg, {0, 1, 2});
        if (t == TriangleType::OrientationReversing) {
          ++reversing;
          bad += nb == nonorientable_surface(4, 0, 1) ? 0 : 1;
        } else {
          bad += nb.orientable ? 0 : 1;
        }
      }
    ok = bad == 0 && reversing > 0;
    return std::to_string(triangles) + " triangles, " + std::to_string(reversing) + " reversing, " +
           std::to_string(bad) + " mismatches";
  });

  c.run("5 characteristic-tree-audit", [&](bool& ok) {
    const Json j = audit_json(cli, "characteristic-tree", "N6", 1);
    ok = j["status"] == "Ran" && j["disagreements"] == 0 && j["agreements"].get<int>() > 0;
    return audit_summary(j);
  });

  c.run("6 certificates", [](bool& ok) {
    const auto fig = load_config(kData + "/fig1.crv");
    const auto slide = load_config(kData + "/golden/puncture_slide.crv");
    const auto daisy = load_config(kData + "/golden/daisy_n6.crv");
    const auto k1 = certificate_kind(fig, fig.curve_index("c"));
    const auto k2 = certificate_kind(slide, slide.curve_index("c"));
    const auto k3 = certificate_kind(daisy, daisy.curve_index("c"));
    const LemmaReport r = small_genus_classify(daisy, daisy.curve_index("c"), SearchBudget{});
    bool counts = r.verdict == Verdict::Holds && r.facts["sides"].size() == 2;
    std::string petals;
    for (const auto& side : r.facts["sides"]) {
      const auto truth = parse_surface_literal(side["ground_truth"].get<std::string>());
      const int rank = side["daisy_rank"].get<int>();
      counts = counts && truth == nonorientable_surface(3, truth.punctures, 1) && rank - 2 == truth.punctures &&
               side["inferred"] == side["ground_truth"];
      petals += " r=" + std::to_string(rank) + "->" + to_literal(truth);
    }
    ok = k1.kind == CertificateType::ChainSquare6 && k2.kind == CertificateType::PunctureSlideSquare &&
         k3.kind == CertificateType::Primitive && counts;
    return "fig1 " + to_string(k1.kind) + ", puncture_slide " + to_string(k2.kind) + ", daisy_n6 " +
           to_string(k3.kind) + petals;
  });

  c.run("7 chain-not-maximal", [](bool& ok) {
    const auto c7 = load_config(kData + "/golden/chain7_in_tree.crv");
    std::vector<int> chain;
    for (int i = 1; i <= 7; ++i) chain.push_back(c7.curve_index("c" + std::to_string(i)));
    const auto v = bounded_maximality(c7, chain, SystemMode::Chain, SearchBudget{});
    bool extends = false;
    if (v.witness) {
      const int w = v.witness->curve_index(v.witness_curve);
      std::vector<int> tail = chain, head = chain;
      tail.push_back(w);
      head.insert(head.begin(), w);
      extends = recognize_pattern(*v.witness, tail, path_edges(8)) || recognize_pattern(*v.witness, head, path_edges(8));
    }
    ok = v.outcome == Outcome::CertifiedFalse && extends;
    return to_string(v.outcome) + (extends ? ", witness prolongs the chain to 8" : ", no chain witness");
  });

  c.run("8 double-cover", [](bool& ok) {
    int bad = 0, total = 0;
    for (int g = 1; g <= 12; ++g)
      for (int k = 0; k <= 4; ++k) {
        const auto s = nonorientable_surface(g, k);
        const auto d = orientation_double_cover(s);
        ++total;
        bad += d == orientable_surface(g - 1, 2 * k) && euler_characteristic(d) == 2 * euler_characteristic(s) ? 0 : 1;
      }
    ok = bad == 0;
    return std::to_string(total) + " surfaces, " + std::to_string(bad) + " mismatches";
  });

  c.run("9 determinism", [&](bool& ok) {
    std::string detail;
    ok = true;
    for (const char* s : {"N5", "N6"}) {
      const std::string cmd = cli + " --format json enumerate --surface " + s + " --curves " +
                              std::to_string(kCorpusCurves) + " --crossings " + std::to_string(kCorpusCrossings);
      const Run a = shell(cmd.substr(0, cli.size()) + " --jobs 1" + cmd.substr(cli.size()));
      const Run b = shell(cmd.substr(0, cli.size()) + " --jobs 8" + cmd.substr(cli.size()));
      const bool same = a.code == 0 && !a.out.empty() && a.out == b.out;
      ok = ok && same;
      detail += std::string("enumerate ") + s + (same ? " identical; " : " differs; ");
    }
    Run a, b;
    audit_json(cli, "separating-pair", "N5", 1, &a);
    audit_json(cli, "separating-pair", "N5", 8, &b);
    const bool same = !a.out.empty() && a.out == b.out;
    ok = ok && same;
    detail += std::string("audit separating-pair N5 ") + (same ? "identical" : "differs");
    return detail;
  });

  std::cout << (c.failed() == 0 ? "ALL PASS" : std::to_string(c.failed()) + " FAILED") << std::endl;
  return c.failed() == 0 ? 0 : 1;
}
