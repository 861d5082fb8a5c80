// crosscap: command-line front end to the curve-configuration library.
//
// Exit codes: 0 holds / succeeded, 1 definitively fails, 2 invalid input,
// 3 inconclusive at the search bound.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crosscap/audit.hpp"
#include "crosscap/characterize.hpp"
#include "crosscap/config.hpp"
#include "crosscap/curveconfig.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/search.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/topology.hpp"

namespace cc = crosscap;
using cc::Json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;
constexpr int kInconclusive = 3;

struct Output {
  Json json = Json::object();
  std::string text;
  int code = kHolds;
};

struct Common {
  std::string format = "text";
  std::string out;
  int jobs = 1;
  int bound = 0;  // overrides max_arcs when positive
};

int exit_code(cc::Verdict v) {
  switch (v) {
    case cc::Verdict::Holds: return kHolds;
    case cc::Verdict::Fails: return kFails;
    case cc::Verdict::BoundedInconclusive: return kInconclusive;
  }
  return kInvalid;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

cc::SearchBudget budget_of(const Common& common) {
  cc::SearchBudget b = cc::SearchBudget::from_env();
  if (common.bound > 0) b.max_arcs = common.bound;
  return b;
}

// Parses and rejects anything validate would flag.
cc::CurveConfiguration load_valid(const std::string& path) {
  cc::CurveConfiguration c = cc::load_config(path);
  const auto violations = cc::validate_config(c);
  if (!violations.empty()) {
    std::string msg = violations.front().kind + ": " + violations.front().detail;
    throw cc::PreconditionViolated("invalid configuration " + path + " (" + msg + ")");
  }
  return c;
}

Json surface_json(const cc::SurfaceInvariants& s) {
  return {{"literal", cc::to_literal(s)}, {"name", cc::describe(s)}, {"chi", cc::euler_characteristic(s)}};
}

std::string report_text(const cc::LemmaReport& r) {
  std::ostringstream o;
  o << r.lemma << ": " << cc::to_string(r.verdict) << "\n";
  for (const auto& c : r.conditions) o << "  [" << cc::to_string(c.verdict) << "] " << c.id << ": " << c.detail << "\n";
  if (r.verdict == cc::Verdict::Fails && !r.witness.empty()) o << "  witness: " << r.witness << "\n";
  if (r.verdict == cc::Verdict::BoundedInconclusive && !r.bound.empty()) o << "  bound: " << r.bound << "\n";
  for (const auto& [key, value] : r.facts.items())
    o << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  if (r.witness_config) o << "witness configuration:\n" << cc::serialize(*r.witness_config);
  return o.str();
}

Output from_report(const cc::LemmaReport& r) { return {r.to_json(), report_text(r), exit_code(r.verdict)}; }

// ---- subcommands

Output run_validate(const std::string& path) {
  Output o;
  const cc::CurveConfiguration c = cc::load_config(path);
  const auto violations = cc::validate_config(c);
  o.json["file"] = path;
  o.json["valid"] = violations.empty();
  Json list = Json::array();
  for (const auto& v : violations) list.push_back({{"kind", v.kind}, {"detail", v.detail}});
  o.json["violations"] = list;
  o.json["ambient"] = surface_json(c.ambient);
  o.json["curves"] = c.curves;
  o.json["crossings"] = c.crossing_count();
  if (violations.empty()) {
    o.text = "valid: " + cc::describe(c.ambient) + ", " + std::to_string(c.curves.size()) + " curves, " +
             std::to_string(c.crossing_count()) + " crossings\n";
  } else {
    for (const auto& v : violations) o.text += v.kind + ": " + v.detail + "\n";
    o.code = kInvalid;
  }
  return o;
}

Output run_classify(const std::string& path, const std::string& curve) {
  Output o;
  const cc::CurveConfiguration c = load_valid(path);
  const int idx = c.curve_index(curve);
  const cc::CurveClass k = cc::classify_curve(c, idx);
  o.json["curve"] = curve;
  o.json["sidedness"] = cc::to_string(k.sidedness);
  o.json["trivial"] = cc::to_string(k.trivial);
  o.json["separating"] = k.separating;
  o.json["characteristic"] = k.characteristic;
  o.json["admissible"] = cc::admissible(c, idx);
  Json pieces = Json::array();
  for (const auto& s : k.components) pieces.push_back(surface_json(s));
  o.json["pieces"] = pieces;
  std::ostringstream t;
  t << curve << ": " << cc::to_string(k.sidedness) << ", " << (k.separating ? "Separating" : "Nonseparating");
  if (k.is_trivial()) t << ", " << cc::to_string(k.trivial);
  if (k.characteristic) t << ", characteristic";
  t << "\n  pieces:";
  for (const auto& s : k.components) t << " " << cc::describe(s);
  t << "\n";
  if (k.separating && !k.is_trivial() && k.components.size() == 2 && k.sidedness == cc::Sidedness::TwoSided) {
    const cc::CertificateKind cert = cc::certificate_kind(k.components[0], k.components[1]);
    o.json["certificate"] = cc::to_string(cert.kind);
    if (cert.separated_piece) o.json["certificate_piece"] = surface_json(*cert.separated_piece);
    t << "  certificate: " << cc::to_string(cert.kind) << "\n";
  }
  o.text = t.str();
  return o;
}

Output run_certificate(const std::string& path, const std::string& curve) {
  Output o;
  const cc::CurveConfiguration c = load_valid(path);
  const cc::CertificateKind cert = cc::certificate_kind(c, c.curve_index(curve));
  o.json["curve"] = curve;
  o.json["certificate"] = cc::to_string(cert.kind);
  o.text = curve + ": " + cc::to_string(cert.kind);
  if (cert.separated_piece) {
    o.json["certificate_piece"] = surface_json(*cert.separated_piece);
    o.text += " (" + cc::describe(*cert.separated_piece) + ")";
    try {
      const cc::RelationFact f = cc::relation_fact(*cert.separated_piece);
      o.json["relation"] = {{"relation", f.relation}, {"group", f.group}, {"source", f.source}};
      o.text += "\n  " + f.relation + "; " + f.group;
    } catch (const cc::NoFact&) {
    }
  }
  o.text += "\n";
  return o;
}

Output run_prop_max_abel(const std::string& path, const std::string& system, int s) {
  const cc::CurveConfiguration c = load_valid(path);
  return from_report(cc::verify_max_abelian_system(c, cc::curve_indices(c, split_list(system)), s));
}

Output run_separating_pair(const std::string& path, const std::string& pair, const Common& common) {
  const cc::CurveConfiguration c = load_valid(path);
  const auto names = split_list(pair);
  if (names.size() != 2) throw cc::PreconditionViolated("--pair needs exactly two curve names");
  const int a = c.curve_index(names[0]);
  const int b = c.curve_index(names[1]);
  cc::LemmaReport r = cc::separating_pair_algebraic(c, a, b, budget_of(common));
  const cc::SeparatingPairResult direct = cc::separating_pair_direct(c, a, b);
  r.facts["direct_separates"] = direct.separates;
  Json pieces = Json::array();
  for (const auto& s : direct.components) pieces.push_back(cc::to_literal(s));
  r.facts["direct_pieces"] = pieces;
  return from_report(r);
}

Output run_tree_lemma(const std::string& path, const std::string& curve, const std::string& template_path,
                      const std::string& embedding, bool search, const Common& common) {
  const cc::CurveConfiguration c = load_valid(path);
  const cc::TreeTemplate t = cc::load_template(template_path);
  const cc::SearchBudget budget = budget_of(common);
  const int idx = c.curve_index(curve);
  if (!search) {
    cc::Embedding em = embedding.empty() ? cc::Embedding{} : cc::parse_embedding(embedding);
    if (em.empty())
      for (const auto& v : t.vertices) em.emplace_back(v, v);
    return from_report(cc::classify_via_tree(c, idx, t, em, budget));
  }
  cc::LemmaReport held;
  bool found = false;
  const cc::EmbeddingSearch es = cc::find_tree_embedding(c, idx, t, budget, [&](const cc::CurveConfiguration& w) {
    cc::Embedding em;
    for (const auto& v : t.vertices) em.emplace_back(v, v);
    held = cc::classify_via_tree(w, w.curve_index(curve), t, em, budget);
    found = held.verdict == cc::Verdict::Holds;
    return found;
  });
  if (found) {
    held.facts["placement"] = cc::serialize(*es.found);
    held.facts["search_nodes"] = es.nodes;
    return from_report(held);
  }
  cc::LemmaReport r;
  r.lemma = "tree-placement";
  r.facts["search_nodes"] = es.nodes;
  r.facts["complete"] = es.complete;
  if (es.complete) {
    r.add("placement", cc::Verdict::Fails, "no placement of the template around " + curve + " satisfies the lemma",
          curve);
  } else {
    r.add("placement", cc::Verdict::BoundedInconclusive, "placement search stopped at the budget");
    r.bound = budget.to_string();
  }
  return from_report(r);
}

Output run_small_genus(const std::string& path, const std::string& curve, const Common& common) {
  const cc::CurveConfiguration c = load_valid(path);
  return from_report(cc::small_genus_classify(c, c.curve_index(curve), budget_of(common)));
}

Output run_maximality(const std::string& path, const std::string& system, const std::string& mode,
                      const std::string& avoid, const Common& common) {
  const cc::CurveConfiguration c = load_valid(path);
  const auto curves = cc::curve_indices(c, split_list(system));
  cc::SystemMode m = cc::SystemMode::Chain;
  if (mode == "abelian") m = cc::SystemMode::Abelian;
  else if (mode != "chain") throw cc::PreconditionViolated("--mode must be chain or abelian");
  const cc::BoundedVerdict v =
      cc::bounded_maximality(c, curves, m, budget_of(common), {}, cc::curve_indices(c, split_list(avoid)));
  Output o;
  o.json["system"] = split_list(system);
  o.json["mode"] = cc::to_string(m);
  o.json["outcome"] = cc::to_string(v.outcome);
  if (!v.certificate.empty()) o.json["certificate"] = v.certificate;
  if (v.witness) {
    o.json["witness_curve"] = v.witness_curve;
    o.json["witness_config"] = cc::serialize(*v.witness);
  }
  o.json["candidates_examined"] = v.stats.structures;
  o.text = cc::to_string(m) + " " + system + ": " + cc::to_string(v.outcome) + "\n";
  if (!v.certificate.empty()) o.text += "  certificate: " + v.certificate + "\n";
  if (v.witness) o.text += "  extended by " + v.witness_curve + ":\n" + cc::serialize(*v.witness);
  o.code = v.outcome == cc::Outcome::CertifiedTrue ? kHolds : v.outcome == cc::Outcome::CertifiedFalse ? kFails
                                                                                                      : kInconclusive;
  return o;
}

Output run_enumerate(const std::string& surface, int curves, int crossings, const std::string& dir,
                     const Common& common) {
  const cc::SurfaceInvariants amb = cc::parse_surface_literal(surface);
  cc::SearchBudget b = budget_of(common);
  b.max_crossings = crossings;
  const auto corpus = cc::build_corpus(amb, curves, b, common.jobs);
  if (!dir.empty()) cc::write_corpus(corpus, dir);
  Output o;
  o.json["ambient"] = cc::to_literal(amb);
  o.json["max_curves"] = curves;
  o.json["max_crossings"] = crossings;
  o.json["count"] = corpus.size();
  Json entries = Json::array();
  for (const auto& e : corpus)
    entries.push_back({{"id", e.id}, {"curves", e.n_curves}, {"crossings", e.crossings}, {"hash", e.hash}});
  o.json["entries"] = entries;
  o.text = cc::corpus_index(corpus);
  return o;
}

Output run_audit(const std::string& lemma, const std::string& surface, int curves, int crossings,
                 const Common& common) {
  if (!cc::known_audit(lemma)) throw cc::PreconditionViolated("no audit for '" + lemma + "'");
  cc::AuditOptions opt;
  opt.max_curves = curves;
  opt.corpus_crossings = crossings;
  opt.budget = budget_of(common);
  opt.jobs = common.jobs;
  Output o;
  o.json = cc::equivalence_audit(cc::parse_surface_literal(surface), lemma, opt);
  std::ostringstream t;
  t << lemma << " on " << surface << ": " << o.json.value("status", "") << "\n";
  for (const char* key : {"reason", "cases", "distinct_cases", "agreements", "disagreements", "inconclusive",
                          "no_template_held", "inconclusive_fraction"})
    if (o.json.contains(key)) t << "  " << key << " = " << o.json[key].dump() << "\n";
  o.text = t.str();
  if (o.json.value("disagreements", 0) > 0) o.code = kFails;
  return o;
}

Output run_template_validate(const std::string& path) { return from_report(cc::validate_template(cc::load_template(path))); }

Output run_template_show(const std::string& family, int g, int k) {
  const cc::TreeTemplate t = cc::standard_template(cc::parse_tree_family(family), g, k);
  Output o;
  o.text = cc::serialize_template(t);
  o.json["template"] = o.text;
  return o;
}

void emit(const Output& o, const Common& common) {
  const std::string body = common.format == "json" ? o.json.dump(2) + "\n" : o.text;
  if (common.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(common.out, std::ios::binary);
  if (!f) throw cc::PreconditionViolated("cannot write " + common.out);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curve configurations on punctured surfaces: validation, classification and lemma checks"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", common.out, "Write the report to PATH instead of stdout");
  app.add_option("--jobs", common.jobs, "Worker threads for enumerate and audit")->check(CLI::PositiveNumber);
  app.add_option("--bound", common.bound, "Arc bound of candidate curves (overrides CROSSCAP_BUDGET)")
      ->check(CLI::PositiveNumber);

  std::string file, curve, pair, system, templ, embedding, surface, lemma, dir, family, mode = "chain", avoid;
  int s = 1, curves = 2, crossings = 3, g = 2, k = 0;
  bool search = false;

  auto* validate = app.add_subcommand("validate", "Check a configuration file");
  validate->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Classify a curve and its certificate");
  classify->add_option("file", file)->required();
  classify->add_option("--curve", curve)->required();

  auto* check = app.add_subcommand("check", "Run a lemma checker");
  check->require_subcommand(1);
  auto* abel = check->add_subcommand("prop-max-abel", "Maximal abelian system counts");
  abel->add_option("file", file)->required();
  abel->add_option("--system", system, "a,b,c")->required();
  abel->add_option("--s", s, "Number of projective pairs per side class")->check(CLI::Range(0, 12));
  auto* sep = check->add_subcommand("separating-pair", "Separating pair via centralizer conditions");
  sep->add_option("file", file)->required();
  sep->add_option("--pair", pair, "a,b")->required();
  auto* tree = check->add_subcommand("tree-lemma", "Colored tree lemma");
  tree->add_option("file", file)->required();
  tree->add_option("--curve", curve)->required();
  tree->add_option("--template", templ, "Tree template file")->required();
  tree->add_option("--embedding", embedding, "v1=a1,v2=a2 (default: vertex names)");
  tree->add_flag("--search", search, "Place the template around the curve by bounded search");
  auto* cert = check->add_subcommand("certificate", "Certificate type of a separating twist");
  cert->add_option("file", file)->required();
  cert->add_option("--curve", curve)->required();
  auto* small = check->add_subcommand("small-genus", "Genus 5 and 6 classification via daisies and chains");
  small->add_option("file", file)->required();
  small->add_option("--curve", curve)->required();
  auto* maxi = check->add_subcommand("maximality", "Bounded maximality of a chain or abelian system");
  maxi->add_option("file", file)->required();
  maxi->add_option("--system", system, "a,b,c")->required();
  maxi->add_option("--mode", mode)->check(CLI::IsMember({"chain", "abelian"}));
  maxi->add_option("--avoid", avoid, "Curves every extension must miss");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a corpus of configurations");
  enumerate->add_option("--surface", surface)->required();
  enumerate->add_option("--curves", curves)->check(CLI::Range(1, 4));
  enumerate->add_option("--crossings", crossings)->check(CLI::Range(0, 12));
  enumerate->add_option("--dir", dir, "Write one .crv per entry plus index.txt");

  auto* audit = app.add_subcommand("audit", "Compare a checker against cut-and-classify on a corpus");
  audit->add_option("--lemma", lemma)->required();
  audit->add_option("--surface", surface)->required();
  audit->add_option("--curves", curves)->check(CLI::Range(1, 4));
  audit->add_option("--crossings", crossings)->check(CLI::Range(0, 12));

  auto* tmpl = app.add_subcommand("template", "Tree templates");
  tmpl->require_subcommand(1);
  auto* tvalidate = tmpl->add_subcommand("validate", "Check a template file");
  tvalidate->add_option("file", file)->required();
  auto* tshow = tmpl->add_subcommand("show", "Print a shipped template");
  tshow->add_option("--family", family)->required();
  tshow->add_option("--g", g);
  tshow->add_option("--k", k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kHolds : kInvalid;
  }

  try {
    Output o;
    if (*validate) o = run_validate(file);
    else if (*classify) o = run_classify(file, curve);
    else if (*abel) o = run_prop_max_abel(file, system, s);
    else if (*sep) o = run_separating_pair(file, pair, common);
    else if (*tree) o = run_tree_lemma(file, curve, templ, embedding, search, common);
    else if (*cert) o = run_certificate(file, curve);
    else if (*small) o = run_small_genus(file, curve, common);
    else if (*maxi) o = run_maximality(file, system, mode, avoid, common);
    else if (*enumerate) o = run_enumerate(surface, curves, crossings, dir, common);
    else if (*audit) o = run_audit(lemma, surface, curves, crossings, common);
    else if (*tvalidate) o = run_template_validate(file);
    else if (*tshow) o = run_template_show(family, g, k);
    emit(o, common);
    return o.code;
  } catch (const cc::Error& e) {
    if (common.format == "json")
      std::cout << Json{{"error", e.kind()}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "crosscap: " << e.kind() << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "crosscap: " << e.what() << "\n";
    return kInvalid;
  }
}
