#include "crosscap/audit.hpp"

#include <map>
#include <set>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

enum class Claim { Yes, No, Unknown };

struct Case {
  std::string config_id;
  std::vector<std::string> curves;
  std::string key;
};

struct Outcome3 {
  Claim checker = Claim::Unknown;
  bool direct = false;
  bool applicable = true;  // false: the oracle side has nothing to compare
  std::string note;
};

const char* claim_text(Claim c) { return c == Claim::Yes ? "yes" : c == Claim::No ? "no" : "inconclusive"; }

Claim from_verdict(Verdict v) {
  return v == Verdict::Holds ? Claim::Yes : v == Verdict::Fails ? Claim::No : Claim::Unknown;
}

// Sub-configuration on `curves`, renamed by role, in name-free form.
CurveConfiguration representative(const CurveConfiguration& c, const std::vector<int>& curves,
                                  const std::vector<std::string>& roles) {
  std::vector<std::string> names;
  for (int i : curves) names.push_back(c.curves[i]);
  CurveConfiguration r = restrict_to(c, curves);
  for (std::size_t i = 0; i < names.size(); ++i) r.curves[r.curve_index(names[i])] = "~r" + roles[i];
  for (std::size_t i = 0; i < names.size(); ++i) r.curves[r.curve_index("~r" + roles[i])] = roles[i];
  return anonymous_form(r, roles);
}

// ---- separating pairs

Outcome3 run_pair(const CurveConfiguration& r, const SearchBudget& b) {
  Outcome3 o;
  const int a1 = r.curve_index("a1"), a2 = r.curve_index("a2");
  o.direct = separating_pair_direct(r, a1, a2).separates;
  const LemmaReport rep = separating_pair_algebraic(r, a1, a2, b);
  o.checker = from_verdict(rep.verdict);
  return o;
}

bool pair_eligible(const CurveConfiguration& c, int i, int j) {
  if (c.shared_crossings(i, j) != 0) return false;
  try {
    check_pair_preconditions(c, i, j);
    const CurveConfiguration r = restrict_to(c, {i, j});
    return !isotopic_disjoint(r, r.curve_index(c.curves[i]), r.curve_index(c.curves[j]));
  } catch (const PreconditionViolated&) {
    return false;
  }
}

// ---- characteristic tree

Outcome3 run_characteristic(const CurveConfiguration& r, const TreeTemplate& t, const SearchBudget& b) {
  Outcome3 o;
  const int cv = r.curve_index("c");
  o.direct = classify_curve(r, cv).characteristic;
  bool unsure = false;
  const EmbeddingSearch es = find_tree_embedding(r, cv, t, b, [&](const CurveConfiguration& w) {
    Embedding em;
    for (const auto& v : t.vertices) em.emplace_back(v, v);
    const LemmaReport rep = classify_via_tree(w, w.curve_index("c"), t, em, b);
    if (rep.verdict == Verdict::BoundedInconclusive) unsure = true;
    return rep.verdict == Verdict::Holds;
  });
  if (es.found)
    o.checker = Claim::Yes;
  else if (es.complete && !unsure)
    o.checker = Claim::No;
  o.note = std::to_string(es.nodes) + " placements";
  return o;
}

// ---- component tree: soundness only

std::vector<TreeTemplate> component_templates(const SurfaceInvariants& amb) {
  std::vector<TreeTemplate> out;
  for (TreeFamily f : {TreeFamily::TOdd, TreeFamily::TEven, TreeFamily::OT})
    for (int g = 1; g <= amb.genus; ++g)
      for (int k = 0; k <= amb.punctures; ++k) {
        TreeTemplate t;
        try {
          t = standard_template(f, g, k);
        } catch (const PreconditionViolated&) {
          continue;
        }
        if (validate_template(t).verdict != Verdict::Holds) continue;
        const auto claim = claimed_component(t);
        // the other side is a nontrivial piece with one boundary circle
        if (!claim || euler_characteristic(*claim) < euler_characteristic(amb) + 1) continue;
        if (claim->orientable && f != TreeFamily::OT) continue;
        out.push_back(std::move(t));
      }
  return out;
}

Outcome3 run_component(const CurveConfiguration& r, const std::vector<TreeTemplate>& ts, const SearchBudget& b) {
  Outcome3 o;
  const int cv = r.curve_index("c");
  const std::vector<SurfaceInvariants> sides = cut_along(r, {cv}).components;
  o.checker = Claim::No;
  int held = 0;
  for (const auto& t : ts) {
    std::optional<LemmaReport> hit;
    find_tree_embedding(r, cv, t, b, [&](const CurveConfiguration& w) {
      Embedding em;
      for (const auto& v : t.vertices) em.emplace_back(v, v);
      LemmaReport rep = classify_via_tree(w, w.curve_index("c"), t, em, b);
      if (rep.verdict != Verdict::Holds) return false;
      hit = std::move(rep);
      return true;
    });
    if (!hit) continue;
    ++held;
    const bool match = hit->facts.value("claim_matches", false);
    if (!match) {
      o.checker = Claim::Yes;
      o.direct = false;
      o.note = to_string(t.family) + " claims " + hit->facts.value("claimed_component", std::string()) + " wrongly";
      return o;
    }
  }
  // Yes/true: a sound Holds; No: nothing held
  if (held > 0) {
    o.checker = Claim::Yes;
    o.direct = true;
  } else {
    o.applicable = false;
  }
  o.note = std::to_string(held) + " templates held";
  return o;
}

// ---- maximal abelian systems

Outcome3 run_abelian(const CurveConfiguration& r, const SearchBudget& b) {
  Outcome3 o;
  std::vector<int> all(r.curves.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const BoundedVerdict bv = bounded_maximality(r, all, SystemMode::Abelian, b);
  o.direct = bv.outcome == Outcome::CertifiedTrue;
  if (bv.outcome == Outcome::InconclusiveAtBound) return o;
  bool holds = false;
  for (int s = 0; 2 * s <= r.ambient.genus - 2 && !holds; ++s)
    holds = verify_max_abelian_system(r, all, s).verdict == Verdict::Holds;
  o.checker = holds ? Claim::Yes : Claim::No;
  return o;
}

bool abelian_eligible(const CurveConfiguration& c) {
  for (std::size_t i = 0; i < c.curves.size(); ++i) {
    const CurveClass k = classify_curve(c, static_cast<int>(i));
    if (k.sidedness != Sidedness::TwoSided || k.separating) return false;
    for (std::size_t j = i + 1; j < c.curves.size(); ++j)
      if (c.shared_crossings(static_cast<int>(i), static_cast<int>(j)) != 0) return false;
  }
  return !c.curves.empty();
}

}  // namespace

bool known_audit(const std::string& lemma) {
  return lemma == "separating-pair" || lemma == "characteristic-tree" || lemma == "component-tree" ||
         lemma == "prop-max-abel";
}

Json equivalence_audit(const SurfaceInvariants& ambient, const std::string& lemma, const AuditOptions& options) {
  if (!known_audit(lemma)) throw PreconditionViolated("unknown audit '" + lemma + "'");
  check_surface(ambient);
  Json out;
  out["lemma"] = lemma;
  out["ambient"] = to_literal(ambient);
  out["bound"] = options.budget.to_string();
  out["corpus"] = {{"max_curves", options.max_curves}, {"max_crossings", options.corpus_crossings}};

  std::string skip;
  if (lemma == "separating-pair" && (ambient.orientable || ambient.genus < 5))
    skip = "needs a nonorientable ambient of genus >= 5";
  if (lemma == "characteristic-tree" && (ambient.orientable || ambient.genus % 2 != 0 || ambient.genus < 4))
    skip = "needs a nonorientable ambient of even genus >= 4";
  if (lemma == "component-tree" && (ambient.orientable ? ambient.genus < 2 : ambient.genus < 5))
    skip = "needs a nonorientable ambient of genus >= 5 or an orientable one of genus >= 2";
  if (lemma == "prop-max-abel" && (ambient.orientable || ambient.genus % 2 != 0 || ambient.genus < 4))
    skip = "needs a nonorientable ambient of even genus >= 4";
  if (!skip.empty()) {
    out["status"] = "NotApplicable";
    out["reason"] = skip;
    return out;
  }

  SearchBudget cb = options.budget;
  cb.max_crossings = options.corpus_crossings;
  const std::vector<CorpusEntry> corpus = build_corpus(ambient, options.max_curves, cb, options.jobs);

  std::optional<TreeTemplate> nt;
  std::vector<TreeTemplate> comps;
  if (lemma == "characteristic-tree") nt = standard_template(TreeFamily::NT, (ambient.genus - 2) / 2, ambient.punctures);
  if (lemma == "component-tree") comps = component_templates(ambient);

  // cases in corpus order, each keyed by its name-free sub-configuration
  std::vector<Case> cases;
  std::map<std::string, CurveConfiguration> reps;
  auto add_case = [&](const CorpusEntry& e, const std::vector<int>& curves, const std::vector<std::string>& roles) {
    CurveConfiguration r = representative(e.config, curves, roles);
    Case k;
    k.config_id = e.id;
    for (int i : curves) k.curves.push_back(e.config.curves[i]);
    k.key = serialize(r);
    reps.emplace(k.key, std::move(r));
    cases.push_back(std::move(k));
  };
  for (const auto& e : corpus) {
    const auto& c = e.config;
    const int n = static_cast<int>(c.curves.size());
    if (lemma == "separating-pair") {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && pair_eligible(c, i, j)) add_case(e, {i, j}, {"a1", "a2"});
    } else if (lemma == "prop-max-abel") {
      if (abelian_eligible(c)) {
        std::vector<int> all(n);
        std::vector<std::string> roles;
        for (int i = 0; i < n; ++i) {
          all[i] = i;
          roles.push_back("a" + std::to_string(i + 1));
        }
        add_case(e, all, roles);
      }
    } else {
      for (int i = 0; i < n; ++i) {
        const CurveClass k = classify_curve(c, i);
        if (k.sidedness != Sidedness::TwoSided || k.is_trivial()) continue;
        if (lemma == "component-tree" && !k.separating) continue;
        add_case(e, {i}, {"c"});
      }
    }
  }

  std::vector<const CurveConfiguration*> work;
  std::vector<std::string> keys;
  for (const auto& [k, r] : reps) {
    keys.push_back(k);
    work.push_back(&r);
  }
  std::vector<Outcome3> results(work.size());
  parallel_for(static_cast<int>(work.size()), options.jobs, [&](int i) {
    const CurveConfiguration& r = *work[i];
    if (lemma == "separating-pair")
      results[i] = run_pair(r, options.budget);
    else if (lemma == "characteristic-tree")
      results[i] = run_characteristic(r, *nt, options.budget);
    else if (lemma == "component-tree")
      results[i] = run_component(r, comps, options.budget);
    else
      results[i] = run_abelian(r, options.budget);
  });
  std::map<std::string, const Outcome3*> by_key;
  for (std::size_t i = 0; i < keys.size(); ++i) by_key[keys[i]] = &results[i];

  long agree = 0, disagree = 0, unknown = 0, vacuous = 0;
  Json disagreements = Json::array(), inconclusive = Json::array();
  for (const auto& k : cases) {
    const Outcome3& o = *by_key.at(k.key);
    Json entry = {{"config", k.config_id}, {"curves", k.curves}};
    if (!o.applicable) {
      ++vacuous;
    } else if (o.checker == Claim::Unknown) {
      ++unknown;
      if (inconclusive.size() < 25) inconclusive.push_back(entry);
    } else if ((o.checker == Claim::Yes) == o.direct) {
      ++agree;
    } else {
      ++disagree;
      entry["checker"] = claim_text(o.checker);
      entry["direct"] = o.direct;
      if (!o.note.empty()) entry["note"] = o.note;
      disagreements.push_back(entry);
    }
  }
  const long judged = agree + disagree + unknown;
  out["status"] = "Ran";
  out["configurations"] = corpus.size();
  out["cases"] = cases.size();
  out["distinct_cases"] = reps.size();
  out["agreements"] = agree;
  out["disagreements"] = disagree;
  out["inconclusive"] = unknown;
  if (lemma == "component-tree") out["no_template_held"] = vacuous;
  out["inconclusive_fraction"] = judged == 0 ? 0.0 : static_cast<double>(unknown) / static_cast<double>(judged);
  out["disagreement_cases"] = disagreements;
  out["inconclusive_sample"] = inconclusive;
  return out;
}

}  // namespace crosscap
