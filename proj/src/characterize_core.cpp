#include <algorithm>
#include <functional>
#include <set>

#include "crosscap/characterize.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/errors.hpp"

namespace crosscap {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::BoundedInconclusive: return "BoundedInconclusive";
  }
  return "?";
}

void LemmaReport::add(const std::string& id, Verdict v, const std::string& detail, const std::string& w) {
  conditions.push_back({id, v, detail});
  if (v == Verdict::Fails && verdict != Verdict::Fails) {
    verdict = Verdict::Fails;
    witness = w.empty() ? detail : w;
  } else if (v == Verdict::BoundedInconclusive && verdict == Verdict::Holds) {
    verdict = Verdict::BoundedInconclusive;
  }
}

Json LemmaReport::to_json() const {
  Json j;
  j["lemma"] = lemma;
  j["verdict"] = to_string(verdict);
  if (verdict == Verdict::Fails) j["witness"] = witness;
  if (witness_config) j["witness_config"] = serialize(*witness_config);
  if (verdict == Verdict::BoundedInconclusive) j["bound"] = bound;
  Json conds = Json::array();
  for (const auto& c : conditions) conds.push_back({{"id", c.id}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  j["conditions"] = conds;
  j["facts"] = facts;
  return j;
}

namespace {

bool is_pants(const SurfaceInvariants& s) { return s.orientable && s.genus == 0 && s.boundary + s.punctures == 3; }
bool is_projective_pair(const SurfaceInvariants& s) {
  return !s.orientable && s.genus == 1 && s.boundary + s.punctures == 2;
}

std::string names_of(const CurveConfiguration& c, const std::vector<int>& curves) {
  std::string out;
  for (int v : curves) out += (out.empty() ? "" : ",") + c.curves[v];
  return out;
}

void require_even_closed_nonorientable(const SurfaceInvariants& a) {
  if (a.orientable || a.boundary != 0 || a.genus % 2 != 0 || a.genus < 4)
    throw PreconditionViolated("needs a nonorientable surface of even genus >= 4 without boundary, got " + describe(a));
}

}  // namespace

LemmaReport verify_max_abelian_system(const CurveConfiguration& c, const std::vector<int>& system, int s) {
  const SurfaceInvariants& amb = c.ambient;
  require_even_closed_nonorientable(amb);
  const int g = amb.genus, k = amb.punctures;
  if (s < 0 || 2 * s > g - 2) throw PreconditionViolated("s must lie in 0.." + std::to_string((g - 2) / 2));
  for (int v : system)
    if (v < 0 || v >= static_cast<int>(c.curves.size())) throw UnknownCurve("curve index " + std::to_string(v));
  require_bigon_free(c);

  LemmaReport rep;
  rep.lemma = "prop-max-abel";
  rep.facts["genus"] = g;
  rep.facts["punctures"] = k;
  rep.facts["s"] = s;

  bool curves_ok = true;
  if (std::set<int>(system.begin(), system.end()).size() != system.size()) {
    rep.add("curves", Verdict::Fails, "a curve is listed twice", names_of(c, system));
    curves_ok = false;
  }
  for (std::size_t i = 0; curves_ok && i < system.size(); ++i) {
    const CurveClass k = classify_curve(c, system[i]);
    if (k.sidedness != Sidedness::TwoSided || k.separating) {
      rep.add("curves", Verdict::Fails, "'" + c.curves[system[i]] + "' is not two-sided nonseparating",
              c.curves[system[i]]);
      curves_ok = false;
      break;
    }
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      const int a = system[i], b = system[j];
      if (c.shared_crossings(a, b) != 0 || isotopic_disjoint(c, a, b)) {
        rep.add("curves", Verdict::Fails, "'" + c.curves[a] + "' and '" + c.curves[b] + "' are not disjoint and distinct",
                c.curves[a] + "," + c.curves[b]);
        curves_ok = false;
        break;
      }
    }
  }
  if (curves_ok) rep.add("curves", Verdict::Holds, "pairwise disjoint, distinct, two-sided, nonseparating");

  const int rank = expected_abelian_rank_with_s(g, k, s);
  const int count = static_cast<int>(system.size());
  rep.facts["rank"] = count;
  rep.facts["expected_rank"] = rank;
  if (count == rank)
    rep.add("rank", Verdict::Holds, std::to_string(count) + " curves");
  else
    rep.add("rank", Verdict::Fails, std::to_string(count) + " curves, expected " + std::to_string(rank),
            std::to_string(count));

  if (curves_ok) {
    const CutResult cut = cut_along(c, system);
    int pants = 0, projective = 0;
    Json pieces = Json::array();
    std::string odd_piece;
    for (const auto& p : cut.components) {
      pieces.push_back(to_literal(p));
      if (is_pants(p))
        ++pants;
      else if (is_projective_pair(p))
        ++projective;
      else if (odd_piece.empty())
        odd_piece = to_literal(p);
    }
    rep.facts["pieces"] = pieces;
    rep.facts["pants"] = pants;
    rep.facts["projective_pairs"] = projective;
    const int want_pants = g + k - 2 * s - 2, want_proj = 2 * s;
    if (!odd_piece.empty())
      rep.add("pieces", Verdict::Fails, "piece " + odd_piece + " is neither a pair of pants nor a two-holed projective plane",
              odd_piece);
    else if (pants != want_pants || projective != want_proj)
      rep.add("pieces", Verdict::Fails,
              std::to_string(pants) + " pants and " + std::to_string(projective) + " projective pairs, expected " +
                  std::to_string(want_pants) + " and " + std::to_string(want_proj),
              std::to_string(pants) + "+" + std::to_string(projective));
    else
      rep.add("pieces", Verdict::Holds, std::to_string(pants) + " pants and " + std::to_string(projective) + " projective pairs");
  }
  return rep;
}

// ---------------------------------------------------------------------------

int separating_pair_s(const std::vector<SurfaceInvariants>& components) {
  const bool both_even = components.size() == 2 && std::all_of(components.begin(), components.end(), [](const auto& s) {
                           return !s.orientable && s.genus % 2 == 0;
                         });
  return both_even ? 2 : 1;
}

namespace {

// Grows a pairwise disjoint admissible system until no piece has room left,
// calling done() on each saturated system. Returns false when the node
// limit was reached.
bool complete_system(const CurveConfiguration& start, const SearchBudget& budget, long node_limit,
                     const std::function<bool(const CurveConfiguration&)>& done) {
  std::set<std::string> seen;
  long nodes = 0;
  bool stop = false, truncated = false;
  std::vector<std::string> fixed = start.curves;
  std::function<void(const CurveConfiguration&)> rec = [&](const CurveConfiguration& cur) {
    if (stop) return;
    if (++nodes > node_limit) {
      truncated = stop = true;
      return;
    }
    std::vector<int> all(cur.curves.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const CutResult cut = cut_along(cur, all);
    if (std::all_of(cut.components.begin(), cut.components.end(),
                    [](const auto& p) { return is_pants(p) || is_projective_pair(p); })) {
      if (done(cur)) stop = true;
      return;
    }
    CurveSpec spec = CurveSpec::disjoint_from_all(cur);
    spec.sidedness = Sidedness::TwoSided;
    const int idx = static_cast<int>(cur.curves.size());
    std::vector<CurveConfiguration> next;
    const SearchStats st = for_each_candidate(cur, spec, budget, [&](const CurveConfiguration& e) {
      if (admissible(e, idx)) next.push_back(e);
      return true;
    }, "k" + std::to_string(idx + 1));
    if (st.truncated) truncated = true;
    for (const auto& e : next) {
      if (stop) return;
      if (!seen.insert(anonymous_key(e, fixed)).second) continue;
      rec(e);
    }
  };
  rec(start);
  return !truncated;
}

}  // namespace

LemmaReport separating_pair_algebraic(const CurveConfiguration& c, int a1, int a2, const SearchBudget& budget) {
  check_pair_preconditions(c, a1, a2);
  if (isotopic_disjoint(c, a1, a2)) throw PreconditionViolated("the two curves are isotopic");
  const SurfaceInvariants& amb = c.ambient;
  if (amb.orientable || amb.genus < 5) throw PreconditionViolated("needs a nonorientable surface of genus >= 5");

  LemmaReport rep;
  rep.lemma = "separating-pair";
  rep.bound = budget.to_string();
  const std::string n1 = c.curves[a1], n2 = c.curves[a2];
  const CurveConfiguration r = restrict_to(c, {a1, a2});
  const int l1 = r.curve_index(n1), l2 = r.curve_index(n2);

  // no two-sided curve meets the first once while missing the second
  const CrossingOptions opts = once_crossing_options(r, l1);
  if (!opts.two_sided) {
    rep.add("braid-partner", Verdict::Holds,
            "no two-sided curve meets '" + n1 + "' once and misses '" + n2 + "' (certified from the complement)");
  } else {
    CurveSpec spec = CurveSpec::disjoint_from_all(r);
    spec.exact[l1] = 1;
    spec.sidedness = Sidedness::TwoSided;
    SearchStats st;
    if (auto w = find_curve(r, spec, budget, false, &st, "b")) {
      rep.add("braid-partner", Verdict::Fails, "curve '" + w->curves.back() + "' meets '" + n1 + "' once and misses '" + n2 + "'",
              w->curves.back());
      rep.witness_config = std::move(w);
    } else {
      rep.add("braid-partner", Verdict::BoundedInconclusive, "no partner found within " + budget.to_string());
    }
  }

  const CutResult cut = cut_along(r, {l1, l2});
  if (amb.genus % 2 == 0 && rep.verdict != Verdict::Fails) {
    if (std::all_of(cut.components.begin(), cut.components.end(), [](const auto& p) { return p.orientable; })) {
      rep.add("abelian-system", Verdict::Fails,
              "the complement of the pair is orientable, so every maximal system through it has s=0", "s=0");
    } else {
      std::optional<CurveConfiguration> sys;
      int found_s = -1;
      const bool complete = complete_system(r, budget, 400, [&](const CurveConfiguration& e) {
        std::vector<int> all(e.curves.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        int proj = 0;
        for (const auto& p : cut_along(e, all).components) proj += is_projective_pair(p) ? 1 : 0;
        if (proj != 2 && proj != 4) return false;
        found_s = proj / 2;
        sys = e;
        return true;
      });
      if (sys) {
        rep.add("abelian-system", Verdict::Holds,
                "maximal system of rank " + std::to_string(sys->curves.size()) + " with s=" + std::to_string(found_s));
        rep.facts["system"] = sys->curves;
        rep.facts["system_s"] = found_s;
      } else if (complete) {
        rep.add("abelian-system", Verdict::Fails, "no maximal system through the pair has s=1 or s=2", "s");
      } else {
        rep.add("abelian-system", Verdict::BoundedInconclusive, "no suitable maximal system found within the node limit");
      }
    }
  }
  if (rep.verdict != Verdict::BoundedInconclusive) rep.facts["separates"] = rep.verdict == Verdict::Holds;
  if (rep.verdict == Verdict::Holds) rep.facts["s"] = separating_pair_s(cut.components);
  return rep;
}

// ---------------------------------------------------------------------------

std::string to_string(CertificateType t) {
  switch (t) {
    case CertificateType::Primitive: return "Primitive";
    case CertificateType::ChainSquare6: return "ChainSquare6";
    case CertificateType::ChainTriple4: return "ChainTriple4";
    case CertificateType::PunctureSlideSquare: return "PunctureSlideSquare";
  }
  return "?";
}

namespace {

std::optional<CertificateType> exceptional(const SurfaceInvariants& s) {
  if (s == nonorientable_surface(1, 1, 1)) return CertificateType::PunctureSlideSquare;
  if (s == orientable_surface(1, 1, 1)) return CertificateType::ChainTriple4;
  if (s == orientable_surface(1, 0, 1)) return CertificateType::ChainSquare6;
  return std::nullopt;
}

}  // namespace

CertificateKind certificate_kind(const SurfaceInvariants& a, const SurfaceInvariants& b) {
  check_surface(a);
  check_surface(b);
  if (a.boundary != 1 || b.boundary != 1)
    throw NotASeparation("both sides of a separating curve have exactly one boundary circle");
  const auto ea = exceptional(a), eb = exceptional(b);
  CertificateKind out;
  // both exceptional: puncture slide, then triple chain, then pair chain
  if (ea && (!eb || static_cast<int>(*ea) >= static_cast<int>(*eb))) {
    out.kind = *ea;
    out.separated_piece = a;
  } else if (eb) {
    out.kind = *eb;
    out.separated_piece = b;
  }
  return out;
}

CertificateKind certificate_kind(const CurveConfiguration& c, int curve) {
  const CurveClass k = classify_curve(c, curve);
  if (!k.separating || k.components.size() != 2) throw NotASeparation("curve '" + c.curves[curve] + "' does not separate");
  if (k.is_trivial()) throw NotASeparation("curve '" + c.curves[curve] + "' is trivial");
  return certificate_kind(k.components[0], k.components[1]);
}

RelationFact relation_fact(const SurfaceInvariants& piece) {
  const std::string src = "classical presentation of the mapping class group of the piece";
  if (piece == orientable_surface(1, 0, 1))
    return {piece, "t_boundary = (t_a t_b)^6", "center generated by tau = (t_a t_b)^3", src};
  if (piece == orientable_surface(1, 1, 1))
    return {piece, "t_boundary = (t_a t_b t_d)^4", "chain of three twists about nonseparating curves", src};
  if (piece == nonorientable_surface(1, 1, 1))
    return {piece, "t_boundary = v^2", "mapping class group infinite cyclic on the puncture slide v", src};
  throw NoFact("no stored relation for " + describe(piece));
}

int chain_capacity(const SurfaceInvariants& s) {
  const int handles = s.orientable ? s.genus : (s.genus - 1) / 2;
  return handles <= 0 ? 1 : 2 * handles + 1;
}

bool tree_lemma_applicable(const std::vector<SurfaceInvariants>& components) {
  return std::any_of(components.begin(), components.end(), [](const SurfaceInvariants& s) {
    return s.orientable ? s.genus >= 2 : s.genus >= 4;
  });
}

}  // namespace crosscap
