#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/config.hpp"
#include "crosscap/topology.hpp"

namespace crosscap {

struct SearchBudget {
  int max_arcs = 6;         // arcs of a candidate curve (crossings, or 1 when crossing-free)
  int max_crossings = 6;    // crossings of an enumerated configuration
  long max_candidates = 200000;  // raw candidate structures examined per search

  // Defaults overridden by CROSSCAP_BUDGET ("max_arcs=4,max_crossings=5,max_candidates=1000").
  static SearchBudget from_env();
  static SearchBudget parse(const std::string& text);
  static SearchBudget parse(const std::string& text, SearchBudget base);
  std::string to_string() const;
};

// Constraints on a new curve relative to the curves of a configuration.
struct CurveSpec {
  std::vector<int> exact;               // per curve: required intersection number, -1 = any
  std::optional<Sidedness> sidedness;   // required sidedness of the new curve
  std::vector<char> allowed_regions;    // per region: may the new curve pass through it (empty = all)
  bool nontrivial = true;               // drop curves bounding a disc, once-punctured disc or Moebius band
  bool distinct = true;                 // drop curves isotopic to an existing curve
  bool boundary_parallel_ok = false;    // keep curves parallel to an ambient boundary circle

  static CurveSpec any(const CurveConfiguration& c);
  static CurveSpec disjoint_from_all(const CurveConfiguration& c);
};

struct SearchStats {
  long structures = 0;   // raw candidate structures examined
  long emitted = 0;
  bool truncated = false;  // max_candidates reached
};

// Calls visit(extended configuration) for every new curve meeting the
// spec, once per class up to homeomorphisms fixing the existing curves.
// The new curve is appended last under `name`. Returning false from
// visit stops the search.
SearchStats for_each_candidate(const CurveConfiguration& c, const CurveSpec& spec, const SearchBudget& budget,
                               const std::function<bool(const CurveConfiguration&)>& visit,
                               const std::string& name = "b");

std::vector<CurveConfiguration> enumerate_candidate_curves(const CurveConfiguration& c, const CurveSpec& spec,
                                                           const SearchBudget& budget, const std::string& name = "b",
                                                           SearchStats* stats = nullptr);

// Sub-configuration on the listed curves, smoothed; regions merged.
CurveConfiguration restrict_to(const CurveConfiguration& c, const std::vector<int>& curves);

// Sidedness available to a curve that meets `curve` once and misses every
// other curve of c. Both false means no such curve exists.
struct CrossingOptions {
  bool two_sided = false;
  bool one_sided = false;
};
CrossingOptions once_crossing_options(const CurveConfiguration& c, int curve);

// First candidate (appended as curve `name`) meeting the spec and, when
// admissible_only, passing admissible().
std::optional<CurveConfiguration> find_curve(const CurveConfiguration& c, const CurveSpec& spec,
                                             const SearchBudget& budget, bool admissible_only,
                                             SearchStats* stats = nullptr, const std::string& name = "w");

// ---------------------------------------------------------------------------

enum class Outcome { CertifiedTrue, CertifiedFalse, InconclusiveAtBound };
std::string to_string(Outcome o);

struct BoundedVerdict {
  Outcome outcome = Outcome::InconclusiveAtBound;
  std::optional<CurveConfiguration> witness;  // set for CertifiedFalse
  std::string witness_curve;                  // curve of the witness that refutes
  std::string certificate;                    // set for CertifiedTrue
  SearchStats stats;
};

enum class SystemMode { Chain, Tree, Abelian };
std::string to_string(SystemMode m);

// Maximality of a chain (path), tree (any edge set) or abelian (pairwise
// disjoint) system. edges are only read in Tree mode. Extensions must
// miss the curves in avoid.
BoundedVerdict bounded_maximality(const CurveConfiguration& c, const std::vector<int>& system, SystemMode mode,
                                  const SearchBudget& budget, const std::vector<Edge>& edges = {},
                                  const std::vector<int>& avoid = {});

// ---------------------------------------------------------------------------

// All valid bigon-free configurations of n_curves pairwise non-isotopic
// nontrivial curves with at most budget.max_crossings crossings, one per
// class up to homeomorphism, in key order.
std::vector<CurveConfiguration> enumerate_configurations(const SurfaceInvariants& ambient, int n_curves,
                                                         const SearchBudget& budget, int jobs = 1);

struct CorpusEntry {
  std::string id;
  int n_curves = 0;
  int crossings = 0;
  std::string hash;
  CurveConfiguration config;
};

// Every configuration with up to max_curves curves, ids assigned in order.
std::vector<CorpusEntry> build_corpus(const SurfaceInvariants& ambient, int max_curves, const SearchBudget& budget,
                                      int jobs = 1);
void write_corpus(const std::vector<CorpusEntry>& corpus, const std::string& dir);
std::string corpus_index(const std::vector<CorpusEntry>& corpus);

// FNV-1a of the canonical text, hex.
std::string content_hash(const std::string& text);

// Runs fn(i) for i in [0, n) on `jobs` threads; results land by index.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace crosscap
