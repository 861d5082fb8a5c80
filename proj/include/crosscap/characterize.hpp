#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "crosscap/config.hpp"
#include "crosscap/search.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/topology.hpp"

// Twists commute exactly when their curves are disjoint; the centralizer of
// t_c is read as "curves disjoint from c" and the centralizer of a tree as
// "curves disjoint from every tree curve". Nothing below computes with
// mapping classes.

namespace crosscap {

using Json = nlohmann::ordered_json;

enum class Verdict { Holds, Fails, BoundedInconclusive };
std::string to_string(Verdict v);

struct ConditionResult {
  std::string id;
  Verdict verdict = Verdict::Holds;
  std::string detail;
};

struct LemmaReport {
  std::string lemma;
  Verdict verdict = Verdict::Holds;
  std::string witness;  // first failing condition: a curve, a pair or a count
  std::optional<CurveConfiguration> witness_config;
  std::string bound;    // budget that was reached, for BoundedInconclusive
  std::vector<ConditionResult> conditions;
  Json facts = Json::object();

  // Records a condition; Fails dominates BoundedInconclusive dominates Holds.
  void add(const std::string& id, Verdict v, const std::string& detail, const std::string& witness = {});
  Json to_json() const;
};

// ---------------------------------------------------------------------------
// Maximal abelian systems (even genus)

LemmaReport verify_max_abelian_system(const CurveConfiguration& c, const std::vector<int>& system, int s);

// ---------------------------------------------------------------------------
// Separating pairs

LemmaReport separating_pair_algebraic(const CurveConfiguration& c, int a1, int a2, const SearchBudget& budget);

// s read off the two sides: 2 when both are nonorientable of even genus, else 1.
int separating_pair_s(const std::vector<SurfaceInvariants>& components);

// ---------------------------------------------------------------------------
// Tree templates

enum class TreeFamily { TOdd, TEven, OT, NT, Daisy };
std::string to_string(TreeFamily f);
TreeFamily parse_tree_family(std::string_view text);

struct TreeTemplate {
  TreeFamily family = TreeFamily::TOdd;
  int g = 0;
  int k = 0;
  int r = 0;  // Daisy only
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<int> colored;
  std::vector<std::pair<int, int>> separating_pairs;
  std::vector<std::vector<int>> maximal_chains;
  std::vector<int> right_corner;

  int vertex(std::string_view name) const;  // throws UnknownCurve
  int expected_vertex_count() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::vector<int>> leaf_paths() const;  // chains that cannot be prolonged inside the tree
  int longest_chain() const;
};

TreeTemplate parse_template(std::string_view text);
TreeTemplate load_template(const std::string& path);
std::string serialize_template(const TreeTemplate& t);

// Shipped reconstructions.
TreeTemplate standard_template(TreeFamily family, int g, int k);
TreeTemplate daisy_template(int r);

LemmaReport validate_template(const TreeTemplate& t);

// Template vertex -> configuration curve.
using Embedding = std::vector<std::pair<std::string, std::string>>;
Embedding parse_embedding(std::string_view text);  // "a1=x,a2=y"

// Longest chain of two-sided curves a surface carries.
int chain_capacity(const SurfaceInvariants& s);

// Whether the colored-tree lemma can certify a side of a separating curve.
bool tree_lemma_applicable(const std::vector<SurfaceInvariants>& components);

// Component type the template family asserts, when it asserts one.
std::optional<SurfaceInvariants> claimed_component(const TreeTemplate& t);

LemmaReport classify_via_tree(const CurveConfiguration& c, int curve, const TreeTemplate& t, const Embedding& embedding,
                              const SearchBudget& budget);

// Places the template around `curve` by bounded search, one vertex at a
// time, and returns the first placement that accept() takes. Curves other
// than `curve` are dropped first; new curves carry the vertex names.
// complete is false when a budget cut the search short.
struct EmbeddingSearch {
  std::optional<CurveConfiguration> found;
  long nodes = 0;
  bool complete = true;
};
EmbeddingSearch find_tree_embedding(const CurveConfiguration& c, int curve, const TreeTemplate& t,
                                    const SearchBudget& budget,
                                    const std::function<bool(const CurveConfiguration&)>& accept);

// ---------------------------------------------------------------------------
// Certificates for separating twists

enum class CertificateType { Primitive, ChainSquare6, ChainTriple4, PunctureSlideSquare };
std::string to_string(CertificateType t);

struct CertificateKind {
  CertificateType kind = CertificateType::Primitive;
  std::optional<SurfaceInvariants> separated_piece;
};

CertificateKind certificate_kind(const SurfaceInvariants& a, const SurfaceInvariants& b);
CertificateKind certificate_kind(const CurveConfiguration& c, int curve);

LemmaReport small_genus_classify(const CurveConfiguration& c, int curve, const SearchBudget& budget);

struct RelationFact {
  SurfaceInvariants piece;
  std::string relation;
  std::string group;
  std::string source;
};
RelationFact relation_fact(const SurfaceInvariants& piece);

}  // namespace crosscap
