#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscap/config.hpp"
#include "crosscap/surface.hpp"

namespace crosscap {

enum class Sidedness { OneSided, TwoSided };
enum class Triviality { NonTrivial, BoundsDisc, BoundsOncePuncturedDisc, BoundsMoebius, BoundaryParallel };
enum class TriangleType { OrientationPreserving, OrientationReversing };

std::string to_string(Sidedness s);
std::string to_string(Triviality t);
std::string to_string(TriangleType t);

struct CurveClass {
  Sidedness sidedness = Sidedness::TwoSided;
  Triviality trivial = Triviality::NonTrivial;
  bool separating = false;
  std::vector<SurfaceInvariants> components;  // one entry when nonseparating
  bool characteristic = false;

  bool is_trivial() const { return trivial != Triviality::NonTrivial; }
};

// Complementary components of the neighborhood of a curve subset.
struct CutResult {
  std::vector<SurfaceInvariants> components;  // in region order of the restriction
  SurfaceInvariants neighborhood;    // set when neighborhood_connected
  bool neighborhood_connected = false;
  int neighborhood_chi = 0;  // zero exactly when the subset is pairwise disjoint
};

// Throws BigonPresent unless the configuration is in minimal position.
void require_bigon_free(const CurveConfiguration& c);

int intersection_number(const CurveConfiguration& c, int a, int b);
int intersection_number(const CurveConfiguration& c, const std::string& a, const std::string& b);

int sign_product(const CurveConfiguration& c, int curve);
Sidedness sidedness(const CurveConfiguration& c, int curve);

CutResult cut_along(const CurveConfiguration& c, const std::vector<int>& subset);
CutResult cut_along_named(const CurveConfiguration& c, const std::vector<std::string>& subset);

CurveClass classify_curve(const CurveConfiguration& c, int curve);
CurveClass classify_curve(const CurveConfiguration& c, const std::string& curve);

// Two-sided and nonseparating; on a nonorientable ambient the complement
// must also be nonorientable. These are the curves twists are taken about.
bool admissible(const CurveConfiguration& c, int curve);

// Disjoint two-sided curves cobounding an annulus without punctures.
bool isotopic_disjoint(const CurveConfiguration& c, int a, int b);

using Edge = std::pair<int, int>;  // positions in the vertex list

// True iff i = 1 exactly on the declared edges and 0 on all other pairs.
bool recognize_pattern(const CurveConfiguration& c, const std::vector<int>& curves, const std::vector<Edge>& edges);
std::vector<Edge> path_edges(int n);

// Three two-sided curves meeting pairwise once; NotATriangle otherwise.
TriangleType triangle_type(const CurveConfiguration& c, int a1, int a2, int a3);

struct SeparatingPairResult {
  bool separates = false;
  std::vector<SurfaceInvariants> components;
};

// Requires two distinct disjoint two-sided curves, each nonseparating with
// nonorientable complement; throws PreconditionViolated otherwise.
void check_pair_preconditions(const CurveConfiguration& c, int a1, int a2);
SeparatingPairResult separating_pair_direct(const CurveConfiguration& c, int a1, int a2);

bool chain_separates_disc(const CurveConfiguration& c, const std::vector<int>& chain);

std::vector<int> curve_indices(const CurveConfiguration& c, const std::vector<std::string>& names);

}  // namespace crosscap
