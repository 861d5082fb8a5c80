#pragma once

#include <string>
#include <vector>

#include "crosscap/config.hpp"
#include "crosscap/ribbon.hpp"

namespace crosscap {

std::vector<Face> trace_faces(const CurveConfiguration& c);

// Invariants of the regular neighborhood of the union of `subset`.
SurfaceInvariants neighborhood_invariants(const CurveConfiguration& c, const std::vector<int>& subset);

// Invariants obtained by gluing the regions onto the curve neighborhood.
SurfaceInvariants assembled_invariants(const CurveConfiguration& c);
// As above, raising AssemblyMismatch unless the result equals c.ambient.
SurfaceInvariants assemble(const CurveConfiguration& c);

struct Violation {
  std::string kind;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty iff every structural invariant holds and no bigon exists.
std::vector<Violation> validate_config(const CurveConfiguration& c);
// Only the bigon part of the validation.
std::vector<Violation> find_bigons(const CurveConfiguration& c);

}  // namespace crosscap
