#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace crosscap {

// Classification data of a compact connected surface with punctures.
// genus counts crosscaps when nonorientable and handles when orientable.
struct SurfaceInvariants {
  bool orientable = true;
  int genus = 0;
  int punctures = 0;
  int boundary = 0;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
  friend auto operator<=>(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants orientable_surface(int genus, int punctures = 0, int boundary = 0);
SurfaceInvariants nonorientable_surface(int genus, int punctures = 0, int boundary = 0);

// Throws InvalidSurface on negative fields or a nonorientable genus below one.
void check_surface(const SurfaceInvariants& s);

int euler_characteristic(const SurfaceInvariants& s);
SurfaceInvariants surface_from_chi(bool orientable, int chi, int punctures, int boundary);
SurfaceInvariants orientation_double_cover(const SurfaceInvariants& s);

bool homeomorphic(const SurfaceInvariants& a, const SurfaceInvariants& b);

// Rank of a maximal abelian twist subgroup containing the accompanying system.
int expected_abelian_rank(int genus, int punctures, bool contains_separating_twist);
int expected_abelian_rank_with_s(int genus, int punctures, int s);

// N<g>k<k>b<r> / S<g>k<k>b<r>; k and b parts may be omitted when zero.
SurfaceInvariants parse_surface_literal(std::string_view text);
std::string to_literal(const SurfaceInvariants& s);
// Human form such as N_{3,1}^2 or S_{1,1}.
std::string describe(const SurfaceInvariants& s);

}  // namespace crosscap
