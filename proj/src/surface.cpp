#include "crosscap/surface.hpp"

#include <cctype>
#include <charconv>

#include "crosscap/errors.hpp"

namespace crosscap {

SurfaceInvariants orientable_surface(int genus, int punctures, int boundary) {
  SurfaceInvariants s{true, genus, punctures, boundary};
  check_surface(s);
  return s;
}

SurfaceInvariants nonorientable_surface(int genus, int punctures, int boundary) {
  SurfaceInvariants s{false, genus, punctures, boundary};
  check_surface(s);
  return s;
}

void check_surface(const SurfaceInvariants& s) {
  if (s.genus < 0 || s.punctures < 0 || s.boundary < 0)
    throw InvalidSurface("negative field in " + to_literal(s));
  if (!s.orientable && s.genus < 1)
    throw InvalidSurface("nonorientable surface needs genus >= 1");
}

int euler_characteristic(const SurfaceInvariants& s) {
  const int handles = s.orientable ? 2 * s.genus : s.genus;
  return 2 - handles - s.punctures - s.boundary;
}

SurfaceInvariants surface_from_chi(bool orientable, int chi, int punctures, int boundary) {
  if (punctures < 0 || boundary < 0) throw InvalidSurface("negative puncture or boundary count");
  const int excess = 2 - chi - punctures - boundary;
  if (excess < 0)
    throw NegativeGenus("chi=" + std::to_string(chi) + " too large for " +
                        std::to_string(punctures) + " punctures and " +
                        std::to_string(boundary) + " boundary circles");
  if (orientable) {
    if (excess % 2 != 0)
      throw ParityError("odd defect " + std::to_string(excess) + " for an orientable surface");
    return SurfaceInvariants{true, excess / 2, punctures, boundary};
  }
  if (excess == 0) throw NegativeGenus("nonorientable surface with crosscap number 0");
  return SurfaceInvariants{false, excess, punctures, boundary};
}

SurfaceInvariants orientation_double_cover(const SurfaceInvariants& s) {
  check_surface(s);
  if (s.orientable) throw NotApplicable("double cover requested for an orientable surface");
  if (s.boundary != 0) throw NotApplicable("double cover requested for a surface with boundary");
  return SurfaceInvariants{true, s.genus - 1, 2 * s.punctures, 0};
}

bool homeomorphic(const SurfaceInvariants& a, const SurfaceInvariants& b) { return a == b; }

int expected_abelian_rank(int genus, int punctures, bool contains_separating_twist) {
  if (genus < 5) throw NotApplicable("rank formula needs genus >= 5");
  if (punctures < 0) throw InvalidSurface("negative puncture count");
  if (contains_separating_twist)
    return genus % 2 == 1 ? (3 * genus - 7) / 2 + punctures : (3 * genus - 8) / 2 + punctures;
  return expected_abelian_rank_with_s(genus, punctures, 0);
}

int expected_abelian_rank_with_s(int genus, int punctures, int s) {
  if (punctures < 0 || s < 0) throw InvalidSurface("negative parameter");
  const int twice = 3 * genus - 6 - 2 * s;
  if (twice % 2 != 0)
    throw ParityError("(3g-6-2s)/2 is not an integer for g=" + std::to_string(genus));
  if (twice < 0) throw NotApplicable("s too large for genus " + std::to_string(genus));
  return twice / 2 + punctures;
}

namespace {

int read_number(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos) throw InvalidSurface("expected a number in surface literal '" + std::string(text) + "'");
  int value = 0;
  std::from_chars(text.data() + start, text.data() + pos, value);
  return value;
}

}  // namespace

SurfaceInvariants parse_surface_literal(std::string_view text) {
  if (text.empty()) throw InvalidSurface("empty surface literal");
  SurfaceInvariants s;
  if (text[0] == 'N')
    s.orientable = false;
  else if (text[0] == 'S')
    s.orientable = true;
  else
    throw InvalidSurface("surface literal must start with N or S: '" + std::string(text) + "'");
  std::size_t pos = 1;
  s.genus = read_number(text, pos);
  if (pos < text.size() && text[pos] == 'k') {
    ++pos;
    s.punctures = read_number(text, pos);
  }
  if (pos < text.size() && text[pos] == 'b') {
    ++pos;
    s.boundary = read_number(text, pos);
  }
  if (pos != text.size()) throw InvalidSurface("trailing characters in surface literal '" + std::string(text) + "'");
  check_surface(s);
  return s;
}

std::string to_literal(const SurfaceInvariants& s) {
  return std::string(s.orientable ? "S" : "N") + std::to_string(s.genus) + "k" +
         std::to_string(s.punctures) + "b" + std::to_string(s.boundary);
}

std::string describe(const SurfaceInvariants& s) {
  std::string out = s.orientable ? "S_" : "N_";
  if (s.boundary > 0)
    out += "{" + std::to_string(s.genus) + "," + std::to_string(s.boundary) + "}";
  else
    out += std::to_string(s.genus);
  if (s.punctures > 0) out += "^" + std::to_string(s.punctures);
  return out;
}

}  // namespace crosscap
